/*
 * Copyright 2026 The causal_decomp Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CAUSAL_DECOMP_TEXT_FORMAT_H_
#define CAUSAL_DECOMP_TEXT_FORMAT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace causal_decomp {

// Shortest decimal text that parses back to the same double, so output
// files are byte-identical across reruns.
std::string FormatDouble(double value);

// Parses the whole field as a finite double, or returns nullopt.
std::optional<double> ParseDouble(std::string_view text);

// Splits on `delimiter`; no quoting.
std::vector<std::string_view> SplitFields(std::string_view line,
                                          char delimiter);

}  // namespace causal_decomp

#endif  // CAUSAL_DECOMP_TEXT_FORMAT_H_
