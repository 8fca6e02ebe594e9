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

#ifndef CAUSAL_DECOMP_ERRORS_H_
#define CAUSAL_DECOMP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace causal_decomp {

// Base of every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A family of subsets that cannot be turned into a lattice element.
class InvalidAntichainError : public Error {
 public:
  using Error::Error;
};

// Requested lattice is too large to enumerate.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Antichain or node not present in a lattice.
class LookupError : public Error {
 public:
  using Error::Error;
};

// A subset table is missing a value for some non-empty subset.
class IncompleteMeasureError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A measure that must be monotone on the redundancy order is not.
class MonotonicityError : public Error {
 public:
  using Error::Error;
};

// An object was used before its required state was prepared.
class StateError : public Error {
 public:
  using Error::Error;
};

// Malformed input document. The message carries the location.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace causal_decomp

#endif  // CAUSAL_DECOMP_ERRORS_H_
