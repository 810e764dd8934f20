// Copyright 2026 The lclt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LCLT_ERRORS_HPP_
#define LCLT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace lclt {

// Bad arguments: out-of-range parameters, malformed files, shape mismatch.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computed quantity violated an invariant it must satisfy (reality of a
// coefficient table, failed branch continuation, ...).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A comparison was refused because the inputs do not describe the same model
// closely enough for the comparison to mean anything.
class GateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw ValidationError(what);
}

}  // namespace lclt

#endif  // LCLT_ERRORS_HPP_
