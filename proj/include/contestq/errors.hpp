// Copyright 2026 The contestq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONTESTQ_ERRORS_HPP_
#define CONTESTQ_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace contestq {

// Malformed input: bad game file, missing table entry, invalid profile.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// An operation was called on a game outside its domain, e.g. the potential
// on a payment function that is not player-invariant and oblivious.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what)
      : std::runtime_error(what) {}
};

// Exhaustive enumeration refused because the state space exceeds the cap.
class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace contestq

#endif  // CONTESTQ_ERRORS_HPP_
