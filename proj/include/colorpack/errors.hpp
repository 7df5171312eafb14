// Copyright 2026 The colorpack Authors.
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

#ifndef COLORPACK_ERRORS_HPP_
#define COLORPACK_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace colorpack {

// Input exceeds an exhaustive-search cap (oracles are desk-scale only).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An online player (colorer or packer) broke the rules of its game:
// a color completed a monochromatic edge, or a bin went over capacity.
class ValidityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation is not defined for the instance's vector mode.
class UnsupportedModeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  explicit ParseError(const std::string& message)
      : std::runtime_error(message), line_(0) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace colorpack

#endif  // COLORPACK_ERRORS_HPP_
