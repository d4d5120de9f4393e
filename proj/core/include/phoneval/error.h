// Copyright 2026 The Phoneval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PHONEVAL_ERROR_H_
#define PHONEVAL_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace phoneval {

// Malformed input text. `line` is 1-based; 0 means "no line information".
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message, int line = 0)
      : std::runtime_error(line > 0
                               ? "line " + std::to_string(line) + ": " + message
                               : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// A token that cannot be folded to an inventory phone. `position` is the
// 0-based index of the token in its sequence.
class TokenError : public std::runtime_error {
 public:
  TokenError(std::string_view token, std::size_t position)
      : std::runtime_error("unmappable token '" + std::string(token) +
                           "' at position " + std::to_string(position)),
        token_(token),
        position_(position) {}

  const std::string& token() const { return token_; }
  std::size_t position() const { return position_; }

 private:
  std::string token_;
  std::size_t position_;
};

}  // namespace phoneval

#endif  // PHONEVAL_ERROR_H_
