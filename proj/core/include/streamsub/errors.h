// Copyright 2026 The Authors.
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

#ifndef STREAMSUB_ERRORS_H_
#define STREAMSUB_ERRORS_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace streamsub {

// Malformed input text. Carries the 1-based line number of the offending
// line (0 when the problem is not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& message);

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Input that parses but is unusable (non-finite numbers, empty sets, ...).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation would exceed a configured size guard.
class SizeError : public std::length_error {
 public:
  SizeError(const std::string& message, std::uint64_t required,
            std::uint64_t limit);

  std::uint64_t required() const { return required_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t required_;
  std::uint64_t limit_;
};

// An algorithm or generator parameter is out of its admissible range.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace streamsub

#endif  // STREAMSUB_ERRORS_H_
