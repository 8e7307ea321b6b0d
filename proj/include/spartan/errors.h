// Copyright 2026 The Spartan Authors
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

#ifndef SPARTAN_ERRORS_H_
#define SPARTAN_ERRORS_H_

#include <stdexcept>
#include <string>

namespace spartan {

// Malformed input text (edge list or JSON graph).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Input parsed but violates the simple-graph model (self-loop, duplicate
// edge, unknown label).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its documented domain.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An internal cross-check failed. Always a bug, never bad user input.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A configured budget (state count, cover cap, subset cap) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spartan

#endif  // SPARTAN_ERRORS_H_
