// Copyright 2026 The ttisched Authors
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

#ifndef STCA_ERRORS_HPP_
#define STCA_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace stca {

/// A decision was evaluated against constraints it does not satisfy.
class ConstraintViolationError : public std::runtime_error {
 public:
  explicit ConstraintViolationError(const std::string& what)
      : std::runtime_error(what) {}
};

/// The flat-channel solver was handed a non-flat CSI matrix.
class NonFlatError : public std::runtime_error {
 public:
  explicit NonFlatError(const std::string& what) : std::runtime_error(what) {}
};

/// Exhaustive search (or a policy relying on it) would exceed its size guard.
class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A multiset cannot be turned into a channel-allocation instance
/// (odd element sum).
class NotReducibleError : public std::runtime_error {
 public:
  explicit NotReducibleError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Text input (instance file, config file) failed to parse. Carries the
/// 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace stca

#endif  // STCA_ERRORS_HPP_
