// Copyright 2026 The syncruise Authors
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

#ifndef SCC_KERNEL_ERRORS_HPP_
#define SCC_KERNEL_ERRORS_HPP_

#include <cstddef>
#include <exception>
#include <optional>
#include <string>

namespace scc::kernel {

class KernelError : public std::exception {
 public:
  explicit KernelError(std::string message) : message_(std::move(message)) { refresh(); }

  const char* what() const noexcept override { return what_.c_str(); }
  const std::string& message() const { return message_; }

  // Set by run_trace before rethrowing.
  std::optional<std::size_t> tick() const { return tick_; }
  void set_tick(std::size_t tick) {
    tick_ = tick;
    refresh();
  }

 private:
  void refresh() {
    what_ = tick_ ? "tick " + std::to_string(*tick_) + ": " + message_ : message_;
  }

  std::string message_;
  std::string what_;
  std::optional<std::size_t> tick_;
};

/// The micro-step fixpoint stalled with signals whose status cannot be decided.
class CausalityError : public KernelError {
 public:
  using KernelError::KernelError;
};

/// Two different values emitted on one valued signal in one instant.
class MultipleEmitConflict : public KernelError {
 public:
  using KernelError::KernelError;
};

class UndeclaredSignal : public KernelError {
 public:
  using KernelError::KernelError;
};

/// The program failed static validation; message lists the diagnostics.
class InvalidProgram : public KernelError {
 public:
  using KernelError::KernelError;
};

}  // namespace scc::kernel

#endif  // SCC_KERNEL_ERRORS_HPP_
