// Copyright 2026 The xeop Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef XEOP_SRC_PARALLEL_HPP
#define XEOP_SRC_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <mutex>

namespace xeop::detail {

// Exceptions must not cross an OpenMP region boundary. Keeps the one thrown
// at the lowest loop index so the rethrown error does not depend on thread
// scheduling.
class LoopExceptions {
 public:
  template <class F>
  void run(std::ptrdiff_t index, F&& body) noexcept {
    try {
      body();
    } catch (...) {
      std::lock_guard lock(mutex_);
      if (!error_ || index < index_) {
        error_ = std::current_exception();
        index_ = index;
      }
    }
  }

  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr error_;
  std::ptrdiff_t index_ = 0;
};

}  // namespace xeop::detail

#endif  // XEOP_SRC_PARALLEL_HPP
