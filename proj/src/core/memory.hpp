#pragma once

#include <cstddef>
#include <string>

#include "errors.hpp"

namespace mace4 {

// Byte accounting for the large search structures. A negative limit means
// no limit. Charges past the limit throw MemoryLimitExceeded.
class MemoryGuard {
 public:
  explicit MemoryGuard(long long limit_megs = -1)
      : limit_(limit_megs < 0 ? -1 : limit_megs * 1024 * 1024) {}

  void charge(std::size_t bytes) {
    current_ += static_cast<long long>(bytes);
    if (current_ > peak_) peak_ = current_;
    if (limit_ >= 0 && current_ > limit_) {
      throw MemoryLimitExceeded("memory limit of " + std::to_string(limit_ / (1024 * 1024)) +
                                " megabytes exceeded");
    }
  }
  void release(std::size_t bytes) {
    current_ -= static_cast<long long>(bytes);
    if (current_ < 0) current_ = 0;
  }

  long long current() const { return current_; }
  long long peak() const { return peak_; }
  long long limit() const { return limit_; }

 private:
  long long limit_;
  long long current_ = 0;
  long long peak_ = 0;
};

}  // namespace mace4
