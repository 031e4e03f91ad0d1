#pragma once

#include <stdexcept>
#include <string>

namespace multisym {

/// Raised when an inclusion-exclusion sum would range over too many
/// contributing partitions. Carries the offending count so callers can
/// report it or retry with a larger cap.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(int count, int cap)
      : std::runtime_error("subset sum over " + std::to_string(count) +
                           " maximal partitions exceeds cap " +
                           std::to_string(cap)),
        count_(count),
        cap_(cap) {}

  int count() const { return count_; }
  int cap() const { return cap_; }

 private:
  int count_;
  int cap_;
};

}  // namespace multisym
