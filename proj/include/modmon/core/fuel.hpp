#pragma once

#include <cstddef>

namespace modmon {

// Step budget. Every rewrite step consumes one unit; running out is an
// outcome callers must handle, never a silent stop.
class Fuel {
 public:
  explicit Fuel(std::size_t steps) : remaining_(steps) {}

  std::size_t remaining() const { return remaining_; }
  bool exhausted() const { return remaining_ == 0; }
  bool consume() {
    if (remaining_ == 0) return false;
    --remaining_;
    return true;
  }

 private:
  std::size_t remaining_;
};

inline constexpr std::size_t kDefaultFuel = 10000;

// Normalizers give up, as if out of fuel, once an intermediate term grows
// past this many nodes.
inline constexpr std::size_t kMaxTermSize = 1 << 11;

}  // namespace modmon
