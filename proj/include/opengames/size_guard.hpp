#pragma once

#include <cstddef>
#include <string_view>

namespace og {

inline constexpr std::size_t kDefaultSizeCap = 1'000'000;

/// Process-wide cap on items produced by any single enumeration.
std::size_t size_cap();
void set_size_cap(std::size_t cap);

/// Throws SizeGuardExceeded when `count` exceeds the cap.
void check_size(std::size_t count, std::string_view what);

// Arithmetic that clamps at SIZE_MAX instead of wrapping.
std::size_t saturating_mul(std::size_t a, std::size_t b);
std::size_t saturating_pow(std::size_t base, std::size_t exponent);

/// Restores the previous cap on scope exit.
class ScopedSizeCap {
 public:
  explicit ScopedSizeCap(std::size_t cap);
  ~ScopedSizeCap();
  ScopedSizeCap(const ScopedSizeCap&) = delete;
  ScopedSizeCap& operator=(const ScopedSizeCap&) = delete;

 private:
  std::size_t previous_;
};

}  // namespace og
