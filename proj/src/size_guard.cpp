#include "opengames/size_guard.hpp"

#include <atomic>
#include <limits>
#include <string>

#include "opengames/errors.hpp"

namespace og {

namespace {
std::atomic<std::size_t> g_cap{kDefaultSizeCap};
}

std::size_t size_cap() { return g_cap.load(std::memory_order_relaxed); }

void set_size_cap(std::size_t cap) {
  g_cap.store(cap, std::memory_order_relaxed);
}

void check_size(std::size_t count, std::string_view what) {
  const std::size_t cap = size_cap();
  if (count > cap) throw SizeGuardExceeded(std::string(what), count, cap);
}

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  if (a == 0 || b == 0) return 0;
  if (a > kMax / b) return kMax;
  return a * b;
}

std::size_t saturating_pow(std::size_t base, std::size_t exponent) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    result = saturating_mul(result, base);
    if (result == 0) return 0;
  }
  return result;
}

ScopedSizeCap::ScopedSizeCap(std::size_t cap) : previous_(size_cap()) {
  set_size_cap(cap);
}

ScopedSizeCap::~ScopedSizeCap() { set_size_cap(previous_); }

}  // namespace og
