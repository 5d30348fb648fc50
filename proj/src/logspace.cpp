#include "hhnet/logspace.hpp"

#include <array>

namespace hhnet {

namespace {

constexpr int kTableSize = 256;

const std::array<double, kTableSize> &factorial_table() {
  static const std::array<double, kTableSize> table = [] {
    std::array<double, kTableSize> t{};
    t[0] = 0.0;
    for (int i = 1; i < kTableSize; ++i) t[i] = t[i - 1] + std::log(double(i));
    return t;
  }();
  return table;
}

}  // namespace

double log_factorial(int n) {
  assert(n >= 0);
  if (n < kTableSize) return factorial_table()[n];
  return std::lgamma(double(n) + 1.0);
}

}  // namespace hhnet
