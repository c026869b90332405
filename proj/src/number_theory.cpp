#include "shiftlab/number_theory.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace shiftlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto b : bases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (auto a : bases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t prime_below_power_of_two(unsigned bits) {
  if (bits < 3 || bits > 62) throw std::invalid_argument("prime_below_power_of_two: bits out of range");
  std::uint64_t candidate = (std::uint64_t{1} << bits) - 1;
  while (!is_prime(candidate)) candidate -= 2;
  return candidate;
}

std::uint64_t binomial(unsigned n, unsigned k) {
  static const std::vector<std::vector<std::uint64_t>> table = [] {
    std::vector<std::vector<std::uint64_t>> t(65, std::vector<std::uint64_t>(65, 0));
    for (unsigned i = 0; i <= 64; ++i) {
      t[i][0] = 1;
      for (unsigned j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return t;
  }();
  if (k > n || n > 64) return 0;
  return table[n][k];
}

}  // namespace shiftlab
