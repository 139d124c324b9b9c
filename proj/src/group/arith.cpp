#include "vcg/arith.hpp"

#include <numeric>
#include <stdexcept>

namespace vcg {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

std::int64_t mod64(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t powmod64(std::int64_t base, std::int64_t e, std::int64_t m) {
  if (m == 1) return 0;
  __int128 result = 1, b = mod64(base, m);
  while (e > 0) {
    if (e & 1) result = result * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t gcd_pow_minus_one(std::int64_t x, std::int64_t j, std::int64_t m) {
  return std::gcd(mod64(powmod64(x, j, m) - 1, m), m);
}

std::int64_t mult_order(std::int64_t x, std::int64_t m) {
  if (m == 1) return 1;
  if (std::gcd(mod64(x, m), m) != 1) throw std::invalid_argument("mult_order: not a unit");
  std::int64_t y = mod64(x, m), k = 1;
  while (y != 1) {
    y = static_cast<std::int64_t>(static_cast<__int128>(y) * mod64(x, m) % m);
    ++k;
  }
  return k;
}

}  // namespace vcg
