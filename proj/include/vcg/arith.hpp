#pragma once

#include <cstdint>

// Word-size arithmetic on group parameters (moduli, exponents, residues).
namespace vcg {

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
std::int64_t mod64(std::int64_t a, std::int64_t m);
std::int64_t powmod64(std::int64_t base, std::int64_t e, std::int64_t m);
// gcd(x^j - 1, m) without forming x^j; m >= 1.
std::int64_t gcd_pow_minus_one(std::int64_t x, std::int64_t j, std::int64_t m);
// Multiplicative order of x modulo m; requires gcd(x, m) = 1. Order modulo 1 is 1.
std::int64_t mult_order(std::int64_t x, std::int64_t m);

}  // namespace vcg
