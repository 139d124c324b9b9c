#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace vcg {

using Integer = mpz_class;

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Floor division and the matching nonnegative remainder.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Quotient rounded to nearest, so that |a - q*b| <= |b|/2.
inline Integer round_div(const Integer& a, const Integer& b) {
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Integer r2 = 2 * r;
  if (b > 0 ? r2 > b : r2 < b) q += 1;
  return q;
}

inline bool divides(const Integer& d, const Integer& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Integer powmod(const Integer& base, const Integer& e, const Integer& m) {
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

inline std::int64_t to_i64(const Integer& a) { return a.get_si(); }

inline bool fits_i64(const Integer& a) { return mpz_fits_slong_p(a.get_mpz_t()) != 0; }

}  // namespace vcg
