#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vcg/group.hpp"
#include "vcg/integer.hpp"

namespace vcg {

// A cyclic coefficient module Z (modulus 0) or Z_m, with G acting by multipliers.
struct Coefficients {
  Integer modulus = 0;
  std::vector<std::int64_t> action;  // multiplier per element index; empty means trivial

  bool trivial() const { return action.empty(); }
  std::int64_t rho(std::uint32_t g) const { return action.empty() ? 1 : action[g]; }
  std::string describe() const;

  static Coefficients integers() { return {}; }
  static Coefficients integers_mod(const Integer& m);
  // Z_a with a^u b^v x^s y^e acting by c_u^u · r^v · r_x^s · r_y^e. Throws ValidationError unless
  // this is a homomorphism into the units of Z_a.
  static Coefficients twisted(const FiniteGroup& g, std::int64_t a, std::int64_t c_u, std::int64_t r, std::int64_t r_x,
                              std::int64_t r_y);
};

}  // namespace vcg
