#include "vcg/coefficients.hpp"

#include "vcg/arith.hpp"
#include "vcg/errors.hpp"

namespace vcg {

std::string Coefficients::describe() const {
  std::string base = modulus == 0 ? "Z" : "Z_" + modulus.get_str();
  return trivial() ? base : base + " (twisted)";
}

Coefficients Coefficients::integers_mod(const Integer& m) {
  if (m < 1) throw ValidationError("coefficient modulus must be ≥ 1");
  Coefficients c;
  c.modulus = m;
  return c;
}

Coefficients Coefficients::twisted(const FiniteGroup& g, std::int64_t a, std::int64_t c_u, std::int64_t r,
                                   std::int64_t r_x, std::int64_t r_y) {
  if (a < 1) throw ValidationError("twisted coefficients: a ≥ 1 violated");
  Coefficients c;
  c.modulus = Integer(static_cast<long>(a));
  c.action.resize(g.order());
  for (std::uint32_t k = 0; k < g.order(); ++k) {
    const Element& e = g.elements()[k];
    std::int64_t v = powmod64(c_u, e.u(), a);
    v = mod64(static_cast<std::int64_t>(static_cast<__int128>(v) * powmod64(r, e.v(), a) % a), a);
    v = static_cast<std::int64_t>(static_cast<__int128>(v) * powmod64(r_x, e.s(), a) % a);
    v = static_cast<std::int64_t>(static_cast<__int128>(v) * powmod64(r_y, e.e(), a) % a);
    if (gcd64(v, a) != 1 && a > 1) throw ValidationError("twisted coefficients: multiplier of " + to_string(g.spec(), e) + " is not a unit mod " + std::to_string(a));
    c.action[k] = v;
  }
  for (std::uint32_t x = 0; x < g.order(); ++x)
    for (std::uint32_t y = 0; y < g.order(); ++y)
      if (mod64(c.action[g.mul(x, y)], a) !=
          static_cast<std::int64_t>(static_cast<__int128>(c.action[x]) * c.action[y] % a))
        throw ValidationError("twisted coefficients: action is not a homomorphism at g=" + to_string(g.spec(), g.elements()[x]) +
                              ", h=" + to_string(g.spec(), g.elements()[y]));
  return c;
}

}  // namespace vcg
