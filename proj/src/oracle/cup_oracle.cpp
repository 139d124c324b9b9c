#include <stdexcept>

#include "vcg/errors.hpp"
#include "vcg/oracle.hpp"

namespace vcg {
namespace {

// A generating class of the family-1 ring as a class in H^z(Z; H^{2β}(Z_b; H^{2α}(Z_a; Z))),
// represented by the integer value of its cochain at 1.
struct Rep {
  int z = 0;
  std::int64_t b_half = 0, a_half = 0;
  Integer value = 1;
};

Integer pow_minus_one(std::int64_t c, std::int64_t j) {
  Integer p;
  mpz_pow_ui(p.get_mpz_t(), Integer(static_cast<long>(c)).get_mpz_t(), static_cast<unsigned long>(j));
  return p - 1;
}

Rep representative(const DerivedInvariants& inv, const Symbol& s) {
  const Integer a = static_cast<long>(inv.spec.a), b = static_cast<long>(inv.spec.b);
  const std::int64_t j = s.index;
  switch (s.gen) {
    case Gen::One: return {0, 0, 0, 1};
    case Gen::Eta: return {1, 0, 0, 1};
    case Gen::PhiA: return {0, 0, j, a / gcd(inv.delta(j), pow_minus_one(inv.theta.c_a, j))};
    case Gen::PhiB: return {0, j, 0, b / gcd(b, pow_minus_one(inv.theta.c_b, j))};
    case Gen::PsiA: return {1, 0, j, a / inv.delta(j)};
    case Gen::PsiB: return {1, j, 0, 1};
    default: throw RingError("paper_cup_oracle: not a family-1 generator");
  }
}

}  // namespace

CohClass paper_cup_oracle(const GroupSpec& spec, const ThetaSpec& theta, const Symbol& lhs, const Symbol& rhs) {
  if (family_of(spec) != 1) throw ValidationError("paper_cup_oracle: a Metacyclic kernel is required");
  Ring ring(spec, theta);
  ring.check(lhs);
  ring.check(rhs);
  const DerivedInvariants& inv = ring.inv();
  const int degree = symbol_degree(lhs) + symbol_degree(rhs);
  Rep x = representative(inv, lhs), y = representative(inv, rhs);

  Rep out{x.z + y.z, x.b_half + y.b_half, x.a_half + y.a_half, x.value * y.value};
  // H^2 of Z vanishes, and H^{2β}(Z_b; H^{2α}(Z_a; Z)) = 0 for α, β > 0 since gcd(a, b) = 1.
  if (out.z >= 2 || (out.a_half > 0 && out.b_half > 0)) return CohClass(degree);
  // Two-term resolution of Z: Δ_{10}(1) = 1 ⊗ s, so s acts on the right factor's coefficients.
  // Both cyclic levels only see even degrees, where Δ_{pq}(1) = 1 ⊗ 1.
  if (x.z == 1 && y.z == 0) {
    if (y.a_half > 0) out.value *= pow_minus_one(inv.theta.c_a, y.a_half) + 1;
    if (y.b_half > 0) out.value *= pow_minus_one(inv.theta.c_b, y.b_half) + 1;
  }

  Symbol target;
  Integer ambient = 0;
  if (out.a_half > 0) {
    target = {out.z ? Gen::PsiA : Gen::PhiA, out.a_half};
    ambient = static_cast<long>(spec.a);
  } else if (out.b_half > 0) {
    target = {out.z ? Gen::PsiB : Gen::PhiB, out.b_half};
    ambient = static_cast<long>(spec.b);
  } else {
    target = {out.z ? Gen::Eta : Gen::One, 0};
  }
  const Rep t = representative(inv, target);
  Integer v = ambient == 0 ? out.value : mod(out.value, ambient);
  if (!divides(t.value, v)) throw std::logic_error("paper_cup_oracle: product is not a multiple of " + ring.name(target));
  return ring.make({{target, v / t.value}}, degree);
}

}  // namespace vcg
