#include "vcg/closed_form.hpp"

#include <sstream>
#include <stdexcept>

#include "vcg/arith.hpp"
#include "vcg/errors.hpp"

namespace vcg {

int family_of(const GroupSpec& spec) {
  switch (spec.variant) {
    case Variant::Metacyclic: return 1;
    case Variant::Quaternion:
    case Variant::ZbTimesQ:
    case Variant::ZaZbQ: return 2;
    default: return 0;
  }
}

GroupSpec as_family_kernel(const GroupSpec& spec) {
  if (spec.variant == Variant::Quaternion) return GroupSpec::zazbq(1, 1, spec.i, 1, 1, 1);
  if (spec.variant == Variant::ZbTimesQ) return GroupSpec::zazbq(1, spec.b, spec.i, 1, 1, 1);
  return spec;
}

namespace {

// For i > 3 every automorphism of Q_{2^i} has the form x ↦ x^k, y ↦ x^ℓ y.
ThetaSpec normalize_theta(const GroupSpec& spec, ThetaSpec theta) {
  if (theta.q_images && spec.has_quaternion() && spec.i > 3) {
    theta.k = mod64(theta.q_images->x_s, spec.x_order());
    theta.l = mod64(theta.q_images->y_s, spec.x_order());
    theta.q_images.reset();
  }
  return theta;
}

std::int64_t za_order(const GroupSpec& s) { return s.variant == Variant::Cyclic ? s.m : s.a; }

Integer I(std::int64_t x) { return Integer(static_cast<long>(x)); }

}  // namespace

Integer DerivedInvariants::delta(std::int64_t j) const {
  std::int64_t a = za_order(spec);
  if (spec.variant == Variant::Cyclic) return I(a);
  return I(gcd_pow_minus_one(spec.r, j, a));
}

Integer DerivedInvariants::epsilon(std::int64_t j) const {
  if (spec.variant != Variant::ZaZbQ) return delta(j);
  std::int64_t a = spec.a;
  std::int64_t e = gcd_pow_minus_one(spec.r, j, a);
  e = gcd64(e, gcd_pow_minus_one(spec.r_x, j, a));
  e = gcd64(e, gcd_pow_minus_one(spec.r_y, j, a));
  return I(e);
}

Integer DerivedInvariants::A(std::int64_t j) const {
  Integer base = family == 2 ? epsilon(j) : delta(j);
  return I(gcd_pow_minus_one(theta.c_a, j, base.get_si()));
}

Integer DerivedInvariants::B(std::int64_t j) const { return I(gcd_pow_minus_one(theta.c_b, j, spec.b)); }

Integer DerivedInvariants::C(std::int64_t j) const {
  return I(gcd_pow_minus_one(k_effective(), j, std::int64_t(1) << spec.i));
}

std::int64_t DerivedInvariants::k_effective() const { return theta.q_images ? 1 : theta.k; }

DerivedInvariants invariants(const GroupSpec& spec_in, const ThetaSpec& theta_in) {
  DerivedInvariants inv;
  inv.spec = as_family_kernel(spec_in);
  inv.family = family_of(inv.spec);
  if (inv.spec.variant == Variant::Cyclic) {
    validate(inv.spec, theta_in);
    inv.theta = theta_in;
    inv.family = 0;
    inv.d_ca = mult_order(theta_in.c_a, inv.spec.m);
    inv.p = inv.d_ca;
    return inv;
  }
  inv.theta = normalize_theta(inv.spec, theta_in);
  validate(inv.spec, inv.theta);
  const GroupSpec& s = inv.spec;
  inv.d = mult_order(s.r, s.a);
  inv.d_ca = mult_order(inv.theta.c_a, s.a);
  inv.d_cb = mult_order(inv.theta.c_b, s.b);
  if (inv.family == 2) {
    inv.d_k = mult_order(inv.k_effective(), std::int64_t(1) << s.i);
    inv.p = lcm64(lcm64(inv.d, inv.d_ca), lcm64(inv.d_cb, inv.d_k));
  } else {
    inv.p = lcm64(lcm64(inv.d, inv.d_ca), inv.d_cb);
  }
  return inv;
}

CohomologyGroup CohomologyGroup::from_summands(std::vector<Summand> s) {
  CohomologyGroup g;
  std::vector<Integer> orders;
  for (const auto& x : s) orders.push_back(x.order);
  g.group = FinAb::from_cyclic(orders);
  g.summands = std::move(s);
  return g;
}

std::string CohomologyGroup::summand_string() const {
  if (summands.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < summands.size(); ++k) {
    if (k) os << " ⊕ ";
    os << summands[k].name;
    if (summands[k].order != 0 && summands[k].name.find('{') != std::string::npos) os << "=Z_" << summands[k].order;
  }
  return os.str();
}

namespace {

Summand zsum() { return {"Z", 0}; }
Summand cyc(const std::string& label, const Integer& order) { return {"Z_{" + label + "}", order}; }
Summand cyc_plain(const Integer& order) { return {"Z_" + order.get_str(), order}; }

std::string sub(const char* name, std::int64_t j) { return std::string(name) + "_" + std::to_string(j); }

}  // namespace

CohomologyGroup finite_cohomology(const GroupSpec& spec, int n) {
  if (n < 0) throw std::invalid_argument("finite_cohomology: negative degree");
  validate(spec);
  if (n == 0) return CohomologyGroup::from_summands({zsum()});
  if (n % 2 == 1) return CohomologyGroup::from_summands({});
  DerivedInvariants inv = invariants(spec, ThetaSpec::identity());
  std::int64_t half = n / 2;
  std::vector<Summand> out;
  switch (spec.variant) {
    case Variant::Cyclic:
      out.push_back(cyc("m", I(spec.m)));
      break;
    case Variant::Metacyclic:
      out.push_back(cyc(sub("δ", half) + "·b", inv.delta(half) * spec.b));
      break;
    case Variant::Quaternion:
    case Variant::ZbTimesQ:
    case Variant::ZaZbQ: {
      const GroupSpec& k = inv.spec;
      if (spec.variant == Variant::ZaZbQ)
        out.push_back(n % 4 == 2 ? cyc(sub("ε", half), inv.epsilon(half)) : cyc(sub("δ", half), inv.delta(half)));
      if (spec.variant != Variant::Quaternion) out.push_back(cyc("b", I(k.b)));
      if (n % 4 == 2) {
        out.push_back(cyc_plain(2));
        out.push_back(cyc_plain(2));
      } else {
        out.push_back(cyc("2^i", Integer(1) << static_cast<unsigned>(k.i)));
      }
      break;
    }
  }
  return CohomologyGroup::from_summands(out);
}

Q8Action q8_h2_action(const GroupSpec& spec_in, const ThetaSpec& theta_in) {
  GroupSpec spec = as_family_kernel(spec_in);
  if (!spec.has_quaternion()) throw ValidationError("q8_h2_action: the group has no quaternion factor");
  ThetaSpec theta = normalize_theta(spec, theta_in);
  validate(spec, theta);
  Q8Action act;
  if (spec.i > 3) {
    act.m[0][1] = static_cast<int>(mod64(theta.l, 2));
  } else {
    // Induced map on (Q_8)_ab = Z_2², by enumeration: locate θ_Q(x), θ_Q(y) among cosets of [Q,Q].
    GroupSpec q = GroupSpec::quaternion(3);
    FiniteGroup g = FiniteGroup::build(q);
    std::size_t n = g.order();
    std::vector<char> comm(n, 0);
    comm[0] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y) {
          std::uint32_t c = g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y)));
          for (std::uint32_t h = 0; h < n; ++h)
            if (comm[h] && !comm[g.mul(h, c)]) {
              comm[g.mul(h, c)] = 1;
              grew = true;
            }
        }
    }
    Element x{{0, 0, 1, 0}}, y{{0, 0, 0, 1}};
    auto coords = [&](const Element& e) {
      for (int al = 0; al < 2; ++al)
        for (int be = 0; be < 2; ++be) {
          Element rep = multiply(q, power(q, x, al), power(q, y, be));
          // e ∈ rep·[Q,Q]  ⇔  rep^{-1}·e ∈ [Q,Q]
          if (comm[g.index_of(multiply(q, inverse(q, rep), e))]) return std::pair<int, int>{al, be};
        }
      throw std::logic_error("q8_h2_action: element outside every coset");
    };
    QuaternionImages qi = theta.quaternion_images();
    Element tx = multiply(q, power(q, x, qi.x_s), power(q, y, qi.x_e));
    Element ty = multiply(q, power(q, x, qi.y_s), power(q, y, qi.y_e));
    auto [a, c] = coords(tx);
    auto [b, d] = coords(ty);
    act.m[0][0] = a;
    act.m[1][0] = c;
    act.m[0][1] = b;
    act.m[1][1] = d;
  }
  int p[2][2] = {{act.m[0][0], act.m[0][1]}, {act.m[1][0], act.m[1][1]}};
  act.order = 1;
  while (!(p[0][0] == 1 && p[0][1] == 0 && p[1][0] == 0 && p[1][1] == 1)) {
    int q2[2][2];
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) q2[r][c] = (p[r][0] * act.m[0][c] + p[r][1] * act.m[1][c]) % 2;
    std::copy(&q2[0][0], &q2[0][0] + 4, &p[0][0]);
    if (++act.order > 6) throw std::logic_error("q8_h2_action: matrix is not invertible");
  }
  act.trivial = act.order == 1;
  return act;
}

CohomologyGroup vz_cohomology(const GroupSpec& spec_in, const ThetaSpec& theta, int n) {
  if (n < 0) throw std::invalid_argument("vz_cohomology: negative degree");
  GroupSpec spec = as_family_kernel(spec_in);
  int family = family_of(spec);
  if (family == 0) throw ValidationError(spec.name() + ": not the kernel of an infinite family");
  DerivedInvariants inv = invariants(spec, theta);
  if (n <= 1) return CohomologyGroup::from_summands({zsum()});
  std::vector<Summand> out;
  if (family == 1) {
    std::int64_t j = n / 2;
    out.push_back(cyc(sub("A", j), inv.A(j)));
    out.push_back(cyc(sub("B", j), inv.B(j)));
    return CohomologyGroup::from_summands(out);
  }
  std::int64_t j = n / 4;
  if (n % 4 <= 1) {
    out.push_back(cyc(sub("A", 2 * j), inv.A(2 * j)));
    out.push_back(cyc(sub("B", 2 * j), inv.B(2 * j)));
    if (spec.i > 3)
      out.push_back(cyc(sub("C", 2 * j), inv.C(2 * j)));
    else
      out.push_back(cyc_plain(8));
    return CohomologyGroup::from_summands(out);
  }
  out.push_back(cyc(sub("A", 2 * j + 1), inv.A(2 * j + 1)));
  out.push_back(cyc(sub("B", 2 * j + 1), inv.B(2 * j + 1)));
  bool trivial;
  if (spec.i > 3) {
    trivial = inv.theta.l % 2 == 0;
  } else {
    Q8Action act = q8_h2_action(spec, theta);
    if (act.order == 3)
      throw ValidationError(spec.name() + " " + theta.describe() +
                            ": θ^(2) has order 3 on H²(Q_8); the four-case table covers trivial and order-2 actions only");
    trivial = act.trivial;
  }
  out.push_back(cyc_plain(2));
  if (trivial) out.push_back(cyc_plain(2));
  return CohomologyGroup::from_summands(out);
}

int symbol_degree(const Symbol& s) {
  switch (s.gen) {
    case Gen::One: return 0;
    case Gen::Eta: return 1;
    case Gen::PhiA:
    case Gen::PhiB:
    case Gen::Alpha:
    case Gen::Beta: return static_cast<int>(2 * s.index);
    case Gen::PsiA:
    case Gen::PsiB: return static_cast<int>(2 * s.index + 1);
    case Gen::Delta: return static_cast<int>(4 * s.index);
    case Gen::GammaDelta:
    case Gen::GammaPrimeDelta: return static_cast<int>(4 * s.index + 2);
  }
  return 0;
}

Integer CohClass::coefficient(const Symbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Integer(0) : it->second;
}

Ring::Ring(const GroupSpec& spec, const std::optional<ThetaSpec>& theta) : spec_(spec) {
  if (theta && spec.variant == Variant::Metacyclic) {
    infinite_ = true;
    inv_ = invariants(spec, *theta);
  } else {
    if (theta) validate(as_family_kernel(spec), *theta);
    validate(spec);
    inv_ = invariants(spec, ThetaSpec::identity());
  }
}

namespace {

bool has_za(Variant v) { return v == Variant::Cyclic || v == Variant::Metacyclic || v == Variant::ZaZbQ; }
bool has_zb(Variant v) { return v == Variant::Metacyclic || v == Variant::ZbTimesQ || v == Variant::ZaZbQ; }
bool has_q(Variant v) { return v == Variant::Quaternion || v == Variant::ZbTimesQ || v == Variant::ZaZbQ; }

Integer exact_div(const Integer& x, const Integer& y) {
  if (y == 0 || !divides(y, x)) throw std::logic_error("ring: inexact structure constant " + x.get_str() + "/" + y.get_str());
  return x / y;
}

}  // namespace

void Ring::check(const Symbol& s) const {
  bool ok = false;
  Variant v = spec_.variant;
  switch (s.gen) {
    case Gen::One: ok = s.index == 0; break;
    case Gen::Eta: ok = infinite_ && s.index == 0; break;
    case Gen::PhiA:
    case Gen::PhiB:
    case Gen::PsiA:
    case Gen::PsiB: ok = infinite_ && s.index >= 1; break;
    case Gen::Alpha: ok = !infinite_ && has_za(v) && s.index >= 1; break;
    case Gen::Beta: ok = !infinite_ && has_zb(v) && s.index >= 1; break;
    case Gen::Delta: ok = !infinite_ && has_q(v) && s.index >= 1; break;
    case Gen::GammaDelta:
    case Gen::GammaPrimeDelta: ok = !infinite_ && has_q(v) && s.index >= 0; break;
  }
  if (!ok) throw RingError("no generator " + name(s) + " in the cohomology ring of " + spec_.name());
}

Integer Ring::order(const Symbol& s) const {
  check(s);
  switch (s.gen) {
    case Gen::One:
    case Gen::Eta: return 0;
    case Gen::PhiA:
    case Gen::PsiA: return inv_.A(s.index);
    case Gen::PhiB:
    case Gen::PsiB: return inv_.B(s.index);
    case Gen::Alpha: return inv_.epsilon(s.index);
    case Gen::Beta: return Integer(static_cast<long>(spec_.b));
    case Gen::Delta: return Integer(1) << static_cast<unsigned>(spec_.i);
    case Gen::GammaDelta:
    case Gen::GammaPrimeDelta: return 2;
  }
  return 0;
}

std::vector<Symbol> Ring::generators_in_degree(int n) const {
  std::vector<Symbol> cand;
  if (n == 0) cand.push_back({Gen::One, 0});
  if (infinite_) {
    if (n == 1) cand.push_back({Gen::Eta, 0});
    if (n >= 2 && n % 2 == 0) {
      cand.push_back({Gen::PhiA, n / 2});
      cand.push_back({Gen::PhiB, n / 2});
    }
    if (n >= 3 && n % 2 == 1) {
      cand.push_back({Gen::PsiA, n / 2});
      cand.push_back({Gen::PsiB, n / 2});
    }
  } else {
    Variant v = spec_.variant;
    if (n >= 2 && n % 2 == 0) {
      if (has_za(v)) cand.push_back({Gen::Alpha, n / 2});
      if (has_zb(v)) cand.push_back({Gen::Beta, n / 2});
    }
    if (has_q(v) && n >= 4 && n % 4 == 0) cand.push_back({Gen::Delta, n / 4});
    if (has_q(v) && n % 4 == 2) {
      cand.push_back({Gen::GammaDelta, n / 4});
      cand.push_back({Gen::GammaPrimeDelta, n / 4});
    }
  }
  std::vector<Symbol> out;
  for (const auto& s : cand)
    if (order(s) != 1) out.push_back(s);
  return out;
}

CohClass Ring::make(const std::map<Symbol, Integer>& terms, int degree) const {
  CohClass c(degree);
  for (const auto& [s, coef] : terms) {
    check(s);
    if (symbol_degree(s) != degree)
      throw RingError(name(s) + " has degree " + std::to_string(symbol_degree(s)) + ", not " + std::to_string(degree));
    Integer o = order(s);
    Integer v = o == 0 ? coef : mod(coef, o);
    if (v != 0) c.terms_[s] = v;
  }
  return c;
}

CohClass Ring::gen(const Symbol& s) const { return make({{s, 1}}, symbol_degree(s)); }

CohClass Ring::add(const CohClass& u, const CohClass& v) const {
  if (u.degree() != v.degree()) throw RingError("cannot add classes of degrees " + std::to_string(u.degree()) + " and " + std::to_string(v.degree()));
  std::map<Symbol, Integer> t = u.terms();
  for (const auto& [s, c] : v.terms()) t[s] += c;
  return make(t, u.degree());
}

CohClass Ring::product(const Symbol& x, const Symbol& y) const {
  check(x);
  check(y);
  if (x.gen == Gen::One) return gen(y);
  if (y.gen == Gen::One) return gen(x);
  return infinite_ ? product_family1(x, y) : product_finite(x, y);
}

CohClass Ring::product_family1(const Symbol& x, const Symbol& y) const {
  int deg = symbol_degree(x) + symbol_degree(y);
  auto is_phi = [](Gen g) { return g == Gen::PhiA || g == Gen::PhiB; };
  // Every swap below moves an even-degree φ past something, so no sign appears.
  if (!is_phi(x.gen)) {
    if (is_phi(y.gen)) return product_family1(y, x);
    return CohClass(deg);
  }
  const Integer a(static_cast<long>(inv_.spec.a)), b(static_cast<long>(inv_.spec.b));
  std::int64_t i = x.index;
  bool xa = x.gen == Gen::PhiA;
  switch (y.gen) {
    case Gen::Eta:
      return xa ? make({{{Gen::PsiA, i}, exact_div(inv_.delta(i), inv_.A(i))}}, deg)
                : make({{{Gen::PsiB, i}, exact_div(b, inv_.B(i))}}, deg);
    case Gen::PhiA:
    case Gen::PhiB: {
      std::int64_t j = y.index;
      if ((y.gen == Gen::PhiA) != xa) return CohClass(deg);
      if (xa) return make({{{Gen::PhiA, i + j}, exact_div(a * inv_.A(i + j), inv_.A(i) * inv_.A(j))}}, deg);
      return make({{{Gen::PhiB, i + j}, exact_div(b * inv_.B(i + j), inv_.B(i) * inv_.B(j))}}, deg);
    }
    case Gen::PsiA:
    case Gen::PsiB: {
      std::int64_t j = y.index;
      if ((y.gen == Gen::PsiA) != xa) return CohClass(deg);
      if (xa) return make({{{Gen::PsiA, i + j}, exact_div(a * inv_.delta(i + j), inv_.delta(j) * inv_.A(i))}}, deg);
      return make({{{Gen::PsiB, i + j}, exact_div(b, inv_.B(i))}}, deg);
    }
    default: return CohClass(deg);
  }
}

CohClass Ring::product_finite(const Symbol& x, const Symbol& y) const {
  int deg = symbol_degree(x) + symbol_degree(y);
  auto q_part = [](Gen g) { return g == Gen::Delta || g == Gen::GammaDelta || g == Gen::GammaPrimeDelta; };
  if (x.gen == Gen::Alpha && y.gen == Gen::Alpha) {
    std::int64_t i = x.index, j = y.index;
    Integer a(static_cast<long>(za_order(spec_)));
    return make({{{Gen::Alpha, i + j}, exact_div(a * inv_.epsilon(i + j), inv_.epsilon(i) * inv_.epsilon(j))}}, deg);
  }
  if (x.gen == Gen::Beta && y.gen == Gen::Beta) return make({{{Gen::Beta, x.index + y.index}, 1}}, deg);
  if (!q_part(x.gen) || !q_part(y.gen)) return CohClass(deg);
  // γ-type: 0 for δ_4^m, 1 for γ_2 δ_4^m, 2 for γ_2' δ_4^m.
  auto kind = [](Gen g) { return g == Gen::Delta ? 0 : g == Gen::GammaDelta ? 1 : 2; };
  int kx = kind(x.gen), ky = kind(y.gen);
  std::int64_t m = x.index + y.index;
  if (kx == 0 || ky == 0) {
    int k = kx + ky;
    Gen g = k == 0 ? Gen::Delta : k == 1 ? Gen::GammaDelta : Gen::GammaPrimeDelta;
    return make({{{g, m}, 1}}, deg);
  }
  Integer half = Integer(1) << static_cast<unsigned>(spec_.i - 1);
  if (kx == 1 && ky == 1) return CohClass(deg);
  if (kx != ky) return make({{{Gen::Delta, m + 1}, half}}, deg);
  return spec_.i > 3 ? make({{{Gen::Delta, m + 1}, half}}, deg) : CohClass(deg);
}

CohClass Ring::cup(const CohClass& u, const CohClass& v) const {
  std::map<Symbol, Integer> acc;
  int deg = u.degree() + v.degree();
  for (const auto& [x, cx] : u.terms())
    for (const auto& [y, cy] : v.terms()) {
      CohClass xy = product(x, y);
      for (const auto& [s, c] : xy.terms()) acc[s] += cx * cy * c;
    }
  return make(acc, deg);
}

std::string Ring::name(const Symbol& s) const {
  auto pow = [](const std::string& base, std::int64_t k, bool always) {
    return always || k != 1 ? base + "^" + std::to_string(k) : base;
  };
  switch (s.gen) {
    case Gen::One: return "1";
    case Gen::Eta: return "η";
    case Gen::PhiA: return pow("φ_a", s.index, true);
    case Gen::PhiB: return pow("φ_b", s.index, true);
    case Gen::PsiA: return pow("ψ_a", s.index, true);
    case Gen::PsiB: return pow("ψ_b", s.index, true);
    case Gen::Alpha: {
      std::string base = pow("α_2", s.index, false);
      if (infinite_ || s.index < 1) return base;
      std::int64_t a = za_order(spec_);
      Integer e = inv_.epsilon(s.index);
      if (e == a) return base;
      return "(" + std::to_string(a) + "/" + e.get_str() + ")" + base;
    }
    case Gen::Beta: return pow("β_2", s.index, false);
    case Gen::Delta: return pow("δ_4", s.index, false);
    case Gen::GammaDelta: return s.index == 0 ? "γ_2" : "γ_2" + pow("δ_4", s.index, false);
    case Gen::GammaPrimeDelta: return s.index == 0 ? "γ_2'" : "γ_2'" + pow("δ_4", s.index, false);
  }
  return "?";
}

std::string Ring::render(const CohClass& c) const {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [s, coef] : c.terms()) {
    if (!out.empty()) out += " + ";
    if (coef != 1) out += coef.get_str();
    out += name(s);
  }
  return out;
}

CohClass cup(const GroupSpec& spec, const std::optional<ThetaSpec>& theta, const CohClass& u, const CohClass& v) {
  return Ring(spec, theta).cup(u, v);
}

Periodicity periodicity(const GroupSpec& spec, const ThetaSpec& theta) {
  GroupSpec k = as_family_kernel(spec);
  int family = family_of(k);
  if (family == 0) throw ValidationError(spec.name() + ": not the kernel of an infinite family");
  DerivedInvariants inv = invariants(k, theta);
  Periodicity out;
  std::int64_t p = inv.p;
  if (family == 1) {
    Ring ring(k, theta);
    out.period = 2 * p;
    out.pclass = ring.make({{{Gen::PhiA, p}, 1}, {{Gen::PhiB, p}, 1}}, static_cast<int>(2 * p));
    out.rendered = ring.render(out.pclass);
    return out;
  }
  Ring ring(k, std::nullopt);
  std::int64_t e = p % 2 == 0 ? p : 2 * p;
  out.period = 2 * e;
  std::map<Symbol, Integer> t{{{Gen::Alpha, e}, 1}, {{Gen::Beta, e}, 1}, {{Gen::Delta, e / 2}, 1}};
  out.pclass = ring.make(t, static_cast<int>(2 * e));
  out.rendered = ring.render(out.pclass);
  return out;
}

RingPresentation ring_presentation(const GroupSpec& spec, const std::optional<ThetaSpec>& theta, int degree_bound) {
  Ring ring(spec, theta);
  RingPresentation out;
  if (degree_bound < 0) {
    if (theta && family_of(as_family_kernel(spec)) != 0)
      degree_bound = static_cast<int>(2 * periodicity(spec, *theta).period + 2);
    else
      degree_bound = 12;
  }
  out.degree_bound = degree_bound;
  for (int n = 0; n <= degree_bound; ++n)
    for (const auto& s : ring.generators_in_degree(n)) out.generators.push_back({s, n, ring.order(s), ring.name(s)});
  for (std::size_t p = 0; p < out.generators.size(); ++p)
    for (std::size_t q = p; q < out.generators.size(); ++q) {
      const auto& x = out.generators[p];
      const auto& y = out.generators[q];
      if (x.symbol.gen == Gen::One || y.symbol.gen == Gen::One || x.degree + y.degree > degree_bound) continue;
      CohClass c = ring.product(x.symbol, y.symbol);
      out.relations.push_back({x.symbol, y.symbol, c, x.name + "·" + y.name + " = " + ring.render(c)});
    }
  return out;
}

}  // namespace vcg
