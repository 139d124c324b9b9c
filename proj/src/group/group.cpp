#include "vcg/group.hpp"

#include <algorithm>
#include <sstream>

#include "vcg/arith.hpp"
#include "vcg/errors.hpp"

namespace vcg {

GroupSpec GroupSpec::cyclic(std::int64_t m) {
  GroupSpec s;
  s.variant = Variant::Cyclic;
  s.m = m;
  return s;
}

GroupSpec GroupSpec::metacyclic(std::int64_t a, std::int64_t b, std::int64_t r) {
  GroupSpec s;
  s.variant = Variant::Metacyclic;
  s.a = a;
  s.b = b;
  s.r = r;
  return s;
}

GroupSpec GroupSpec::quaternion(std::int64_t i) {
  GroupSpec s;
  s.variant = Variant::Quaternion;
  s.i = i;
  return s;
}

GroupSpec GroupSpec::zb_times_q(std::int64_t b, std::int64_t i) {
  GroupSpec s;
  s.variant = Variant::ZbTimesQ;
  s.b = b;
  s.i = i;
  return s;
}

GroupSpec GroupSpec::zazbq(std::int64_t a, std::int64_t b, std::int64_t i, std::int64_t r, std::int64_t r_x,
                           std::int64_t r_y) {
  GroupSpec s;
  s.variant = Variant::ZaZbQ;
  s.a = a;
  s.b = b;
  s.i = i;
  s.r = r;
  s.r_x = r_x;
  s.r_y = r_y;
  return s;
}

std::int64_t GroupSpec::order() const {
  switch (variant) {
    case Variant::Cyclic: return m;
    case Variant::Metacyclic: return a * b;
    case Variant::Quaternion: return std::int64_t(1) << i;
    case Variant::ZbTimesQ: return b << i;
    case Variant::ZaZbQ: return (a * b) << i;
  }
  return 0;
}

std::string GroupSpec::name() const {
  std::ostringstream os;
  switch (variant) {
    case Variant::Cyclic: os << "Cyclic(" << m << ")"; break;
    case Variant::Metacyclic: os << "Metacyclic{" << a << "," << b << "," << r << "}"; break;
    case Variant::Quaternion: os << "Quaternion{" << i << "}"; break;
    case Variant::ZbTimesQ: os << "ZbTimesQ{" << b << "," << i << "}"; break;
    case Variant::ZaZbQ:
      os << "ZaZbQ{" << a << "," << b << "," << i << "," << r << "," << r_x << "," << r_y << "}";
      break;
  }
  return os.str();
}

QuaternionImages ThetaSpec::quaternion_images() const {
  if (q_images) return *q_images;
  return {k, 0, l, 1};
}

std::string ThetaSpec::describe() const {
  std::ostringstream os;
  os << "θ(c=" << c << ",c_a=" << c_a << ",c_b=" << c_b << ",c_x=" << c_x << ",c_y=" << c_y;
  if (q_images)
    os << ",x↦x^" << q_images->x_s << "y^" << q_images->x_e << ",y↦x^" << q_images->y_s << "y^" << q_images->y_e;
  else
    os << ",k=" << k << ",ℓ=" << l;
  os << ")";
  return os.str();
}

namespace {

std::int64_t za_modulus(const GroupSpec& s) { return s.variant == Variant::Cyclic ? s.m : s.a; }

bool has_za(const GroupSpec& s) {
  return s.variant == Variant::Cyclic || s.variant == Variant::Metacyclic || s.variant == Variant::ZaZbQ;
}

bool has_zb(const GroupSpec& s) {
  return s.variant == Variant::Metacyclic || s.variant == Variant::ZbTimesQ || s.variant == Variant::ZaZbQ;
}

// Multiplier by which b^v x^s y^e acts on the Z_a coordinate.
std::int64_t action_on_za(const GroupSpec& s, const Element& g) {
  switch (s.variant) {
    case Variant::Metacyclic: return powmod64(s.r, g.v(), s.a);
    case Variant::ZaZbQ:
      return mod64(static_cast<std::int64_t>(static_cast<__int128>(powmod64(s.r, g.v(), s.a)) *
                                             powmod64(s.r_x, g.s(), s.a) % s.a * powmod64(s.r_y, g.e(), s.a) % s.a),
                   s.a);
    default: return 1;
  }
}

std::array<std::int64_t, 4> radix_of(const GroupSpec& s) {
  std::array<std::int64_t, 4> r{1, 1, 1, 1};
  if (has_za(s)) r[0] = za_modulus(s);
  if (has_zb(s)) r[1] = s.b;
  if (s.has_quaternion()) {
    r[2] = s.x_order();
    r[3] = 2;
  }
  return r;
}

}  // namespace

Element identity_element() { return Element{}; }

Element reduce(const GroupSpec& spec, Element g) {
  auto r = radix_of(spec);
  for (int k = 0; k < 4; ++k) g.c[k] = mod64(g.c[k], r[k]);
  return g;
}

Element multiply(const GroupSpec& spec, const Element& g, const Element& h) {
  Element out;
  if (has_za(spec)) {
    std::int64_t ma = za_modulus(spec);
    out.c[0] = mod64(static_cast<std::int64_t>((g.u() + static_cast<__int128>(action_on_za(spec, g)) * h.u()) % ma), ma);
  }
  if (has_zb(spec)) out.c[1] = mod64(g.v() + h.v(), spec.b);
  if (spec.has_quaternion()) {
    std::int64_t n = spec.x_order();
    std::int64_t s = g.s() + (g.e() ? -h.s() : h.s()) + (g.e() && h.e() ? n / 2 : 0);
    out.c[2] = mod64(s, n);
    out.c[3] = g.e() ^ h.e();
  }
  return out;
}

Element inverse(const GroupSpec& spec, const Element& g) {
  // Q-part first, then solve for the Z_a coordinate.
  Element q;
  if (spec.has_quaternion()) {
    std::int64_t n = spec.x_order();
    if (g.e() == 0) {
      q.c[2] = mod64(-g.s(), n);
    } else {
      // (x^s y)^{-1} = y^{-1} x^{-s} = x^{n/2} y x^{-s} = x^{n/2 + s} y
      q.c[2] = mod64(g.s() + n / 2, n);
      q.c[3] = 1;
    }
  }
  if (has_zb(spec)) q.c[1] = mod64(-g.v(), spec.b);
  if (has_za(spec)) {
    // g·h = 1 needs u_g + β(g)·u_h ≡ 0, β(g) a unit.
    std::int64_t ma = za_modulus(spec);
    std::int64_t beta = action_on_za(spec, g);
    std::int64_t inv_beta = ma == 1 ? 0 : powmod64(beta, mult_order(beta, ma) - 1, ma);
    q.c[0] = mod64(static_cast<std::int64_t>(static_cast<__int128>(-g.u()) * inv_beta % ma), ma);
  }
  return q;
}

Element power(const GroupSpec& spec, const Element& g, std::int64_t n) {
  Element base = n < 0 ? inverse(spec, g) : g;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  Element result = identity_element();
  while (e) {
    if (e & 1) result = multiply(spec, result, base);
    base = multiply(spec, base, base);
    e >>= 1;
  }
  return result;
}

std::string to_string(const GroupSpec& spec, const Element& g) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  auto put = [&](const char* label, std::int64_t v) {
    os << (first ? "" : ",") << label << v;
    first = false;
  };
  if (has_za(spec)) put(spec.variant == Variant::Cyclic ? "" : "u=", g.u());
  if (has_zb(spec)) put("v=", g.v());
  if (spec.has_quaternion()) {
    put("x^", g.s());
    put("y^", g.e());
  }
  os << ")";
  return os.str();
}

namespace {

Element unit_a(const GroupSpec&) { return Element{{1, 0, 0, 0}}; }
Element unit_b(const GroupSpec&) { return Element{{0, 1, 0, 0}}; }
Element gen_x(const GroupSpec&) { return Element{{0, 0, 1, 0}}; }
Element gen_y(const GroupSpec&) { return Element{{0, 0, 0, 1}}; }

Element q_word(const GroupSpec& spec, std::int64_t xs, std::int64_t ye) {
  return multiply(spec, power(spec, gen_x(spec), xs), power(spec, gen_y(spec), ye));
}

}  // namespace

std::vector<Element> standard_generators(const GroupSpec& spec) {
  std::vector<Element> gens;
  auto push = [&](const Element& g) {
    Element r = reduce(spec, g);
    if (!(r == identity_element())) gens.push_back(r);
  };
  if (has_za(spec)) push(unit_a(spec));
  if (has_zb(spec)) push(unit_b(spec));
  if (spec.has_quaternion()) {
    push(gen_x(spec));
    push(gen_y(spec));
  }
  return gens;
}

Element apply_theta(const GroupSpec& spec, const ThetaSpec& theta, const Element& g) {
  Element img_a{}, img_b{}, img_x{}, img_y{};
  if (has_za(spec)) img_a = reduce(spec, Element{{theta.c_a, 0, 0, 0}});
  if (has_zb(spec)) img_b = reduce(spec, Element{{spec.variant == Variant::ZbTimesQ ? 0 : theta.c, theta.c_b, 0, 0}});
  if (spec.has_quaternion()) {
    QuaternionImages qi = theta.quaternion_images();
    Element za_x{}, za_y{};
    if (has_za(spec)) {
      za_x = reduce(spec, Element{{theta.c_x, 0, 0, 0}});
      za_y = reduce(spec, Element{{theta.c_y, 0, 0, 0}});
    }
    img_x = multiply(spec, za_x, q_word(spec, qi.x_s, qi.x_e));
    img_y = multiply(spec, za_y, q_word(spec, qi.y_s, qi.y_e));
  }
  Element out = power(spec, img_a, g.u());
  out = multiply(spec, out, power(spec, img_b, g.v()));
  out = multiply(spec, out, power(spec, img_x, g.s()));
  out = multiply(spec, out, power(spec, img_y, g.e()));
  return out;
}

void validate(const GroupSpec& s) {
  std::vector<std::string> bad;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what + " violated");
  };
  auto positive = [&](std::int64_t v, const char* name) {
    if (v < 1) bad.push_back(std::string(name) + " ≥ 1 violated");
  };
  switch (s.variant) {
    case Variant::Cyclic:
      positive(s.m, "m");
      break;
    case Variant::Metacyclic:
      positive(s.a, "a");
      positive(s.b, "b");
      if (!bad.empty()) break;
      need(gcd64(s.a, s.b) == 1, "gcd(a,b)=1");
      need(gcd64(s.a, mod64(s.r - 1, s.a) * s.b) == 1 || s.a == 1, "gcd(a,(r−1)·b)=1");
      need(powmod64(s.r, s.b, s.a) == mod64(1, s.a), "r^b ≡ 1 (mod a)");
      break;
    case Variant::Quaternion:
      need(s.i >= 3, "i ≥ 3");
      need(s.i <= 40, "i ≤ 40");
      break;
    case Variant::ZbTimesQ:
      positive(s.b, "b");
      need(s.i >= 3, "i ≥ 3");
      need(s.i <= 40, "i ≤ 40");
      if (s.b >= 1) need(gcd64(s.b, 2) == 1, "gcd(ab,2)=1");
      break;
    case Variant::ZaZbQ: {
      positive(s.a, "a");
      positive(s.b, "b");
      need(s.i >= 3, "i ≥ 3");
      need(s.i <= 40, "i ≤ 40");
      if (!bad.empty()) break;
      need(gcd64(s.a, s.b) == 1, "gcd(a,b)=1");
      need(gcd64(s.a * s.b, 2) == 1, "gcd(ab,2)=1");
      std::int64_t rb = powmod64(s.r, s.b, s.a), rx2 = powmod64(s.r_x, 2, s.a), ry2 = powmod64(s.r_y, 2, s.a);
      need(rb == rx2 && rx2 == ry2, "r^b ≡ r_x^2 ≡ r_y^2 (mod a)");
      // xyx = y forces r_x^2 ≡ 1, so the common value above must be 1 for β to be a homomorphism.
      need(rx2 == mod64(1, s.a), "β homomorphism: r_x^2 ≡ 1 (mod a)");
      need(rb == mod64(1, s.a), "β homomorphism: r^b ≡ 1 (mod a)");
      need(ry2 == mod64(1, s.a), "β homomorphism: r_y^2 ≡ 1 (mod a)");
      break;
    }
  }
  if (!bad.empty()) {
    std::string msg = s.name() + ": ";
    for (std::size_t k = 0; k < bad.size(); ++k) msg += (k ? "; " : "") + bad[k];
    throw ValidationError(msg);
  }
}

namespace {

// θ(1) is a homomorphism iff the generator images satisfy the defining relations, and
// it is bijective iff it is bijective on Z_a and on the quotient Z_b × Q_{2^i}.
void validate_by_relations(const GroupSpec& spec, const ThetaSpec& theta) {
  auto fail = [&](const std::string& what) {
    throw ValidationError(spec.name() + " " + theta.describe() + ": θ(1) " + what);
  };
  Element A{{1, 0, 0, 0}}, B{{0, 1, 0, 0}}, X{{0, 0, 1, 0}}, Y{{0, 0, 0, 1}};
  auto T = [&](const Element& g) { return apply_theta(spec, theta, g); };
  auto mul = [&](const Element& g, const Element& h) { return multiply(spec, g, h); };
  auto conj = [&](const Element& g, const Element& h) { return mul(mul(g, h), inverse(spec, g)); };
  auto pw = [&](const Element& g, std::int64_t n) { return power(spec, g, n); };
  Element e = identity_element();
  std::int64_t za = spec.variant == Variant::Cyclic ? spec.m : spec.a;
  if (gcd64(mod64(theta.c_a, za), za) != 1 && za > 1) fail("not injective: c_a is not a unit mod " + std::to_string(za));
  if (spec.variant == Variant::Cyclic) return;
  Element ta = T(A);
  if (pw(ta, spec.a) != e) fail("does not preserve a^a = 1");
  if (spec.b > 1 && (spec.variant == Variant::Metacyclic || spec.variant == Variant::ZbTimesQ || spec.variant == Variant::ZaZbQ)) {
    Element tb = T(B);
    if (gcd64(mod64(theta.c_b, spec.b), spec.b) != 1 && spec.b > 1) fail("not surjective: c_b is not a unit mod " + std::to_string(spec.b));
    if (pw(tb, spec.b) != e) fail("does not preserve b^b = 1");
    if (conj(tb, ta) != pw(ta, spec.r)) fail("does not preserve b·a·b⁻¹ = a^r");
    if (spec.has_quaternion()) {
      Element tx = T(X), ty = T(Y);
      if (mul(tb, tx) != mul(tx, tb) || mul(tb, ty) != mul(ty, tb)) fail("does not preserve [b,x] = [b,y] = 1");
    }
  }
  if (!spec.has_quaternion()) return;
  Element tx = T(X), ty = T(Y);
  if (pw(tx, spec.x_order() / 2) != mul(ty, ty)) fail("does not preserve x^{2^{i-2}} = y²");
  if (mul(mul(tx, ty), tx) != ty) fail("does not preserve xyx = y");
  if (spec.variant == Variant::ZaZbQ) {
    if (conj(tx, ta) != pw(ta, spec.r_x)) fail("does not preserve x·a·x⁻¹ = a^{r_x}");
    if (conj(ty, ta) != pw(ta, spec.r_y)) fail("does not preserve y·a·y⁻¹ = a^{r_y}");
  }
  QuaternionImages q = theta.quaternion_images();
  if (spec.i == 3) {
    GroupSpec q8 = GroupSpec::quaternion(3);
    Element qx{{0, 0, q.x_s, q.x_e}}, qy{{0, 0, q.y_s, q.y_e}};
    std::vector<Element> seen;
    for (std::int64_t s = 0; s < 4; ++s)
      for (std::int64_t e = 0; e < 2; ++e) {
        Element img = multiply(q8, power(q8, qx, s), power(q8, qy, e));
        if (std::find(seen.begin(), seen.end(), img) != seen.end()) fail("not bijective on Q_8");
        seen.push_back(img);
      }
    return;
  }
  // Past Q_8 every automorphism of Q_{2^i} is x ↦ x^k (k odd), y ↦ x^ℓ y.
  if (q.x_e != 0 || q.y_e != 1 || q.x_s % 2 == 0) fail("not bijective on Q_{2^i}");
}

}  // namespace

void validate(const GroupSpec& spec, const ThetaSpec& theta) {
  validate(spec);
  std::vector<std::string> bad;
  if (spec.has_quaternion() && !theta.q_images) {
    if (theta.k % 2 == 0) bad.push_back("k odd violated");
    if (theta.l < 0 || theta.l >= spec.x_order()) bad.push_back("0 ≤ ℓ < 2^{i−1} violated");
  }
  if (theta.q_images && !spec.has_quaternion()) bad.push_back("quaternion images given for a group without Q_{2^i}");
  if (!bad.empty()) {
    std::string msg = spec.name() + " " + theta.describe() + ": ";
    for (std::size_t k = 0; k < bad.size(); ++k) msg += (k ? "; " : "") + bad[k];
    throw ValidationError(msg);
  }
  try {
    validate_by_relations(spec, theta);
    return;
  } catch (const ValidationError&) {
    // Small groups: enumerate to report a concrete witness pair.
    if (spec.order() > static_cast<std::int64_t>(FiniteGroup::kDefaultCap)) throw;
  }
  FiniteGroup g = FiniteGroup::build(spec);
  std::size_t n = g.order();
  std::vector<std::uint32_t> img(n);
  std::vector<char> hit(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    img[k] = g.index_of(apply_theta(spec, theta, g.elements()[k]));
    if (hit[img[k]]) {
      throw ValidationError(spec.name() + " " + theta.describe() + ": θ(1) not injective: " +
                            to_string(spec, g.elements()[k]) + " and an earlier element share the image " +
                            to_string(spec, g.elements()[img[k]]));
    }
    hit[img[k]] = 1;
  }
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      if (img[g.mul(x, y)] != g.mul(img[x], img[y]))
        throw ValidationError(spec.name() + " " + theta.describe() + ": θ(1) not a homomorphism: θ(g·h) ≠ θ(g)·θ(h) for g=" +
                              to_string(spec, g.elements()[x]) + ", h=" + to_string(spec, g.elements()[y]));
  validate_by_relations(spec, theta);
}

FiniteGroup FiniteGroup::build(const GroupSpec& spec, std::size_t cap) {
  validate(spec);
  std::int64_t order = spec.order();
  if (order > static_cast<std::int64_t>(cap)) {
    std::ostringstream os;
    os << spec.name() << ": group order " << order << " exceeds the enumeration cap " << cap;
    throw CapacityError(os.str());
  }
  FiniteGroup g;
  g.spec_ = spec;
  g.radix_ = radix_of(spec);
  const auto& r = g.radix_;
  for (std::int64_t u = 0; u < r[0]; ++u)
    for (std::int64_t v = 0; v < r[1]; ++v)
      for (std::int64_t s = 0; s < r[2]; ++s)
        for (std::int64_t e = 0; e < r[3]; ++e) g.elements_.push_back(Element{{u, v, s, e}});
  std::size_t n = g.elements_.size();
  g.table_.resize(n * n);
  g.inverse_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) g.table_[x * n + y] = g.index_of(multiply(spec, g.elements_[x], g.elements_[y]));
    g.inverse_[x] = g.index_of(inverse(spec, g.elements_[x]));
  }
  for (const auto& e : standard_generators(spec)) g.generators_.push_back(g.index_of(e));
  return g;
}

std::uint32_t FiniteGroup::index_of(const Element& g) const {
  std::int64_t idx = 0;
  for (int k = 0; k < 4; ++k) idx = idx * radix_[k] + mod64(g.c[k], radix_[k]);
  return static_cast<std::uint32_t>(idx);
}

std::vector<Element> enumerate(const GroupSpec& spec, std::size_t cap) { return FiniteGroup::build(spec, cap).elements(); }

ThetaMap theta_permutation(const FiniteGroup& group, const ThetaSpec& theta) {
  const GroupSpec& spec = group.spec();
  validate(spec, theta);
  ThetaMap map;
  map.perm.resize(group.order());
  for (std::size_t k = 0; k < group.order(); ++k)
    map.perm[k] = group.index_of(apply_theta(spec, theta, group.elements()[k]));
  if (has_za(spec)) map.theta_a = mod64(theta.c_a, za_modulus(spec));
  if (has_zb(spec)) map.theta_b = mod64(theta.c_b, spec.b);
  if (spec.has_quaternion()) map.theta_q = theta.quaternion_images();
  return map;
}

std::int64_t permutation_order(const std::vector<std::uint32_t>& perm) {
  std::vector<char> seen(perm.size(), 0);
  std::int64_t order = 1;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (seen[k]) continue;
    std::int64_t len = 0;
    for (std::size_t x = k; !seen[x]; x = perm[x]) {
      seen[x] = 1;
      ++len;
    }
    order = lcm64(order, len);
  }
  return order;
}

}  // namespace vcg
