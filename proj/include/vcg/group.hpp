#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vcg {

enum class Variant { Cyclic, Metacyclic, Quaternion, ZbTimesQ, ZaZbQ };

// A member of one of the finite group families. Parameters not used by a variant stay at 1.
//   Cyclic(m)                  Z_m
//   Metacyclic{a,b,r}          Z_a ⋊ Z_b, 1_b acting by r
//   Quaternion{i}              Q_{2^i} = <x, y | x^{2^{i-2}} = y^2, xyx = y>
//   ZbTimesQ{b,i}              Z_b × Q_{2^i}
//   ZaZbQ{a,b,i,r,r_x,r_y}     Z_a ⋊ (Z_b × Q_{2^i}), 1_b, x, y acting by r, r_x, r_y
struct GroupSpec {
  Variant variant = Variant::Cyclic;
  std::int64_t m = 1, a = 1, b = 1, r = 1, i = 3, r_x = 1, r_y = 1;

  static GroupSpec cyclic(std::int64_t m);
  static GroupSpec metacyclic(std::int64_t a, std::int64_t b, std::int64_t r);
  static GroupSpec quaternion(std::int64_t i);
  static GroupSpec zb_times_q(std::int64_t b, std::int64_t i);
  static GroupSpec zazbq(std::int64_t a, std::int64_t b, std::int64_t i, std::int64_t r, std::int64_t r_x,
                         std::int64_t r_y);

  bool has_quaternion() const { return variant == Variant::Quaternion || variant == Variant::ZbTimesQ || variant == Variant::ZaZbQ; }
  // Order of x in Q_{2^i}.
  std::int64_t x_order() const { return std::int64_t(1) << (i - 1); }
  std::int64_t order() const;
  std::string name() const;
};

// θ_Q(x) = x^{x_s} y^{x_e}, θ_Q(y) = x^{y_s} y^{y_e}: arbitrary images, used for Q_8.
struct QuaternionImages {
  std::int64_t x_s = 1, x_e = 0, y_s = 0, y_e = 1;
};

// The automorphism θ(1) of the finite kernel group:
//   1_a ↦ c_a·1_a, 1_b ↦ c·1_a + c_b·1_b, x ↦ c_x·1_a + x^k, y ↦ c_y·1_a + x^ℓ y.
struct ThetaSpec {
  std::int64_t c = 0, c_a = 1, c_b = 1, c_x = 0, c_y = 0, k = 1, l = 0;
  std::optional<QuaternionImages> q_images;

  static ThetaSpec identity() { return {}; }
  QuaternionImages quaternion_images() const;
  std::string describe() const;
};

// Normal form a^u b^v x^s y^e; coordinates unused by a variant are zero.
struct Element {
  std::array<std::int64_t, 4> c{};
  std::int64_t u() const { return c[0]; }
  std::int64_t v() const { return c[1]; }
  std::int64_t s() const { return c[2]; }
  std::int64_t e() const { return c[3]; }
  friend bool operator==(const Element& x, const Element& y) { return x.c == y.c; }
  friend bool operator<(const Element& x, const Element& y) { return x.c < y.c; }
};

std::string to_string(const GroupSpec& spec, const Element& g);

// Throws ValidationError listing every violated condition by name.
void validate(const GroupSpec& spec);
// Additionally checks θ: parameter ranges and that θ(1) is an automorphism (witness pair on failure).
void validate(const GroupSpec& spec, const ThetaSpec& theta);

Element identity_element();
Element multiply(const GroupSpec& spec, const Element& g, const Element& h);
Element inverse(const GroupSpec& spec, const Element& g);
Element power(const GroupSpec& spec, const Element& g, std::int64_t n);
Element reduce(const GroupSpec& spec, Element g);

// Standard generators in normal form: 1_a, 1_b, x, y as present (identity ones dropped).
std::vector<Element> standard_generators(const GroupSpec& spec);
// Image of an element under θ(1), computed from the images of the generators.
Element apply_theta(const GroupSpec& spec, const ThetaSpec& theta, const Element& g);

// Finite group with a multiplication table indexed by enumeration order.
class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultCap = 512;
  // Throws CapacityError naming the order if it exceeds cap.
  static FiniteGroup build(const GroupSpec& spec, std::size_t cap = kDefaultCap);

  const GroupSpec& spec() const { return spec_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Element>& elements() const { return elements_; }
  std::uint32_t mul(std::uint32_t g, std::uint32_t h) const { return table_[g * order() + h]; }
  std::uint32_t inv(std::uint32_t g) const { return inverse_[g]; }
  std::uint32_t index_of(const Element& g) const;
  const std::vector<std::uint32_t>& generators() const { return generators_; }

 private:
  GroupSpec spec_;
  std::array<std::int64_t, 4> radix_{};
  std::vector<Element> elements_;
  std::vector<std::uint32_t> table_, inverse_, generators_;
};

std::vector<Element> enumerate(const GroupSpec& spec, std::size_t cap = FiniteGroup::kDefaultCap);

struct ThetaMap {
  std::vector<std::uint32_t> perm;  // perm[g] = index of θ(1)(g)
  std::int64_t theta_a = 1;         // action on the Z_a quotient coordinate: multiplication by c_a
  std::int64_t theta_b = 1;         // multiplication by c_b on Z_b
  QuaternionImages theta_q;         // images of x and y in Q_{2^i}
};

ThetaMap theta_permutation(const FiniteGroup& group, const ThetaSpec& theta);

// Order of a permutation.
std::int64_t permutation_order(const std::vector<std::uint32_t>& perm);

}  // namespace vcg
