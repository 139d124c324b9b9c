#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vcg/finab.hpp"
#include "vcg/group.hpp"

namespace vcg {

// Infinite families: 1 = (Z_a⋊Z_b)⋊Z over a Metacyclic kernel, 2 = [Z_a⋊(Z_b×Q_{2^i})]⋊Z over ZaZbQ.
int family_of(const GroupSpec& spec);
// Quaternion{i} and ZbTimesQ{b,i} as ZaZbQ with a = 1 (and b = 1); other variants unchanged.
GroupSpec as_family_kernel(const GroupSpec& spec);

struct DerivedInvariants {
  GroupSpec spec;
  ThetaSpec theta;
  int family = 1;
  std::int64_t d = 1, d_ca = 1, d_cb = 1, d_k = 1, p = 1;

  Integer delta(std::int64_t j) const;    // gcd(r^j − 1, a)
  Integer epsilon(std::int64_t j) const;  // gcd(a, r^j − 1, r_x^j − 1, r_y^j − 1); δ_j in family 1
  Integer A(std::int64_t j) const;        // gcd(c_a^j − 1, δ_j or ε_j)
  Integer B(std::int64_t j) const;        // gcd(c_b^j − 1, b)
  Integer C(std::int64_t j) const;        // gcd(k^j − 1, 2^i)
  // Exponent k acting on δ_4; 1 when θ_Q is given by arbitrary Q_8 images.
  std::int64_t k_effective() const;
};

DerivedInvariants invariants(const GroupSpec& spec, const ThetaSpec& theta);

struct Summand {
  std::string name;  // "Z_{A_3}", "Z_2", "Z"
  Integer order;     // 0 for Z
};

struct CohomologyGroup {
  FinAb group;
  std::vector<Summand> summands;
  static CohomologyGroup from_summands(std::vector<Summand> s);
  std::string summand_string() const;  // "Z_{A_j} ⊕ Z_{B_j}" with values
};

CohomologyGroup finite_cohomology(const GroupSpec& spec, int n);
CohomologyGroup vz_cohomology(const GroupSpec& spec, const ThetaSpec& theta, int n);

// θ^(2) on H²(Q_{2^i}; Z) = Z_2² in the basis (γ_2, γ_2'); columns are images.
struct Q8Action {
  int m[2][2] = {{1, 0}, {0, 1}};
  bool trivial = true;
  int order = 1;  // order of the matrix in GL_2(Z_2)
};
Q8Action q8_h2_action(const GroupSpec& spec, const ThetaSpec& theta);

enum class Gen { One, Eta, PhiA, PhiB, PsiA, PsiB, Alpha, Beta, Delta, GammaDelta, GammaPrimeDelta };

// A named additive generator. Index meanings:
//   PhiA/PhiB i: degree 2i;  PsiA/PsiB i: degree 2i+1;
//   Alpha j: (a/ε_j)α_2^j, degree 2j;  Beta j: β_2^j;  Delta m: δ_4^m;
//   GammaDelta m: γ_2 δ_4^m, degree 4m+2;  GammaPrimeDelta m: γ_2' δ_4^m.
struct Symbol {
  Gen gen = Gen::One;
  std::int64_t index = 0;
  friend bool operator<(const Symbol& x, const Symbol& y) {
    return x.gen != y.gen ? x.gen < y.gen : x.index < y.index;
  }
  friend bool operator==(const Symbol& x, const Symbol& y) { return x.gen == y.gen && x.index == y.index; }
};

int symbol_degree(const Symbol& s);

class CohClass {
 public:
  CohClass() = default;
  explicit CohClass(int degree) : degree_(degree) {}
  int degree() const { return degree_; }
  const std::map<Symbol, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Symbol& s) const;
  friend bool operator==(const CohClass& x, const CohClass& y) { return x.degree_ == y.degree_ && x.terms_ == y.terms_; }

 private:
  friend class Ring;
  int degree_ = 0;
  std::map<Symbol, Integer> terms_;
};

// The cohomology ring named by a spec: the family-1 ring when the kernel is Metacyclic and θ is
// given, otherwise the ring of the finite group (for family 2 this is the finite piece).
class Ring {
 public:
  Ring(const GroupSpec& spec, const std::optional<ThetaSpec>& theta);

  bool infinite() const { return infinite_; }
  const DerivedInvariants& inv() const { return inv_; }
  const GroupSpec& spec() const { return spec_; }

  // Throws RingError if the symbol does not name a generator of this ring.
  void check(const Symbol& s) const;
  Integer order(const Symbol& s) const;  // 0 means infinite
  std::vector<Symbol> generators_in_degree(int n) const;

  CohClass make(const std::map<Symbol, Integer>& terms, int degree) const;
  CohClass gen(const Symbol& s) const;
  CohClass product(const Symbol& x, const Symbol& y) const;
  CohClass cup(const CohClass& u, const CohClass& v) const;
  CohClass add(const CohClass& u, const CohClass& v) const;

  std::string name(const Symbol& s) const;
  std::string render(const CohClass& c) const;

 private:
  CohClass product_family1(const Symbol& x, const Symbol& y) const;
  CohClass product_finite(const Symbol& x, const Symbol& y) const;

  GroupSpec spec_;
  DerivedInvariants inv_;
  bool infinite_ = false;
};

CohClass cup(const GroupSpec& spec, const std::optional<ThetaSpec>& theta, const CohClass& u, const CohClass& v);

struct Periodicity {
  std::int64_t period = 0;
  CohClass pclass;
  std::string rendered;
};
Periodicity periodicity(const GroupSpec& spec, const ThetaSpec& theta);

struct RingPresentation {
  struct Generator {
    Symbol symbol;
    int degree;
    Integer order;
    std::string name;
  };
  struct Relation {
    Symbol left, right;
    CohClass product;
    std::string rendered;  // "γ_2·γ_2' = 4δ_4"
  };
  int degree_bound = 0;
  std::vector<Generator> generators;
  std::vector<Relation> relations;
};

// degree_bound < 0 selects 2·period + 2 for infinite families and 12 otherwise.
RingPresentation ring_presentation(const GroupSpec& spec, const std::optional<ThetaSpec>& theta, int degree_bound = -1);

}  // namespace vcg
