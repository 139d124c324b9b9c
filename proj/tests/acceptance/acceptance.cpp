// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vcg/closed_form.hpp"
#include "vcg/errors.hpp"
#include "vcg/oracle.hpp"
#include "vcg/resolution.hpp"
#include "vcg/smith.hpp"
#include "vcg/verify.hpp"

using namespace vcg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few discrepancies; a criterion passes when none are recorded.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ < 4) out_ << (failures_ > 1 ? "; " : "") << what;
  }
  void expect_eq(const FinAb& got, const FinAb& want, const std::string& where) {
    expect(got == want, where + ": got " + got.to_string() + ", expected " + want.to_string());
  }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary + ", " + std::to_string(checks_) + " checks"};
    return {false, std::to_string(failures_) + "/" + std::to_string(checks_) + " failed: " + out_.str()};
  }

 private:
  int checks_ = 0, failures_ = 0;
  std::ostringstream out_;
};

FinAb fin(std::vector<Integer> orders) { return FinAb::from_cyclic(std::move(orders)); }

ThetaSpec q_theta(std::int64_t k, std::int64_t l) {
  ThetaSpec t;
  t.k = k;
  t.l = l;
  return t;
}

std::string deg(int n) { return "H^" + std::to_string(n); }

Outcome quaternion_bar() {
  Tally t;
  const std::vector<FinAb> q8 = {fin({0}), FinAb::zero(), fin({2, 2}), FinAb::zero(),
                                 fin({8}), FinAb::zero(), fin({2, 2})};
  for (int n = 0; n <= 6; ++n)
    t.expect_eq(bar_cohomology(GroupSpec::quaternion(3), Coefficients::integers(), n).group, q8[n], "Q_8 " + deg(n));
  t.expect_eq(bar_cohomology(GroupSpec::quaternion(4), Coefficients::integers(), 4).group, fin({16}), "Q_16 H^4");
  return t.outcome("Q_8 n=0..6, Q_16 H^4 = Z_16");
}

Outcome metacyclic() {
  Tally t;
  const GroupSpec s = GroupSpec::metacyclic(7, 3, 2);
  const std::vector<FinAb> want = {fin({0}), FinAb::zero(), fin({3}), FinAb::zero(),
                                   fin({3}), FinAb::zero(), fin({21})};
  FreeResolution p(FiniteGroup::build(s), 7);
  for (int n = 0; n <= 6; ++n) {
    FinAb formula = finite_cohomology(s, n).group;
    t.expect_eq(formula, want[n], "formula " + deg(n));
    t.expect_eq(p.cohomology(n, Coefficients::integers()).group(), formula, "resolution " + deg(n));
    if (n <= 4) t.expect_eq(bar_cohomology(s, Coefficients::integers(), n).group, formula, "bar " + deg(n));
  }
  return t.outcome("Z_7⋊Z_3 n=0..6 against the free resolution, bar for n≤4");
}

Outcome infinite_family1() {
  Tally t;
  const GroupSpec s = GroupSpec::metacyclic(7, 3, 2);
  ThetaSpec th;
  th.c_a = 2;
  th.c_b = 1;
  th.c = 0;
  for (int n = 0; n <= 7; ++n)
    t.expect_eq(vz_cohomology(s, th, n).group, fz_cohomology(s, th, n), deg(n));
  t.expect_eq(vz_cohomology(s, th, 6).group, fin({7, 3}), "formula H^6");
  t.expect_eq(vz_cohomology(s, th, 7).group, fin({7, 3}), "formula H^7");
  return t.outcome("(Z_7⋊Z_3)⋊Z, c_a=2, n=0..7, H^6 = H^7 = Z_7 ⊕ Z_3");
}

Outcome twisted() {
  Tally t;
  const GroupSpec s = GroupSpec::zb_times_q(3, 3);
  FiniteGroup g = FiniteGroup::build(s);
  // x, y act by −1 (ε = 1) or by 16 ≡ 1 (ε = 5) on Z_5.
  const std::vector<std::pair<Coefficients, Integer>> modules = {{Coefficients::twisted(g, 5, 1, 1, 4, 4), 1},
                                                                 {Coefficients::twisted(g, 5, 1, 1, 16, 16), 5}};
  for (const auto& [m, eps] : modules)
    for (int p = 0; p <= 3; ++p)
      t.expect_eq(bar_cohomology(s, m, p).group, p == 0 ? fin({eps}) : FinAb::zero(),
                  "ε=" + eps.get_str() + " " + deg(p));
  return t.outcome("Z_3×Q_8 with Z̃_5, ε ∈ {1, 5}, p=0..3");
}

Outcome cup_table() {
  VerifyConfig c;
  c.only = {"cup"};
  c.family = 1;
  c.samples = 24;
  c.seed = 20240601;
  VerifyReport r = run_verify(c);
  Tally t;
  t.expect(r.records.size() == 24u * 14u, "expected 336 products, got " + std::to_string(r.records.size()));
  for (const auto& rec : r.records)
    t.expect(rec.verdict == Verdict::Match, rec.spec + " " + rec.where + ": " + rec.formula + " vs " + rec.oracle);
  return t.outcome("24 random family-1 specs × 14 rules");
}

Outcome periodicity_check() {
  VerifyConfig c;
  c.only = {"period"};
  c.samples = 16;
  c.seed = 7;
  c.max_order = 24;
  c.max_degree = 4;
  VerifyReport r = run_verify(c);
  Tally t;
  int shifts = 0;
  for (const auto& rec : r.records) {
    if (rec.where == "class·generator") ++shifts;
    t.expect(rec.verdict != Verdict::Mismatch, rec.spec + " " + rec.where + ": " + rec.oracle);
  }
  t.expect(shifts == 8, "expected 8 family-1 shift checks, got " + std::to_string(shifts));
  return t.outcome("16 specs of both families, " + std::to_string(shifts) + " unit-shift checks");
}

Outcome four_cases() {
  Tally t;
  struct Case {
    std::string name;
    GroupSpec spec;
    ThetaSpec theta;
    FinAb h2, h4;
  };
  ThetaSpec swap;
  swap.q_images = QuaternionImages{0, 1, 1, 0};
  ThetaSpec zq = q_theta(1, 1);
  zq.c_b = 2;
  const std::vector<Case> cases = {
      {"i>3, ℓ even: Q_16, k=3, ℓ=2", GroupSpec::quaternion(4), q_theta(3, 2), fin({2, 2}), fin({8})},
      {"i>3, ℓ odd: Q_16, k=1, ℓ=1", GroupSpec::quaternion(4), q_theta(1, 1), fin({2}), fin({16})},
      {"i>3, ℓ even: Z_3⋊Q_16", GroupSpec::zazbq(3, 1, 4, 1, 1, 1), q_theta(3, 2), fin({3, 2, 2}), fin({3, 8})},
      {"i>3, ℓ odd: Z_3⋊Q_16", GroupSpec::zazbq(3, 1, 4, 1, 1, 1), q_theta(3, 1), fin({3, 2}), fin({3, 8})},
      {"i=3, trivial: Q_8, a=b=1", GroupSpec::quaternion(3), ThetaSpec::identity(), fin({2, 2}), fin({8})},
      {"i=3, trivial: Q_8, k=3, ℓ=2", GroupSpec::quaternion(3), q_theta(3, 2), fin({2, 2}), fin({8})},
      {"i=3, nontrivial: Q_8 swap", GroupSpec::quaternion(3), swap, fin({2}), fin({8})},
      {"i=3, nontrivial: Q_8, ℓ=1", GroupSpec::quaternion(3), q_theta(1, 1), fin({2}), fin({8})},
      {"i=3, trivial: Z_3×Q_8", GroupSpec::zb_times_q(3, 3), ThetaSpec::identity(), fin({3, 2, 2}), fin({3, 8})},
      {"i=3, nontrivial: Z_3×Q_8, c_b=2", GroupSpec::zb_times_q(3, 3), zq, fin({2}), fin({3, 8})},
  };
  int crossed = 0;
  for (const auto& c : cases) {
    const bool small = c.spec.order() <= 24;
    if (small) ++crossed;
    for (auto [n, want] : {std::pair<int, FinAb>{2, c.h2}, std::pair<int, FinAb>{4, c.h4}}) {
      FinAb got = vz_cohomology(c.spec, c.theta, n).group;
      t.expect_eq(got, want, c.name + " " + deg(n));
      if (small) t.expect_eq(fz_cohomology(c.spec, c.theta, n), got, c.name + " oracle " + deg(n));
    }
  }
  return t.outcome(std::to_string(cases.size()) + " instances, " + std::to_string(crossed) + " cross-checked");
}

Outcome linalg_suite() {
  Tally t;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> val(-30, 30);
  int square = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t r = 1 + rng() % 40, c = trial % 4 == 0 ? r : 1 + rng() % 40;
    IntMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a.set(i, j, val(rng));
    SnfResult s = smith_normal_form(a);
    const std::string tag = "trial " + std::to_string(trial);
    t.expect(s.U * a * s.V == s.D, tag + ": UAV != D");
    t.expect(abs(determinant(s.U.dense())) == 1 && abs(determinant(s.V.dense())) == 1, tag + ": not unimodular");
    bool diagonal = true;
    for (std::size_t i = 0; i < r; ++i)
      for (const auto& e : s.D.row(i)) diagonal = diagonal && e.col == i && e.value > 0;
    std::vector<Integer> d = s.diagonal();
    for (std::size_t k = 0; k + 1 < d.size(); ++k) diagonal = diagonal && (d[k + 1] == 0 || divides(d[k], d[k + 1]));
    t.expect(diagonal, tag + ": not a divisibility chain");
    if (r == c) {
      Integer det = determinant(a.dense());
      if (det != 0) {
        ++square;
        t.expect(cokernel_invariants(a).torsion_order() == abs(det), tag + ": |coker| != |det|");
      }
    }
  }
  return t.outcome("1000 matrices up to 40×40, " + std::to_string(square) + " nonsingular square");
}

struct Criterion {
  int id;
  std::string name;
  double limit_s;  // 0: no time limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "quaternion bar cohomology", 60, quaternion_bar},
      {2, "metacyclic formula vs oracle", 120, metacyclic},
      {3, "family 1 formula vs semidirect oracle", 0, infinite_family1},
      {4, "twisted coefficients", 0, twisted},
      {5, "cup table vs replayed representatives", 0, cup_table},
      {6, "periodicity", 0, periodicity_check},
      {7, "four-case selection", 0, four_cases},
      {8, "Smith normal form properties", 60, linalg_suite},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[64];
    if (c.limit_s > 0) {
      std::snprintf(timing, sizeof timing, "%.1f s, limit %.0f s", secs, c.limit_s);
      if (secs > c.limit_s) {
        o.pass = false;
        o.detail += " (over time limit)";
      }
    } else {
      std::snprintf(timing, sizeof timing, "%.1f s", secs);
    }
    std::printf("%s %d %s: %s [%s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), o.detail.c_str(), timing);
    std::fflush(stdout);
    failures += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
  return failures;
}
