#include "vcg/verify.hpp"

#include <omp.h>

#include <cstdlib>
#include <random>
#include <sstream>

#include "vcg/closed_form.hpp"
#include "vcg/errors.hpp"
#include "vcg/lattice.hpp"
#include "vcg/oracle.hpp"
#include "vcg/sample.hpp"

namespace vcg {
namespace {

using Job = std::function<std::vector<CheckRecord>()>;

std::string label(const GroupSpec& s, const std::optional<ThetaSpec>& t = std::nullopt) {
  return t ? s.name() + " θ=" + t->describe() : s.name();
}

CheckRecord rec(std::string check, std::string spec, std::string where, std::string formula = {},
                std::string oracle = {}, Verdict verdict = Verdict::Match, std::string note = {}) {
  CheckRecord r;
  r.check = std::move(check);
  r.spec = std::move(spec);
  r.where = std::move(where);
  r.formula = std::move(formula);
  r.oracle = std::move(oracle);
  r.verdict = verdict;
  r.note = std::move(note);
  return r;
}

CheckRecord compare(std::string check, std::string spec, std::string where, const FinAb& formula, const FinAb& oracle) {
  CheckRecord r = rec(std::move(check), std::move(spec), std::move(where), formula.to_string(), oracle.to_string());
  r.verdict = formula == oracle ? Verdict::Match : Verdict::Mismatch;
  return r;
}

CheckRecord skipped(std::string check, std::string spec, std::string where, const std::string& why) {
  CheckRecord r = rec(std::move(check), std::move(spec), std::move(where));
  r.verdict = Verdict::Skipped;
  r.note = why;
  return r;
}

FinAb perturbed(const VerifyConfig& c, const std::string& check, const GroupSpec& s, int n, FinAb v) {
  return c.perturb ? c.perturb(check, s, n, v) : v;
}

std::vector<GroupSpec> finite_specs(std::size_t max_order) {
  const auto cap = static_cast<std::int64_t>(max_order);
  std::vector<GroupSpec> out;
  for (std::int64_t m = 2; m <= std::min<std::int64_t>(cap, 12); ++m) out.push_back(GroupSpec::cyclic(m));
  for (const auto& s : metacyclic_specs(cap, cap))
    if (s.a > 1 && s.b > 1 && s.order() <= cap) out.push_back(s);
  for (std::int64_t i = 3; (std::int64_t(1) << i) <= cap; ++i) out.push_back(GroupSpec::quaternion(i));
  for (std::int64_t b = 3; 8 * b <= cap; b += 2) out.push_back(GroupSpec::zb_times_q(b, 3));
  for (const auto& s : zazbq_specs(cap / 8, cap / 8, 5))
    if (s.a > 1 && s.order() <= cap) out.push_back(s);
  return out;
}

// Kernels of the infinite families small enough for the oracle.
std::vector<GroupSpec> kernels(std::size_t max_order, std::optional<int> family) {
  std::vector<GroupSpec> out;
  for (const auto& s : finite_specs(max_order)) {
    int f = s.variant == Variant::Cyclic ? 0 : family_of(s);
    if (f == 0 || (family && *family != f)) continue;
    out.push_back(s);
  }
  return out;
}

// Bilinear product H^p × H^q → H^r: generator orders and the product of each generator pair.
struct ProductTable {
  std::vector<Integer> p, q, r;
  std::vector<std::vector<std::vector<Integer>>> prod;

  // Number of pairs (x, y) with x·y = 0 and the order of the subgroup generated by all products.
  std::string summary() const {
    std::size_t zeros = 0;
    std::vector<Integer> x(p.size(), 0), y;
    auto next = [](std::vector<Integer>& v, const std::vector<Integer>& o) {
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (++v[k] < o[k]) return true;
        v[k] = 0;
      }
      return false;
    };
    do {
      y.assign(q.size(), 0);
      do {
        bool zero = true;
        for (std::size_t k = 0; k < r.size() && zero; ++k) {
          Integer s = 0;
          for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = 0; b < q.size(); ++b) s += x[a] * y[b] * prod[a][b][k];
          zero = mod(s, r[k]) == 0;
        }
        zeros += zero;
      } while (next(y, q));
    } while (next(x, p));
    IntMatrix m(r.size(), p.size() * q.size());
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < q.size(); ++b)
        for (std::size_t k = 0; k < r.size(); ++k)
          if (mod(prod[a][b][k], r[k]) != 0) m.set(k, a * q.size() + b, prod[a][b][k]);
    Integer total = 1;
    for (const auto& o : r) total *= o;
    FinAb coker = hom_cokernel(m, r);
    std::ostringstream os;
    os << "zero pairs " << zeros << ", image order " << total / coker.torsion_order();
    return os.str();
  }
};

ProductTable formula_table(const GroupSpec& spec, int p, int q) {
  Ring ring(spec, std::nullopt);
  auto gp = ring.generators_in_degree(p), gq = ring.generators_in_degree(q), gr = ring.generators_in_degree(p + q);
  ProductTable t;
  for (const auto& s : gp) t.p.push_back(ring.order(s));
  for (const auto& s : gq) t.q.push_back(ring.order(s));
  for (const auto& s : gr) t.r.push_back(ring.order(s));
  for (const auto& x : gp) {
    t.prod.emplace_back();
    for (const auto& y : gq) {
      CohClass c = ring.product(x, y);
      std::vector<Integer> v;
      for (const auto& s : gr) v.push_back(c.coefficient(s));
      t.prod.back().push_back(v);
    }
  }
  return t;
}

ProductTable oracle_table(const CupOracle& o, int p, int q) {
  ProductTable t;
  t.p = o.cohomology(p).orders();
  t.q = o.cohomology(q).orders();
  t.r = o.cohomology(p + q).orders();
  auto unit = [](std::size_t k, std::size_t n) {
    std::vector<Integer> e(n, 0);
    e[k] = 1;
    return e;
  };
  for (std::size_t a = 0; a < t.p.size(); ++a) {
    t.prod.emplace_back();
    for (std::size_t b = 0; b < t.q.size(); ++b) t.prod.back().push_back(o.cup(p, unit(a, t.p.size()), q, unit(b, t.q.size())));
  }
  return t;
}

// Guard a job: capacity limits become skips, anything else a mismatch with the message.
Job guarded(std::string check, std::string spec, std::function<std::vector<CheckRecord>()> body) {
  return [check, spec, body]() -> std::vector<CheckRecord> {
    try {
      return body();
    } catch (const CapacityError& e) {
      return {skipped(check, spec, "", std::string("skipped (capacity): ") + e.what())};
    } catch (const std::exception& e) {
      CheckRecord r = rec(check, spec, "", "", "", Verdict::Mismatch, std::string("error: ") + e.what());
      return {r};
    }
  };
}

void finite_jobs(const VerifyConfig& c, std::vector<Job>& jobs) {
  OracleCaps caps;
  caps.max_order = c.max_order;
  caps.max_degree = c.max_degree;
  caps.cell_budget = c.cell_budget;
  caps.representative_cells = 0;
  for (const auto& s : finite_specs(c.max_order)) {
    for (int n = 0; n <= c.max_degree; ++n)
      jobs.push_back(guarded("finite", label(s), [=]() -> std::vector<CheckRecord> {
        const std::string where = "n=" + std::to_string(n);
        FinAb f = perturbed(c, "finite", s, n, finite_cohomology(s, n).group);
        try {
          check_bar_capacity(static_cast<std::size_t>(s.order()), n, caps);
        } catch (const CapacityError& e) {
          return {skipped("finite", label(s), where, std::string("skipped (capacity): ") + e.what())};
        }
        return {compare("finite", label(s), where, f, bar_cohomology(s, Coefficients::integers(), n, caps).group)};
      }));
  }
}

void resolution_jobs(const VerifyConfig& c, std::vector<Job>& jobs) {
  const int top = 2 * c.max_degree;
  for (const auto& s : finite_specs(c.max_order))
    jobs.push_back(guarded("resolution", label(s), [=]() {
      FreeResolution p(FiniteGroup::build(s, c.max_order), top + 1);
      std::vector<CheckRecord> out;
      for (int n = 0; n <= top; ++n)
        out.push_back(compare("resolution", label(s), "n=" + std::to_string(n),
                              perturbed(c, "resolution", s, n, finite_cohomology(s, n).group),
                              p.cohomology(n, Coefficients::integers()).group()));
      return out;
    }));
}

void infinite_jobs(const VerifyConfig& c, std::mt19937_64& rng, std::vector<Job>& jobs) {
  std::vector<SpecTheta> cases;
  if (!c.family || *c.family == 1) {
    ThetaSpec t;
    t.c_a = 2;
    cases.push_back({GroupSpec::metacyclic(7, 3, 2), t});
  }
  if (!c.family || *c.family == 2) {
    ThetaSpec k3, l1;
    k3.k = 3;
    l1.l = 1;
    cases.push_back({GroupSpec::quaternion(3), ThetaSpec::identity()});
    cases.push_back({GroupSpec::quaternion(4), k3});
    cases.push_back({GroupSpec::quaternion(4), l1});
  }
  auto ks = kernels(c.max_order, c.family);
  for (int k = 0; k < c.samples && !ks.empty(); ++k) {
    const GroupSpec& s = ks[rng() % ks.size()];
    cases.push_back({s, random_theta(rng, s)});
  }
  const int top = 2 * c.max_degree + 1;
  for (const auto& st : cases) {
    const std::string name = label(st.spec, st.theta);
    jobs.push_back(guarded("infinite", name, [=]() {
      if (static_cast<std::size_t>(st.spec.order()) > c.max_order)
        throw CapacityError("|F| = " + std::to_string(st.spec.order()) + " exceeds max order");
      std::vector<CheckRecord> out;
      for (int n = 0; n <= top; ++n) {
        const std::string where = "n=" + std::to_string(n);
        FinAb oracle = fz_cohomology(st.spec, st.theta, n);
        try {
          FinAb f = perturbed(c, "infinite", st.spec, n, vz_cohomology(st.spec, st.theta, n).group);
          out.push_back(compare("infinite", name, where, f, oracle));
        } catch (const ValidationError& e) {
          CheckRecord r = skipped("infinite", name, where, std::string("formula refuses: ") + e.what());
          r.oracle = oracle.to_string();
          out.push_back(r);
        }
      }
      return out;
    }));
  }
}

void cup_jobs(const VerifyConfig& c, std::mt19937_64& rng, std::vector<Job>& jobs) {
  if (c.family && *c.family != 1) return;
  using G = Gen;
  const std::vector<std::pair<G, G>> rules = {
      {G::PhiA, G::Eta}, {G::PhiB, G::Eta}, {G::PsiA, G::Eta}, {G::PsiB, G::Eta}, {G::PhiA, G::PhiA},
      {G::PhiB, G::PhiB}, {G::PhiA, G::PhiB}, {G::PhiA, G::PsiA}, {G::PhiB, G::PsiB}, {G::PhiA, G::PsiB},
      {G::PhiB, G::PsiA}, {G::PsiA, G::PsiA}, {G::PsiA, G::PsiB}, {G::PsiB, G::PsiB}};
  for (int k = 0; k < c.samples; ++k) {
    SpecTheta st = random_family1(rng, 50, 12);
    std::vector<std::pair<Symbol, Symbol>> pairs;
    const std::int64_t span = 2 * invariants(st.spec, st.theta).p;
    for (const auto& [x, y] : rules) {
      std::int64_t i = 1 + std::int64_t(rng() % span), j = 1 + std::int64_t(rng() % span);
      pairs.push_back({{x, x == G::Eta ? 0 : i}, {y, y == G::Eta ? 0 : j}});
    }
    jobs.push_back(guarded("cup", label(st.spec, st.theta), [st, pairs]() {
      Ring ring(st.spec, st.theta);
      std::vector<CheckRecord> out;
      for (const auto& [l, r] : pairs) {
        CohClass f = ring.product(l, r), o = paper_cup_oracle(st.spec, st.theta, l, r);
        CheckRecord row = rec("cup", label(st.spec, st.theta), ring.name(l) + "·" + ring.name(r), ring.render(f), ring.render(o));
        row.verdict = f == o ? Verdict::Match : Verdict::Mismatch;
        out.push_back(row);
      }
      return out;
    }));
  }
}

void period_jobs(const VerifyConfig& c, std::mt19937_64& rng, std::vector<Job>& jobs) {
  for (int k = 0; k < c.samples; ++k) {
    bool one = c.family ? *c.family == 1 : k % 2 == 0;
    SpecTheta st = one ? random_family1(rng, 50, 12) : random_family2(rng, 15, 7, 5);
    jobs.push_back(guarded("period", label(st.spec, st.theta), [=]() {
      const std::string name = label(st.spec, st.theta);
      Periodicity per = periodicity(st.spec, st.theta);
      const std::int64_t P = per.period;
      std::vector<CheckRecord> out;
      std::string first_bad;
      for (std::int64_t n = 2; n <= 2 + 2 * P && first_bad.empty(); ++n) {
        try {
          if (vz_cohomology(st.spec, st.theta, int(n)).group != vz_cohomology(st.spec, st.theta, int(n + P)).group)
            first_bad = "differs at n=" + std::to_string(n);
        } catch (const ValidationError&) {
        }
      }
      CheckRecord r = rec("period", name, "n=2.." + std::to_string(2 + 2 * P), "period " + std::to_string(P),
                    first_bad.empty() ? "stable" : first_bad);
      r.verdict = first_bad.empty() ? Verdict::Match : Verdict::Mismatch;
      out.push_back(r);

      if (one) {
        Ring ring(st.spec, st.theta);
        std::string bad;
        for (int n = 2; n <= 2 * P + 1 && bad.empty(); ++n)
          for (const auto& s : ring.generators_in_degree(n)) {
            Symbol shifted{s.gen, s.index + P / 2};  // degree 2j ↦ 2j + P
            Integer o = ring.order(shifted);
            Integer coef = ring.cup(per.pclass, ring.gen(s)).coefficient(shifted);
            if (o != 1 && gcd(coef, o) != 1) bad = ring.name(s);
          }
        CheckRecord u = rec("period", name, "class·generator", per.rendered, bad.empty() ? "unit shifts" : "non-unit at " + bad);
        u.verdict = bad.empty() ? Verdict::Match : Verdict::Mismatch;
        out.push_back(u);
      }

      const int top = 2 * c.max_degree + 1;
      if (static_cast<std::size_t>(st.spec.order()) <= c.max_order && 2 + P <= top) {
        for (std::int64_t n = 2; n + P <= top; ++n) {
          FinAb x = fz_cohomology(st.spec, st.theta, int(n)), y = fz_cohomology(st.spec, st.theta, int(n + P));
          out.push_back(compare("period", name, "oracle n=" + std::to_string(n) + " vs n+" + std::to_string(P), x, y));
        }
      }
      return out;
    }));
  }
}

void ring_jobs(const VerifyConfig& c, std::vector<Job>& jobs) {
  for (const auto& s : finite_specs(c.max_order))
    jobs.push_back(guarded("ring", label(s), [=]() {
      CupOracle o(s, 7);
      std::vector<CheckRecord> out;
      for (auto [p, q] : {std::pair{2, 2}, std::pair{2, 4}}) {
        CheckRecord r = rec("ring", label(s), "H^" + std::to_string(p) + "·H^" + std::to_string(q),
                      formula_table(s, p, q).summary(), oracle_table(o, p, q).summary());
        r.verdict = r.formula == r.oracle ? Verdict::Match : Verdict::Mismatch;
        out.push_back(r);
      }
      return out;
    }));
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Match: return "match";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

int verify_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("VCG_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return omp_get_max_threads();
}

VerifyReport run_verify(const VerifyConfig& c) {
  auto want = [&](const char* k) { return c.only.empty() || c.only.count(k) > 0; };
  std::mt19937_64 rng(c.seed);
  std::vector<Job> jobs;
  if (want("finite")) finite_jobs(c, jobs);
  if (want("resolution")) resolution_jobs(c, jobs);
  if (want("infinite")) infinite_jobs(c, rng, jobs);
  if (want("cup")) cup_jobs(c, rng, jobs);
  if (want("period")) period_jobs(c, rng, jobs);
  if (want("ring")) ring_jobs(c, jobs);

  std::vector<std::vector<CheckRecord>> results(jobs.size());
  const int width = verify_threads(c.threads);
#pragma omp parallel for schedule(dynamic, 1) num_threads(width)
  for (std::int64_t k = 0; k < std::int64_t(jobs.size()); ++k) results[k] = jobs[k]();

  VerifyReport report;
  for (auto& rs : results)
    for (auto& r : rs) {
      if (r.verdict == Verdict::Match) ++report.matches;
      if (r.verdict == Verdict::Mismatch) ++report.mismatches;
      if (r.verdict == Verdict::Skipped) ++report.skipped;
      report.records.push_back(std::move(r));
    }
  return report;
}

}  // namespace vcg
