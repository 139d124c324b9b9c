#include "doctest.h"

#include <random>

#include "vcg/errors.hpp"
#include "vcg/oracle.hpp"
#include "vcg/sample.hpp"

using namespace vcg;

namespace {

FinAb fin(std::vector<long> f) {
  std::vector<Integer> v(f.begin(), f.end());
  return FinAb::from_cyclic(v);
}

ThetaSpec th(std::int64_t c_a, std::int64_t c_b, std::int64_t c = 0) {
  ThetaSpec t;
  t.c_a = c_a;
  t.c_b = c_b;
  t.c = c;
  return t;
}

FinAb bar_h(const GroupSpec& s, int n) { return bar_cohomology(s, Coefficients::integers(), n).group; }

// Reduce a matrix over Z/2 to plain bits.
std::array<std::array<int, 2>, 2> bits(const IntMatrix& m) {
  std::array<std::array<int, 2>, 2> b{};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) b[r][c] = int(mod(m.get(r, c), 2).get_si());
  return b;
}

// Every finite spec in the families with |G| ≤ 24.
std::vector<GroupSpec> small_specs() {
  std::vector<GroupSpec> out;
  for (const auto& s : metacyclic_specs(24, 24))
    if (s.order() <= 24) out.push_back(s);
  for (const auto& s : zazbq_specs(3, 3, 4))
    if (s.order() <= 24) out.push_back(s);
  for (long m = 2; m <= 24; m += 5) out.push_back(GroupSpec::cyclic(m));
  out.push_back(GroupSpec::quaternion(3));
  out.push_back(GroupSpec::quaternion(4));
  out.push_back(GroupSpec::zb_times_q(3, 3));
  return out;
}

}  // namespace

TEST_CASE("bar cohomology examples") {
  CHECK(bar_h(GroupSpec::quaternion(3), 2) == fin({2, 2}));
  CHECK(bar_h(GroupSpec::metacyclic(7, 3, 2), 3) == FinAb::zero());

  const GroupSpec zq = GroupSpec::zb_times_q(3, 3);
  FiniteGroup g = FiniteGroup::build(zq);
  Coefficients odd = Coefficients::twisted(g, 5, 1, 1, 4, 4);
  Coefficients even = Coefficients::twisted(g, 5, 1, 1, 16, 16);
  CHECK(bar_cohomology(zq, odd, 0).group == FinAb::zero());
  CHECK(bar_cohomology(zq, odd, 2).group == FinAb::zero());
  CHECK(bar_cohomology(zq, even, 0).group == fin({5}));
  CHECK(bar_cohomology(zq, even, 1).group == FinAb::zero());
}

TEST_CASE("bar capacity errors carry size estimates") {
  try {
    bar_h(GroupSpec::metacyclic(7, 3, 2), 5);
    FAIL("expected CapacityError");
  } catch (const CapacityError& e) {
    CHECK(std::string(e.what()).find("cells") != std::string::npos);
  }
  OracleCaps tight;
  tight.cell_budget = 1000;
  CHECK_THROWS_AS(bar_cohomology(GroupSpec::quaternion(3), Coefficients::integers(), 3, tight), CapacityError);
}

TEST_CASE("Morse reduction, plain elimination and the free resolution agree") {
  for (const auto& s : {GroupSpec::cyclic(6), GroupSpec::metacyclic(3, 2, 2), GroupSpec::quaternion(3),
                        GroupSpec::metacyclic(5, 4, 2)}) {
    FiniteGroup g = FiniteGroup::build(s);
    BarComplex bar(g, Coefficients::integers());
    FreeResolution p(g, 5);
    for (int n = 0; n <= (g.order() <= 8 ? 4 : 3); ++n) {
      CAPTURE(s.name());
      CAPTURE(n);
      auto morse = bar.cohomology(n);
      CHECK(morse.morse);
      if (bar.cells(n + 1) <= 20000) CHECK(morse.sq.group() == bar.cohomology(n, Assembly::Serial, false).sq.group());
      CHECK(morse.sq.group() == p.cohomology(n, Coefficients::integers()).group());
    }
  }
}

TEST_CASE("serial and parallel assembly give the same reduced coboundary") {
  FiniteGroup g = FiniteGroup::build(GroupSpec::quaternion(3));
  BarComplex bar(g, Coefficients::integers());
  for (int n = 1; n <= 4; ++n) {
    auto a = bar.morse_coboundary(n, Assembly::Serial);
    auto b = bar.morse_coboundary(n, Assembly::Parallel);
    CHECK(a.rows == b.rows);
    CHECK(a.cols == b.cols);
    CHECK(a.d == b.d);
  }
}

TEST_CASE("bar coboundaries compose to zero") {
  FiniteGroup g = FiniteGroup::build(GroupSpec::metacyclic(3, 2, 2));
  Coefficients tw = Coefficients::twisted(g, 7, 1, 6, 1, 1);
  for (const auto& m : {Coefficients::integers(), tw}) {
    BarComplex bar(g, m);
    for (int n = 1; n <= 3; ++n) CHECK_NOTHROW(check_complex(bar.coboundary(n), bar.coboundary(n - 1), m.modulus));
  }
}

TEST_CASE("representatives are cocycles of the right classes") {
  const GroupSpec q8 = GroupSpec::quaternion(3);
  auto h = bar_cohomology(q8, Coefficients::integers(), 2);
  REQUIRE(h.representatives.size() == 2);
  FiniteGroup g = FiniteGroup::build(q8);
  BarComplex bar(g, Coefficients::integers());
  CupOracle oracle(q8, 5);
  for (std::size_t t = 0; t < 2; ++t) {
    const auto& f = h.representatives[t];
    for (std::uint64_t c = 0; c < bar.cells(3); ++c) {
      Integer s = 0;
      for (const auto& [face, v] : bar.coboundary_row(2, c)) s += v * f.values[face];
      REQUIRE(s == 0);
    }
    auto coords = oracle.class_of(f);
    CHECK(coords == std::vector<Integer>{t == 0 ? 1 : 0, t == 1 ? 1 : 0});
  }
}

TEST_CASE("periodic resolution") {
  CHECK(periodic_cohomology(6, Coefficients::integers(), 2) == fin({6}));
  CHECK(periodic_cohomology(5, Coefficients::integers(), 3) == FinAb::zero());
  CHECK(periodic_cohomology(7, Coefficients::integers(), 4) == bar_h(GroupSpec::cyclic(7), 4));
  for (long m = 2; m <= 12; ++m)
    for (int n = 0; n <= 4; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(periodic_cohomology(m, Coefficients::integers(), n) == bar_h(GroupSpec::cyclic(m), n));
    }
  FiniteGroup c6 = FiniteGroup::build(GroupSpec::cyclic(6));
  Coefficients tw = Coefficients::twisted(c6, 7, 6, 1, 1, 1);
  for (int n = 0; n <= 4; ++n) CHECK(periodic_cohomology(6, tw, n) == bar_cohomology(GroupSpec::cyclic(6), tw, n).group);
}

TEST_CASE("odd integral cohomology vanishes on the finite families") {
  for (const auto& s : small_specs())
    for (int n : {1, 3}) {
      CAPTURE(s.name());
      CHECK(bar_h(s, n) == FinAb::zero());
    }
}

TEST_CASE("induced action examples") {
  InducedAction m = induced_action(GroupSpec::metacyclic(7, 3, 2), th(2, 1), 2);
  CHECK(m.orders == std::vector<Integer>{3});
  CHECK(m.matrix.get(0, 0) == 1);

  for (int n = 0; n <= 4; ++n) {
    InducedAction q = induced_action(GroupSpec::quaternion(3), ThetaSpec::identity(), n);
    CHECK(q.matrix == IntMatrix::identity(q.orders.size()));
  }

  // y ↦ xy on Q_16: a transvection of H^2 = Z_2², i.e. [[1,1],[0,1]] up to change of basis.
  ThetaSpec t;
  t.l = 1;
  InducedAction q16 = induced_action(GroupSpec::quaternion(4), t, 2);
  REQUIRE(q16.orders == std::vector<Integer>{2, 2});
  auto b = bits(q16.matrix);
  auto b2 = bits(q16.matrix * q16.matrix);
  CHECK(b != std::array<std::array<int, 2>, 2>{{{1, 0}, {0, 1}}});
  CHECK(b2 == std::array<std::array<int, 2>, 2>{{{1, 0}, {0, 1}}});
}

TEST_CASE("induced action is contravariant on commuting automorphisms") {
  const GroupSpec s = GroupSpec::metacyclic(7, 3, 2);
  FiniteGroup g = FiniteGroup::build(s);
  FreeResolution p(g, 7);
  auto u = theta_permutation(g, th(3, 1)).perm, v = theta_permutation(g, th(2, 1, 1)).perm;
  std::vector<std::uint32_t> uv(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) uv[k] = u[v[k]];
  for (int n = 2; n <= 6; n += 2) {
    auto a = induced_action(p, u, n), b = induced_action(p, v, n), ab = induced_action(p, uv, n);
    IntMatrix prod = b.matrix * a.matrix;
    for (std::size_t r = 0; r < prod.rows(); ++r)
      for (std::size_t c = 0; c < prod.cols(); ++c) CHECK(mod(prod.get(r, c) - ab.matrix.get(r, c), a.orders[r]) == 0);
  }
}

TEST_CASE("cohomology of the mapping torus from invariants and coinvariants") {
  const GroupSpec s = GroupSpec::metacyclic(7, 3, 2);
  CHECK(fz_cohomology(s, th(2, 1), 2) == fin({3}));
  CHECK(fz_cohomology(s, th(2, 1), 7) == fin({21}));
  CHECK(fz_cohomology(s, th(2, 1), 0) == FinAb::free(1));
  CHECK(fz_cohomology(s, th(2, 1), 1) == FinAb::free(1));
  FreeResolution p(FiniteGroup::build(s), 7);
  for (int n = 2; n <= 6; n += 2) {
    CHECK(fz_cohomology(s, ThetaSpec::identity(), n) == p.cohomology(n, Coefficients::integers()).group());
    CHECK(fz_cohomology(s, th(2, 1), n) == fz_cohomology(s, th(2, 1), n + 1));
  }
}

TEST_CASE("order-3 automorphism of Q_8 through the oracle") {
  ThetaSpec t;
  t.q_images = QuaternionImages{0, 1, 1, 1};
  const GroupSpec q8 = GroupSpec::quaternion(3);
  CHECK(fz_cohomology(q8, t, 2) == FinAb::zero());
  CHECK(fz_cohomology(q8, t, 3) == FinAb::zero());
  CHECK(fz_cohomology(q8, t, 4) == fin({8}));
  CHECK(fz_cohomology(q8, t, 5) == fin({8}));
}

TEST_CASE("Alexander-Whitney cup products") {
  const GroupSpec q8 = GroupSpec::quaternion(3);
  CupOracle oracle(q8, 7);
  BarCochain one{0, {Integer(1)}};
  auto g0 = oracle.representative(2, 0), g1 = oracle.representative(2, 1);
  CHECK(oracle.class_of(aw_cup(q8, one, g1)) == oracle.class_of(g1));

  // Any two distinct nonzero classes of H^2(Q_8) multiply to the element of order 2 in H^4 = Z_8.
  REQUIRE(oracle.cohomology(4).orders() == std::vector<Integer>{8});
  CHECK(oracle.class_of(aw_cup(q8, g0, g1)) == std::vector<Integer>{4});
  CHECK(oracle.class_of(aw_cup(q8, g0, g0)) == std::vector<Integer>{0});
  CHECK(oracle.class_of(aw_cup(q8, g1, g1)) == std::vector<Integer>{0});
  CHECK(oracle.cup(2, {1, 0}, 2, {0, 1}) == std::vector<Integer>{4});

  const GroupSpec c5 = GroupSpec::cyclic(5);
  CupOracle cyc(c5, 5);
  auto sq = cyc.cup(2, {1}, 2, {1});
  REQUIRE(sq.size() == 1);
  CHECK(gcd(sq[0], Integer(5)) == 1);
}

TEST_CASE("class-level cup is graded-commutative and associative") {
  for (const auto& s : {GroupSpec::quaternion(3), GroupSpec::metacyclic(7, 3, 2), GroupSpec::cyclic(6)}) {
    CupOracle o(s, 7);
    auto basis = [&](int n) {
      std::vector<std::vector<Integer>> b;
      std::size_t k = o.cohomology(n).orders().size();
      for (std::size_t t = 0; t < k; ++t) {
        std::vector<Integer> e(k, 0);
        e[t] = 1;
        b.push_back(e);
      }
      return b;
    };
    for (const auto& x : basis(2))
      for (const auto& y : basis(2)) {
        CHECK(o.cup(2, x, 2, y) == o.cup(2, y, 2, x));
        for (const auto& z : basis(2)) CHECK(o.cup(4, o.cup(2, x, 2, y), 2, z) == o.cup(2, x, 4, o.cup(2, y, 2, z)));
      }
  }
}

TEST_CASE("replayed family-1 products") {
  const GroupSpec s = GroupSpec::metacyclic(7, 3, 2);
  const ThetaSpec t = th(2, 1);
  Ring ring(s, t);
  CohClass c = paper_cup_oracle(s, t, {Gen::PhiA, 1}, {Gen::PsiA, 2});
  CHECK(c.degree() == 7);
  CHECK(c.is_zero());
  CHECK(paper_cup_oracle(s, t, {Gen::PhiB, 1}, {Gen::Eta, 0}) == ring.gen({Gen::PsiB, 1}));

  std::mt19937_64 rng(5);
  for (int k = 0; k < 10; ++k) {
    SpecTheta st = random_family1(rng, 50, 12);
    for (long i = 1; i <= 3; ++i)
      for (long j = 1; j <= 3; ++j)
        CHECK(paper_cup_oracle(st.spec, st.theta, {Gen::PsiA, i}, {Gen::PsiA, j}).is_zero());
  }
}

TEST_CASE("replayed products agree with the closed form on random specs") {
  std::mt19937_64 rng(9);
  const std::vector<Gen> gens = {Gen::Eta, Gen::PhiA, Gen::PhiB, Gen::PsiA, Gen::PsiB};
  for (int k = 0; k < 25; ++k) {
    SpecTheta st = random_family1(rng, 50, 12);
    Ring ring(st.spec, st.theta);
    for (Gen x : gens)
      for (Gen y : gens)
        for (long i = 1; i <= 3; ++i)
          for (long j = 1; j <= 3; ++j) {
            Symbol l{x, x == Gen::Eta ? 0 : i}, r{y, y == Gen::Eta ? 0 : j};
            CAPTURE(st.spec.name());
            CAPTURE(ring.name(l));
            CAPTURE(ring.name(r));
            CHECK(paper_cup_oracle(st.spec, st.theta, l, r) == ring.product(l, r));
          }
  }
}
