#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "vcg/errors.hpp"
#include "vcg/lattice.hpp"
#include "vcg/smith.hpp"
#include "vcg/sparse_elim.hpp"

using namespace vcg;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound, double density = 1.0) {
  std::uniform_int_distribution<long> val(-bound, bound);
  std::uniform_real_distribution<double> coin(0, 1);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (coin(rng) < density) m.set(i, j, val(rng));
  return m;
}

bool is_diagonal_chain(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (const auto& e : d.row(i))
      if (e.col != i || e.value < 0) return false;
  std::size_t k = std::min(d.rows(), d.cols());
  for (std::size_t t = 0; t + 1 < k; ++t)
    if (!divides(d.get(t, t), d.get(t + 1, t + 1))) return false;
  return true;
}

// Order of e_i in Z^2 / im A for nonsingular 2x2 A, by direct search.
long order_in_quotient(const IntMatrix& a, int i) {
  Integer p = a.get(0, 0), q = a.get(0, 1), r = a.get(1, 0), s = a.get(1, 1);
  Integer det = p * s - q * r;
  for (long k = 1;; ++k) {
    Integer v0 = i == 0 ? Integer(k) : Integer(0), v1 = i == 1 ? Integer(k) : Integer(0);
    // A y = v  <=>  y = adj(A) v / det
    Integer y0 = s * v0 - q * v1, y1 = -r * v0 + p * v1;
    if (divides(det, y0) && divides(det, y1)) return k;
  }
}

}  // namespace

TEST_CASE("smith normal form of small examples") {
  SnfResult z = smith_normal_form(IntMatrix::from_rows({{0}}));
  CHECK(z.D == IntMatrix::from_rows({{0}}));

  IntMatrix a = IntMatrix::from_rows({{2, 0}, {0, 3}});
  SnfResult s = smith_normal_form(a);
  CHECK(s.D == IntMatrix::from_rows({{1, 0}, {0, 6}}));
  CHECK(s.U * a * s.V == s.D);

  SnfResult id = smith_normal_form(IntMatrix::identity(2));
  CHECK(id.D == IntMatrix::identity(2));

  SnfResult empty = smith_normal_form(IntMatrix(0, 3));
  CHECK(empty.D.rows() == 0);
  CHECK(empty.V.rows() == 3);
}

TEST_CASE("cokernel invariants") {
  CHECK(cokernel_invariants(IntMatrix::from_rows({{6}})) == FinAb::cyclic(6));
  CHECK(cokernel_invariants(IntMatrix(2, 2)) == FinAb::free(2));
  IntMatrix a = IntMatrix::from_rows({{2, 4}, {0, 4}});
  FinAb g = cokernel_invariants(a);
  CHECK(g == FinAb::from_cyclic({2, 4}));
  // Brute-force cross-check: order |det| = 8 and exponent lcm of generator orders.
  long e = std::lcm(order_in_quotient(a, 0), order_in_quotient(a, 1));
  CHECK(g.torsion_order() == 8);
  CHECK(g.torsion().back() == e);
}

TEST_CASE("cokernel of random 2x2 matrices agrees with brute force") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix a = random_matrix(rng, 2, 2, 12);
    Integer det = a.get(0, 0) * a.get(1, 1) - a.get(0, 1) * a.get(1, 0);
    if (det == 0) continue;
    FinAb g = cokernel_invariants(a);
    Integer n = abs(det);
    long e = std::lcm(order_in_quotient(a, 0), order_in_quotient(a, 1));
    CHECK(g.torsion_order() == n);
    CHECK(g == FinAb::from_cyclic({n / e, Integer(e)}));
  }
}

TEST_CASE("kernel basis") {
  IntMatrix k = kernel_basis(IntMatrix::from_rows({{1, 1}}));
  REQUIRE(k.cols() == 1);
  CHECK(abs(k.get(0, 0)) == 1);
  CHECK(k.get(0, 0) == -k.get(1, 0));
  CHECK(kernel_basis(IntMatrix::identity(3)).cols() == 0);
  IntMatrix k2 = kernel_basis(IntMatrix::from_rows({{2, -2}, {1, -1}}));
  REQUIRE(k2.cols() == 1);
  CHECK(abs(k2.get(0, 0)) == 1);
  CHECK(k2.get(0, 0) == k2.get(1, 0));
}

TEST_CASE("kernel basis is saturated") {
  // x + 2y + 4z = 0 over Z has a basis, not just a full-rank sublattice.
  IntMatrix a = IntMatrix::from_rows({{1, 2, 4}});
  IntMatrix k = kernel_basis(a);
  REQUIRE(k.cols() == 2);
  CHECK((a * k).is_zero());
  // Saturation: Z^3 / im k is torsion-free.
  CHECK(cokernel_invariants(k) == FinAb::free(1));
}

TEST_CASE("subquotient") {
  Subquotient h = subquotient(IntMatrix(1, 1), IntMatrix::from_rows({{5}}));
  CHECK(h.group() == FinAb::cyclic(5));
  REQUIRE(h.lifts().size() == 1);
  CHECK(abs(h.lifts()[0][0]) % 5 != 0);

  CHECK(subquotient(IntMatrix::from_rows({{1}}), IntMatrix(1, 0)).group().is_zero());

  // Even degree of the periodic complex for Z_6: d_out = t - 1 = 0, d_in = N = 6.
  Subquotient z6 = subquotient(IntMatrix(1, 1), IntMatrix::from_rows({{6}}));
  CHECK(z6.group() == FinAb::cyclic(6));
  CHECK(z6.coordinates({Integer(7)}) == std::vector<Integer>{z6.coordinates({Integer(1)})[0]});

  CHECK_THROWS_AS(subquotient(IntMatrix::from_rows({{1}}), IntMatrix::from_rows({{1}})), ComplexError);
  try {
    subquotient(IntMatrix::from_rows({{1, 0}, {0, 1}}), IntMatrix::from_rows({{0}, {3}}));
  } catch (const ComplexError& e) {
    CHECK(std::string(e.what()).find("[1][0]") != std::string::npos);
  }
}

TEST_CASE("subquotient with a modulus") {
  // Z --0--> Z --0--> Z tensored with Z/4 has homology Z/4.
  CHECK(subquotient(IntMatrix(1, 1), IntMatrix(1, 1), 4).group() == FinAb::cyclic(4));
  // Z --2--> Z mod 4: ker(2 on Z/4) / 0 = Z/2.
  CHECK(subquotient(IntMatrix::from_rows({{2}}), IntMatrix(1, 1), 4).group() == FinAb::cyclic(2));
  // Z --2--> Z mod 4, target degree: Z/4 / 2Z/4 = Z/2.
  CHECK(subquotient(IntMatrix(1, 1), IntMatrix::from_rows({{2}}), 4).group() == FinAb::cyclic(2));
  // Coefficients mod 5 of a complex whose integral boundary is 3: unit, so zero.
  CHECK(subquotient(IntMatrix(1, 1), IntMatrix::from_rows({{3}}), 5).group().is_zero());
}

TEST_CASE("subquotient lifts are cocycles and coordinates recover generators") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    // d_out = B, d_in = C with B C = 0: take C random, B a basis of the left kernel of C scaled.
    IntMatrix c = random_matrix(rng, 5, 3, 4, 0.6);
    IntMatrix left = kernel_basis(c.transpose()).transpose();
    IntMatrix b = left;
    Subquotient h = subquotient(b, c);
    for (std::size_t g = 0; g < h.lifts().size(); ++g) {
      CHECK((b.apply(h.lifts()[g])) == std::vector<Integer>(b.rows()));
      auto co = h.coordinates(h.lifts()[g]);
      for (std::size_t t = 0; t < co.size(); ++t) CHECK(co[t] == (t == g ? 1 : 0));
    }
    // Independence from the kernel basis: rescaling rows of d_out changes nothing.
    IntMatrix w = IntMatrix::identity(b.rows());
    if (b.rows() > 1) w.set(0, 1, 3);
    CHECK(subquotient(w * b, c).group() == h.group());
  }
}

TEST_CASE("invariant factors through sparse elimination match dense SNF") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix a = random_matrix(rng, 1 + rng() % 15, 1 + rng() % 15, 3, 0.3);
    Invariants inv = invariant_factors(a);
    SnfResult s = smith_normal_form(a);
    std::vector<Integer> dense;
    for (const auto& d : s.diagonal())
      if (d != 0) dense.push_back(d);
    CHECK(inv.rank == s.rank());
    CHECK(FinAb::from_cyclic(inv.factors) == FinAb::from_cyclic(dense));
  }
}

TEST_CASE("sparse eliminator modulo m") {
  SparseEliminator el(2, 6);
  el.add_row({{0, 5}, {1, 2}});
  el.add_row({{0, 1}, {1, 4}});
  el.pivot(0, 0);
  CHECK(el.entry(1, 1) == mod(Integer(4) - Integer(2) * 5, Integer(6)));  // 5^{-1} = 5 mod 6
  CHECK_THROWS_AS(el.pivot(1, 1), std::domain_error);
}

TEST_CASE("SNF properties on random matrices") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
    IntMatrix a = random_matrix(rng, r, c, 30);
    SnfResult s = smith_normal_form(a);
    CHECK(s.U * a * s.V == s.D);
    CHECK(is_diagonal_chain(s.D));
    CHECK(abs(determinant(s.U.dense())) == 1);
    CHECK(abs(determinant(s.V.dense())) == 1);
  }
}

TEST_CASE("linear solver") {
  IntMatrix a = IntMatrix::from_rows({{2, 0}, {0, 3}, {0, 0}});
  LinearSolver solver(a);
  auto x = solver.solve({Integer(4), Integer(9), Integer(0)});
  REQUIRE(x);
  CHECK(a.apply(*x) == std::vector<Integer>{4, 9, 0});
  CHECK_FALSE(solver.solve({Integer(1), Integer(0), Integer(0)}));
  CHECK_FALSE(solver.solve({Integer(0), Integer(0), Integer(1)}));
}

TEST_CASE("FinAb canonical form") {
  CHECK(FinAb::from_cyclic({5, 3, 8}) == FinAb::cyclic(120));
  CHECK(FinAb::from_cyclic({2, 2, 1, 0}).to_string() == "Z ⊕ Z_2 ⊕ Z_2");
  CHECK(FinAb::from_cyclic({4, 6}).torsion() == std::vector<Integer>{2, 12});
  CHECK(FinAb().to_string() == "0");
}

TEST_CASE("kernel and cokernel of homomorphisms between finite abelian groups, by enumeration") {
  std::mt19937_64 rng(17);
  std::vector<std::vector<long>> shapes = {{4, 6}, {2, 2}, {8}, {3, 9}, {2, 4, 4}, {5}};
  for (int t = 0; t < 200; ++t) {
    const auto& src = shapes[rng() % shapes.size()];
    const auto& dst = shapes[rng() % shapes.size()];
    IntMatrix m(dst.size(), src.size());
    for (std::size_t j = 0; j < dst.size(); ++j)
      for (std::size_t i = 0; i < src.size(); ++i) {
        long step = dst[j] / std::gcd(dst[j], src[i]);
        m.set(j, i, Integer(step * static_cast<long>(rng() % 7)));
      }
    // Enumerate the source and count the kernel and the image.
    std::vector<long> x(src.size(), 0);
    long ker = 0;
    std::set<std::vector<long>> image;
    for (;;) {
      std::vector<long> y(dst.size());
      for (std::size_t j = 0; j < dst.size(); ++j) {
        long v = 0;
        for (std::size_t i = 0; i < src.size(); ++i) v += m.get(j, i).get_si() * x[i];
        y[j] = ((v % dst[j]) + dst[j]) % dst[j];
      }
      if (std::all_of(y.begin(), y.end(), [](long v) { return v == 0; })) ++ker;
      image.insert(y);
      std::size_t p = 0;
      while (p < x.size() && ++x[p] == src[p]) x[p++] = 0;
      if (p == x.size()) break;
    }
    long dst_size = 1;
    for (long d : dst) dst_size *= d;
    std::vector<Integer> so(src.begin(), src.end()), dq(dst.begin(), dst.end());
    FinAb k = hom_kernel(m, so, dq);
    FinAb c = hom_cokernel(m, dq);
    CHECK(k.is_finite());
    CHECK(k.torsion_order() == ker);
    CHECK(c.torsion_order() == dst_size / static_cast<long>(image.size()));
  }
  // Mixed free parts: multiplication by 2 on Z ⊕ Z_4.
  IntMatrix two = IntMatrix::from_rows({{2, 0}, {0, 2}});
  CHECK(hom_kernel(two, {0, 4}, {0, 4}) == FinAb::cyclic(2));
  CHECK(hom_cokernel(two, {0, 4}) == FinAb::from_cyclic({2, 2}));
  IntMatrix zero = IntMatrix::from_rows({{0}});
  CHECK(hom_kernel(zero, {0}, {0}) == FinAb::free(1));
}
