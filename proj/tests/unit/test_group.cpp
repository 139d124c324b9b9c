#include <random>

#include "doctest.h"
#include "vcg/arith.hpp"
#include "vcg/errors.hpp"
#include "vcg/group.hpp"

using namespace vcg;

namespace {

std::vector<GroupSpec> sample_specs() {
  return {GroupSpec::cyclic(1),          GroupSpec::cyclic(6),           GroupSpec::metacyclic(7, 3, 2),
          GroupSpec::metacyclic(5, 4, 2), GroupSpec::quaternion(3),      GroupSpec::quaternion(4),
          GroupSpec::zb_times_q(3, 3),    GroupSpec::zazbq(5, 3, 3, 1, 4, 4), GroupSpec::zazbq(3, 1, 3, 1, 2, 2),
          GroupSpec::zazbq(1, 1, 3, 1, 1, 1), GroupSpec::zazbq(7, 3, 3, 2, 6, 1)};
}

bool throws_with(const GroupSpec& s, const std::string& needle) {
  try {
    validate(s);
  } catch (const ValidationError& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  }
  return false;
}

}  // namespace

TEST_CASE("validation of group parameters") {
  CHECK_NOTHROW(validate(GroupSpec::metacyclic(7, 3, 2)));
  CHECK(throws_with(GroupSpec::metacyclic(9, 3, 4), "gcd(a,b)=1"));
  CHECK(throws_with(GroupSpec::metacyclic(7, 3, 3), "r^b ≡ 1 (mod a)"));
  CHECK(throws_with(GroupSpec::metacyclic(7, 3, 1), "gcd(a,(r−1)·b)=1"));
  CHECK_NOTHROW(validate(GroupSpec::zazbq(5, 3, 3, 1, 4, 4)));
  CHECK(throws_with(GroupSpec::zazbq(5, 3, 3, 1, 2, 4), "r^b ≡ r_x^2 ≡ r_y^2"));
  CHECK(throws_with(GroupSpec::zazbq(5, 2, 3, 1, 4, 4), "gcd(ab,2)=1"));
  CHECK(throws_with(GroupSpec::quaternion(2), "i ≥ 3"));
  CHECK(throws_with(GroupSpec::cyclic(0), "m ≥ 1"));
}

TEST_CASE("validated metacyclic specs have gcd(r-1, a) = 1") {
  for (std::int64_t a = 1; a <= 40; ++a)
    for (std::int64_t b = 1; b <= 8; ++b)
      for (std::int64_t r = 0; r < a; ++r) {
        GroupSpec s = GroupSpec::metacyclic(a, b, r);
        try {
          validate(s);
        } catch (const ValidationError&) {
          continue;
        }
        CHECK(gcd64(mod64(r - 1, a), a) == 1);
      }
}

TEST_CASE("group laws from the presentations") {
  GroupSpec m = GroupSpec::metacyclic(7, 3, 2);
  Element a{{1, 0, 0, 0}}, b{{0, 1, 0, 0}};
  CHECK(multiply(m, multiply(m, b, a), inverse(m, b)) == Element{{2, 0, 0, 0}});

  GroupSpec q = GroupSpec::quaternion(3);
  Element x{{0, 0, 1, 0}}, y{{0, 0, 0, 1}};
  CHECK(multiply(q, multiply(q, x, y), x) == y);
  CHECK(power(q, x, 2) == power(q, y, 2));
  CHECK(power(q, x, 4) == identity_element());

  GroupSpec q16 = GroupSpec::quaternion(4);
  CHECK(power(q16, x, 4) == power(q16, y, 2));
  CHECK(multiply(q16, multiply(q16, x, y), x) == y);

  GroupSpec z = GroupSpec::zazbq(5, 3, 3, 1, 4, 4);
  CHECK(multiply(z, multiply(z, x, a), inverse(z, x)) == Element{{4, 0, 0, 0}});
}

TEST_CASE("group axioms on every sample spec") {
  std::mt19937_64 rng(5);
  for (const auto& s : sample_specs()) {
    FiniteGroup g = FiniteGroup::build(s);
    CAPTURE(s.name());
    CHECK(g.order() == static_cast<std::size_t>(s.order()));
    CHECK(g.elements()[0] == identity_element());
    std::uniform_int_distribution<std::uint32_t> pick(0, g.order() - 1);
    for (int t = 0; t < 300; ++t) {
      std::uint32_t p = pick(rng), q = pick(rng), r = pick(rng);
      CHECK(g.mul(g.mul(p, q), r) == g.mul(p, g.mul(q, r)));
      CHECK(g.mul(0, p) == p);
      CHECK(g.mul(p, g.inv(p)) == 0);
    }
    // Generators generate.
    std::vector<char> seen(g.order(), 0);
    std::vector<std::uint32_t> frontier{0};
    seen[0] = 1;
    while (!frontier.empty()) {
      std::uint32_t h = frontier.back();
      frontier.pop_back();
      for (auto gen : g.generators())
        if (!seen[g.mul(h, gen)]) {
          seen[g.mul(h, gen)] = 1;
          frontier.push_back(g.mul(h, gen));
        }
    }
    CHECK(std::count(seen.begin(), seen.end(), 1) == static_cast<long>(g.order()));
  }
}

TEST_CASE("enumeration") {
  CHECK(enumerate(GroupSpec::cyclic(6)).size() == 6);
  CHECK(enumerate(GroupSpec::quaternion(3)).size() == 8);
  CHECK(enumerate(GroupSpec::zazbq(5, 3, 3, 1, 4, 4)).size() == 120);
  CHECK_THROWS_AS(enumerate(GroupSpec::quaternion(10)), CapacityError);
  try {
    enumerate(GroupSpec::quaternion(10));
  } catch (const CapacityError& e) {
    CHECK(std::string(e.what()).find("1024") != std::string::npos);
  }
}

TEST_CASE("theta permutations") {
  FiniteGroup m = FiniteGroup::build(GroupSpec::metacyclic(7, 3, 2));
  ThetaSpec id;
  ThetaMap tid = theta_permutation(m, id);
  for (std::size_t k = 0; k < m.order(); ++k) CHECK(tid.perm[k] == k);

  ThetaSpec t;
  t.c_a = 2;
  ThetaMap tm = theta_permutation(m, t);
  CHECK(permutation_order(tm.perm) == 3);
  CHECK(tm.theta_a == 2);

  FiniteGroup q = FiniteGroup::build(GroupSpec::quaternion(3));
  ThetaSpec tq;
  tq.k = 1;
  tq.l = 1;
  ThetaMap qm = theta_permutation(q, tq);
  CHECK(q.elements()[qm.perm[q.index_of(Element{{0, 0, 1, 0}})]] == Element{{0, 0, 1, 0}});
  CHECK(q.elements()[qm.perm[q.index_of(Element{{0, 0, 0, 1}})]] == Element{{0, 0, 1, 1}});

  ThetaSpec swap;
  swap.q_images = QuaternionImages{0, 1, 1, 0};
  ThetaMap sm = theta_permutation(q, swap);
  CHECK(q.elements()[sm.perm[q.index_of(Element{{0, 0, 1, 0}})]] == Element{{0, 0, 0, 1}});
}

TEST_CASE("theta permutations respect multiplication") {
  std::vector<std::pair<GroupSpec, ThetaSpec>> cases;
  ThetaSpec t1;
  t1.c_a = 2;
  t1.c = 3;
  cases.push_back({GroupSpec::metacyclic(7, 3, 2), t1});
  ThetaSpec t2;
  t2.k = 3;
  t2.l = 2;
  cases.push_back({GroupSpec::quaternion(4), t2});
  ThetaSpec t3;
  t3.c_a = 2;
  t3.c_b = 2;
  t3.k = 3;
  cases.push_back({GroupSpec::zazbq(5, 3, 3, 1, 4, 4), t3});
  for (const auto& [spec, theta] : cases) {
    FiniteGroup g = FiniteGroup::build(spec);
    ThetaMap map = theta_permutation(g, theta);
    for (std::uint32_t x = 0; x < g.order(); ++x)
      for (std::uint32_t y = 0; y < g.order(); ++y) CHECK(map.perm[g.mul(x, y)] == g.mul(map.perm[x], map.perm[y]));
  }
}

TEST_CASE("non-automorphisms are rejected with a witness") {
  GroupSpec s = GroupSpec::metacyclic(7, 3, 2);
  ThetaSpec bad;
  bad.c_b = 2;  // b ↦ b^2 does not respect b a b^{-1} = a^2
  CHECK_THROWS_AS(validate(s, bad), ValidationError);
  try {
    validate(s, bad);
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("g=") != std::string::npos);
  }
  ThetaSpec even_k;
  even_k.k = 2;
  CHECK_THROWS_AS(validate(GroupSpec::quaternion(4), even_k), ValidationError);
  ThetaSpec collapse;
  collapse.c_a = 7;
  CHECK_THROWS_AS(validate(s, collapse), ValidationError);
}

TEST_CASE("automorphism check agrees with brute force over random candidate images") {
  std::mt19937_64 rng(5);
  auto pick = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
  std::vector<GroupSpec> specs = {GroupSpec::metacyclic(7, 3, 2), GroupSpec::metacyclic(9, 2, 8),
                                  GroupSpec::quaternion(3),       GroupSpec::quaternion(4),
                                  GroupSpec::zb_times_q(3, 3),    GroupSpec::zazbq(5, 3, 3, 1, 4, 4),
                                  GroupSpec::zazbq(5, 1, 3, 1, 1, 4), GroupSpec::cyclic(12)};
  int accepted = 0;
  for (const auto& s : specs) {
    FiniteGroup g = FiniteGroup::build(s);
    std::int64_t a = s.variant == Variant::Cyclic ? s.m : s.a;
    for (int t = 0; t < 150; ++t) {
      ThetaSpec th;
      th.c_a = pick(0, a - 1 > 0 ? a - 1 : 0);
      th.c_b = pick(0, s.b > 1 ? s.b - 1 : 0);
      th.c = pick(0, a - 1 > 0 ? a - 1 : 0);
      if (s.has_quaternion()) {
        th.c_x = pick(0, a - 1 > 0 ? a - 1 : 0);
        th.c_y = pick(0, a - 1 > 0 ? a - 1 : 0);
        th.q_images = QuaternionImages{pick(0, s.x_order() - 1), pick(0, 1), pick(0, s.x_order() - 1), pick(0, 1)};
      }
      bool brute = true;
      std::vector<std::uint32_t> img(g.order());
      std::vector<char> hit(g.order(), 0);
      for (std::uint32_t k = 0; k < g.order(); ++k) {
        img[k] = g.index_of(apply_theta(s, th, g.elements()[k]));
        if (hit[img[k]]) brute = false;
        hit[img[k]] = 1;
      }
      for (std::uint32_t x = 0; x < g.order() && brute; ++x)
        for (std::uint32_t y = 0; y < g.order() && brute; ++y)
          if (img[g.mul(x, y)] != g.mul(img[x], img[y])) brute = false;
      bool fast = true;
      try {
        validate(s, th);
      } catch (const ValidationError&) {
        fast = false;
      }
      INFO(s.name() << " " << th.describe());
      CHECK(fast == brute);
      accepted += fast;
    }
  }
  CHECK(accepted > 20);
}
