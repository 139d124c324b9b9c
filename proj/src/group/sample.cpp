#include "vcg/sample.hpp"

#include "vcg/arith.hpp"
#include "vcg/errors.hpp"

namespace vcg {

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

bool valid(const GroupSpec& s) {
  try {
    validate(s);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

std::int64_t random_unit(std::mt19937_64& rng, std::int64_t m) {
  if (m <= 1) return 1;
  for (;;) {
    std::int64_t u = uniform(rng, 1, m - 1);
    if (gcd64(u, m) == 1) return u;
  }
}

}  // namespace

std::vector<GroupSpec> metacyclic_specs(std::int64_t max_a, std::int64_t max_b) {
  std::vector<GroupSpec> out;
  for (std::int64_t a = 1; a <= max_a; ++a)
    for (std::int64_t b = 1; b <= max_b; ++b)
      for (std::int64_t r = 1; r < std::max<std::int64_t>(a, 2); ++r) {
        GroupSpec s = GroupSpec::metacyclic(a, b, r);
        if (valid(s)) out.push_back(s);
      }
  return out;
}

std::vector<GroupSpec> zazbq_specs(std::int64_t max_a, std::int64_t max_b, std::int64_t max_i) {
  std::vector<GroupSpec> out;
  for (std::int64_t a = 1; a <= max_a; a += 2)
    for (std::int64_t b = 1; b <= max_b; b += 2)
      for (std::int64_t i = 3; i <= max_i; ++i) {
        std::int64_t top = std::max<std::int64_t>(a, 2);
        for (std::int64_t r = 1; r < top; ++r) {
          if (powmod64(r, b, a) != mod64(1, a)) continue;
          for (std::int64_t rx = 1; rx < top; ++rx) {
            if (powmod64(rx, 2, a) != mod64(1, a)) continue;
            for (std::int64_t ry = 1; ry < top; ++ry) {
              GroupSpec s = GroupSpec::zazbq(a, b, i, r, rx, ry);
              if (valid(s)) out.push_back(s);
            }
          }
        }
      }
  return out;
}

ThetaSpec random_theta(std::mt19937_64& rng, const GroupSpec& spec, int max_tries) {
  std::int64_t a = spec.variant == Variant::Cyclic ? spec.m : spec.a;
  for (int t = 0; t < max_tries; ++t) {
    ThetaSpec th;
    th.c_a = random_unit(rng, a);
    th.c_b = random_unit(rng, spec.b);
    bool shifts = uniform(rng, 0, 1) == 1;
    if (shifts && a > 1) {
      th.c = uniform(rng, 0, a - 1);
      if (spec.has_quaternion()) {
        th.c_x = uniform(rng, 0, a - 1);
        th.c_y = uniform(rng, 0, a - 1);
      }
    }
    if (spec.has_quaternion()) {
      if (spec.i == 3 && uniform(rng, 0, 3) == 0) {
        QuaternionImages q{uniform(rng, 0, 3), uniform(rng, 0, 1), uniform(rng, 0, 3), uniform(rng, 0, 1)};
        th.q_images = q;
      } else {
        th.k = 2 * uniform(rng, 0, spec.x_order() - 1) + 1;
        th.k %= 2 * spec.x_order();
        th.l = uniform(rng, 0, spec.x_order() - 1);
      }
    }
    try {
      validate(spec, th);
      return th;
    } catch (const ValidationError&) {
    }
  }
  return ThetaSpec::identity();
}

SpecTheta random_family1(std::mt19937_64& rng, std::int64_t max_a, std::int64_t max_b) {
  for (;;) {
    std::int64_t a = uniform(rng, 1, max_a), b = uniform(rng, 1, max_b);
    std::int64_t r = a > 1 ? uniform(rng, 1, a - 1) : 1;
    GroupSpec s = GroupSpec::metacyclic(a, b, r);
    if (!valid(s)) continue;
    return {s, random_theta(rng, s)};
  }
}

SpecTheta random_family2(std::mt19937_64& rng, std::int64_t max_a, std::int64_t max_b, std::int64_t max_i) {
  for (;;) {
    std::int64_t a = 2 * uniform(rng, 0, (max_a - 1) / 2) + 1, b = 2 * uniform(rng, 0, (max_b - 1) / 2) + 1;
    std::int64_t i = uniform(rng, 3, max_i);
    std::vector<std::int64_t> roots, rs;
    for (std::int64_t x = 1; x < std::max<std::int64_t>(a, 2); ++x) {
      if (powmod64(x, 2, a) == mod64(1, a)) roots.push_back(x);
      if (powmod64(x, b, a) == mod64(1, a)) rs.push_back(x);
    }
    auto pick = [&](const std::vector<std::int64_t>& v) { return v[uniform(rng, 0, static_cast<std::int64_t>(v.size()) - 1)]; };
    GroupSpec s = GroupSpec::zazbq(a, b, i, pick(rs), pick(roots), pick(roots));
    if (!valid(s)) continue;
    return {s, random_theta(rng, s)};
  }
}

}  // namespace vcg
