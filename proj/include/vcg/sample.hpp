#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "vcg/group.hpp"

namespace vcg {

struct SpecTheta {
  GroupSpec spec;
  ThetaSpec theta;
};

// Every valid Metacyclic{a,b,r} with 1 ≤ a ≤ max_a, 1 ≤ b ≤ max_b, 1 ≤ r < a (r = 1 when a = 1).
std::vector<GroupSpec> metacyclic_specs(std::int64_t max_a, std::int64_t max_b);
// Every valid ZaZbQ{a,b,i,r,r_x,r_y} with odd a ≤ max_a, odd b ≤ max_b, 3 ≤ i ≤ max_i.
std::vector<GroupSpec> zazbq_specs(std::int64_t max_a, std::int64_t max_b, std::int64_t max_i);

// Random spec with a validated θ, by rejection.
SpecTheta random_family1(std::mt19937_64& rng, std::int64_t max_a = 50, std::int64_t max_b = 12);
SpecTheta random_family2(std::mt19937_64& rng, std::int64_t max_a = 15, std::int64_t max_b = 7, std::int64_t max_i = 5);

// Random θ for a fixed kernel by rejection; the identity if no candidate validates within max_tries.
ThetaSpec random_theta(std::mt19937_64& rng, const GroupSpec& spec, int max_tries = 200);

}  // namespace vcg
