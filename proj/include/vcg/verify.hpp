#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vcg/finab.hpp"
#include "vcg/group.hpp"

namespace vcg {

enum class Verdict { Match, Mismatch, Skipped };
const char* to_string(Verdict v);

struct CheckRecord {
  std::string check;    // finite, resolution, infinite, cup, period, ring
  std::string spec;     // group and θ
  std::string where;    // "n=4", "φ_a^1·ψ_a^2", "n=2..14"
  std::string formula;  // closed-form value
  std::string oracle;   // oracle value
  Verdict verdict = Verdict::Match;
  std::string note;     // "skipped (capacity): …"
};

struct VerifyReport {
  std::vector<CheckRecord> records;
  std::size_t matches = 0, mismatches = 0, skipped = 0;
};

struct VerifyConfig {
  std::set<std::string> only;  // empty: every check
  std::optional<int> family;   // restrict sampled infinite specs to family 1 or 2
  int samples = 8;
  std::uint64_t seed = 1;
  std::size_t max_order = 24;
  int max_degree = 4;  // bar complex degree cap; other checks go to 2·max_degree
  std::uint64_t cell_budget = 2'000'000;
  int threads = 0;  // 0: VCG_THREADS, else the OpenMP default
  // Applied to each closed-form group before comparison (harness self-test).
  using Perturb = std::function<FinAb(const std::string& check, const GroupSpec& spec, int n, const FinAb& value)>;
  Perturb perturb;
};

int verify_threads(int requested);
VerifyReport run_verify(const VerifyConfig& config);

}  // namespace vcg
