#pragma once

#include <optional>
#include <set>
#include <string>

#include "vcg/group.hpp"
#include "vcg/verify.hpp"

namespace vcg::cli {

// Families by their command-line names: zazbz and zazbqz are the infinite ones.
struct Params {
  std::string family = "zazbz";
  std::int64_t a = 1, b = 1, r = 1, i = 3, r_x = 1, r_y = 1, m = 2;
  ThetaSpec theta;
  std::optional<std::string> q_images;  // "x_s,x_e,y_s,y_e"
};

bool infinite_family(const std::string& family);
GroupSpec make_spec(const Params& p);
// θ of an infinite family, after validation.
ThetaSpec make_theta(const Params& p);

struct Output {
  std::string text;
  int exit_code = 0;
};

Output cmd_compute(const Params& p, int degree_bound, bool json);
Output cmd_ring(const Params& p, int degree_bound, bool json);
Output cmd_period(const Params& p, bool json);
Output cmd_verify(const VerifyConfig& config, bool json, bool verbose);
// Rows separated by ';', entries by whitespace or ','.
Output cmd_snf(const std::string& matrix, bool json);

// "Cyclic(4):2" adds a Z_2 to the closed-form value at that spec and degree.
VerifyConfig::Perturb make_injection(const std::string& where);

}  // namespace vcg::cli
