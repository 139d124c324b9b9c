#include <iostream>

#include "CLI11.hpp"
#include "cli.hpp"
#include "vcg/errors.hpp"

using namespace vcg;

namespace {

void group_options(CLI::App* cmd, cli::Params& p) {
  cmd->add_option("--family", p.family, "zazbz, zazbqz, zazb, zazbq, q, zbq, cyclic")
      ->check(CLI::IsMember({"zazbz", "zazbqz", "zazb", "zazbq", "q", "zbq", "cyclic"}));
  cmd->add_option("-a", p.a, "order of Z_a");
  cmd->add_option("-b", p.b, "order of Z_b");
  cmd->add_option("-r", p.r, "1_b acts on Z_a by r");
  cmd->add_option("-i", p.i, "Q_{2^i}");
  cmd->add_option("--rx", p.r_x, "x acts on Z_a by r_x");
  cmd->add_option("--ry", p.r_y, "y acts on Z_a by r_y");
  cmd->add_option("-m", p.m, "order of the cyclic group");
  cmd->add_option("--ca", p.theta.c_a, "θ(1)(1_a) = c_a·1_a");
  cmd->add_option("--cb", p.theta.c_b, "θ(1)(1_b) = c·1_a + c_b·1_b");
  cmd->add_option("--c", p.theta.c, "see --cb");
  cmd->add_option("--cx", p.theta.c_x, "θ(1)(x) = c_x·1_a + x^k");
  cmd->add_option("--cy", p.theta.c_y, "θ(1)(y) = c_y·1_a + x^ℓ y");
  cmd->add_option("-k", p.theta.k, "see --cx");
  cmd->add_option("-l", p.theta.l, "see --cy");
  cmd->add_option("--q-images", p.q_images, "θ_Q on Q_8 as x_s,x_e,y_s,y_e");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral cohomology of (Z_a⋊Z_b)⋊Z and [Z_a⋊(Z_b×Q_{2^i})]⋊Z"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false, verbose = false;
  int bound = 8;
  cli::Params params;
  app.add_flag("--json", json, "machine-readable output");

  auto* compute = app.add_subcommand("compute", "table of H^n for n = 0..N");
  group_options(compute, params);
  compute->add_option("-N,--degree", bound, "degree bound");

  auto* ring = app.add_subcommand("ring", "generators and products up to a degree");
  group_options(ring, params);
  int ring_bound = -1;
  ring->add_option("-N,--degree", ring_bound, "degree bound (default: 2·period + 2, or 12)");

  auto* period = app.add_subcommand("period", "period of an infinite family and its class");
  group_options(period, params);

  auto* verify = app.add_subcommand("verify", "closed forms against the oracle");
  VerifyConfig vc;
  std::vector<std::string> only;
  std::string vfamily, inject;
  verify->add_option("--only", only, "finite, resolution, infinite, cup, period, ring")->delimiter(',');
  verify->add_option("--family", vfamily, "restrict sampled specs")->check(CLI::IsMember({"zazbz", "zazbqz"}));
  verify->add_option("--samples", vc.samples, "sampled specs per check");
  verify->add_option("--seed", vc.seed, "sampling seed");
  verify->add_option("--max-order", vc.max_order, "largest finite group handed to the oracle");
  verify->add_option("--max-degree", vc.max_degree, "bar complex degree cap");
  verify->add_option("--threads", vc.threads, "parallel width (default VCG_THREADS)");
  verify->add_option("--inject", inject, "add Z_2 to the closed form at SPEC:N (harness self-test)");
  verify->add_flag("-v,--verbose", verbose, "list matching checks too");

  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  std::string matrix;
  snf->add_option("matrix", matrix, "rows separated by ';'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    cli::Output out;
    if (*compute) out = cli::cmd_compute(params, bound, json);
    if (*ring) out = cli::cmd_ring(params, ring_bound, json);
    if (*period) out = cli::cmd_period(params, json);
    if (*snf) out = cli::cmd_snf(matrix, json);
    if (*verify) {
      vc.only.insert(only.begin(), only.end());
      if (vfamily == "zazbz") vc.family = 1;
      if (vfamily == "zazbqz") vc.family = 2;
      if (!inject.empty()) vc.perturb = cli::make_injection(inject);
      if (vc.max_degree < 0 || vc.max_order < 1) throw ValidationError("verify caps must be positive");
      out = cli::cmd_verify(vc, json, verbose);
    }
    std::cout << out.text;
    return out.exit_code;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const RingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
