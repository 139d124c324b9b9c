#include "cli.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "vcg/closed_form.hpp"
#include "vcg/errors.hpp"
#include "vcg/smith.hpp"

namespace vcg::cli {
namespace {

using nlohmann::ordered_json;

ordered_json number(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

ordered_json group_json(const Params& p) {
  GroupSpec s = make_spec(p);
  ordered_json g;
  g["family"] = p.family;
  g["name"] = s.name();
  g["order"] = infinite_family(p.family) ? ordered_json(nullptr) : ordered_json(s.order());
  switch (s.variant) {
    case Variant::Cyclic: g["m"] = s.m; break;
    case Variant::Metacyclic: g["a"] = s.a; g["b"] = s.b; g["r"] = s.r; break;
    case Variant::Quaternion: g["i"] = s.i; break;
    case Variant::ZbTimesQ: g["b"] = s.b; g["i"] = s.i; break;
    case Variant::ZaZbQ:
      g["a"] = s.a; g["b"] = s.b; g["i"] = s.i; g["r"] = s.r; g["r_x"] = s.r_x; g["r_y"] = s.r_y;
      break;
  }
  if (infinite_family(p.family)) {
    ThetaSpec t = make_theta(p);
    ordered_json th{{"c", t.c}, {"c_a", t.c_a}, {"c_b", t.c_b}};
    if (s.variant == Variant::ZaZbQ) {
      th["c_x"] = t.c_x;
      th["c_y"] = t.c_y;
      if (t.q_images) {
        th["q_images"] = {t.q_images->x_s, t.q_images->x_e, t.q_images->y_s, t.q_images->y_e};
      } else {
        th["k"] = t.k;
        th["l"] = t.l;
      }
    }
    g["theta"] = th;
  }
  return g;
}

std::string title(const Params& p) {
  GroupSpec s = make_spec(p);
  if (!infinite_family(p.family)) return s.name();
  return s.name() + " ⋊ Z, θ: " + make_theta(p).describe();
}

CohomologyGroup cohomology(const Params& p, int n) {
  GroupSpec s = make_spec(p);
  return infinite_family(p.family) ? vz_cohomology(s, make_theta(p), n) : finite_cohomology(s, n);
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

bool infinite_family(const std::string& f) { return f == "zazbz" || f == "zazbqz"; }

GroupSpec make_spec(const Params& p) {
  GroupSpec s;
  if (p.family == "zazbz" || p.family == "zazb")
    s = GroupSpec::metacyclic(p.a, p.b, p.r);
  else if (p.family == "zazbqz" || p.family == "zazbq")
    s = GroupSpec::zazbq(p.a, p.b, p.i, p.r, p.r_x, p.r_y);
  else if (p.family == "q")
    s = GroupSpec::quaternion(p.i);
  else if (p.family == "zbq")
    s = GroupSpec::zb_times_q(p.b, p.i);
  else if (p.family == "cyclic")
    s = GroupSpec::cyclic(p.m);
  else
    throw ValidationError("unknown family " + p.family);
  validate(s);
  return s;
}

ThetaSpec make_theta(const Params& p) {
  ThetaSpec t = p.theta;
  if (p.q_images) {
    QuaternionImages q;
    char c1 = 0, c2 = 0, c3 = 0;
    std::istringstream is(*p.q_images);
    if (!(is >> q.x_s >> c1 >> q.x_e >> c2 >> q.y_s >> c3 >> q.y_e) || c1 != ',' || c2 != ',' || c3 != ',')
      throw ValidationError("--q-images expects x_s,x_e,y_s,y_e");
    t.q_images = q;
  }
  validate(make_spec(p), t);
  return t;
}

Output cmd_compute(const Params& p, int degree_bound, bool json) {
  if (degree_bound < 0) throw ValidationError("degree bound ≥ 0 violated");
  GroupSpec s = make_spec(p);
  std::optional<Periodicity> per;
  if (infinite_family(p.family)) per = periodicity(s, make_theta(p));

  if (json) {
    ordered_json out;
    out["group"] = group_json(p);
    out["cohomology"] = ordered_json::array();
    for (int n = 0; n <= degree_bound; ++n) {
      CohomologyGroup h = cohomology(p, n);
      ordered_json row{{"n", n}, {"free_rank", h.group.free_rank()}, {"torsion", ordered_json::array()},
                       {"summands", ordered_json::array()}};
      for (const auto& t : h.group.torsion()) row["torsion"].push_back(number(t));
      for (const auto& sm : h.summands) row["summands"].push_back({{"name", sm.name}, {"order", number(sm.order)}});
      out["cohomology"].push_back(row);
    }
    out["period"] = per ? ordered_json(per->period) : ordered_json(nullptr);
    out["period_class"] = per ? ordered_json(per->rendered) : ordered_json(nullptr);
    return {dump(out)};
  }

  std::ostringstream os;
  os << title(p) << "\n";
  for (int n = 0; n <= degree_bound; ++n) {
    CohomologyGroup h = cohomology(p, n);
    os << "H^" << std::left << std::setw(3) << n << "= " << h.group.to_string();
    std::string sm = h.summand_string();
    if (!sm.empty() && sm != h.group.to_string()) os << "    [" << sm << "]";
    os << "\n";
  }
  if (per) os << "period " << per->period << ", class " << per->rendered << "\n";
  return {os.str()};
}

Output cmd_ring(const Params& p, int degree_bound, bool json) {
  GroupSpec s = make_spec(p);
  std::optional<ThetaSpec> theta;
  if (infinite_family(p.family)) theta = make_theta(p);
  if (p.family == "zazbqz")
    throw ValidationError("ring: the Z-direction products of this family are not named; use --family zazbq for the finite piece");
  RingPresentation rp = ring_presentation(s, theta, degree_bound);
  if (json) {
    ordered_json out;
    out["group"] = group_json(p);
    out["degree_bound"] = rp.degree_bound;
    out["generators"] = ordered_json::array();
    for (const auto& g : rp.generators)
      out["generators"].push_back({{"name", g.name}, {"degree", g.degree}, {"order", number(g.order)}});
    out["relations"] = ordered_json::array();
    for (const auto& r : rp.relations) out["relations"].push_back(r.rendered);
    return {dump(out)};
  }
  std::ostringstream os;
  os << title(p) << "\ngenerators (degree ≤ " << rp.degree_bound << "):\n";
  for (const auto& g : rp.generators) {
    os << "  " << g.name << "  degree " << g.degree << ", order ";
    if (g.order == 0)
      os << "∞";
    else
      os << g.order.get_str();
    os << "\n";
  }
  os << "relations:\n";
  for (const auto& r : rp.relations) os << "  " << r.rendered << "\n";
  return {os.str()};
}

Output cmd_period(const Params& p, bool json) {
  if (!infinite_family(p.family)) throw ValidationError("period: an infinite family (zazbz or zazbqz) is required");
  GroupSpec s = make_spec(p);
  ThetaSpec t = make_theta(p);
  Periodicity per = periodicity(s, t);
  const std::int64_t last = 2 + 2 * per.period;
  std::int64_t bad = -1;
  for (std::int64_t n = 2; n <= last && bad < 0; ++n) {
    try {
      if (vz_cohomology(s, t, int(n)).group != vz_cohomology(s, t, int(n + per.period)).group) bad = n;
    } catch (const ValidationError&) {
    }
  }
  if (json) {
    ordered_json out;
    out["group"] = group_json(p);
    out["period"] = per.period;
    out["period_class"] = per.rendered;
    out["verified"] = {{"from", 2}, {"to", last}, {"holds", bad < 0}};
    return {dump(out)};
  }
  std::ostringstream os;
  os << "period " << per.period << ", class " << per.rendered << "\n";
  if (bad < 0)
    os << "H^n = H^{n+" << per.period << "} verified for n = 2.." << last << "\n";
  else
    os << "H^n ≠ H^{n+" << per.period << "} at n = " << bad << "\n";
  return {os.str(), bad < 0 ? 0 : 2};
}

Output cmd_verify(const VerifyConfig& config, bool json, bool verbose) {
  VerifyReport rep = run_verify(config);
  const int code = rep.mismatches == 0 ? 0 : 2;
  if (json) {
    ordered_json out;
    out["records"] = ordered_json::array();
    for (const auto& r : rep.records)
      out["records"].push_back({{"check", r.check},
                                {"spec", r.spec},
                                {"where", r.where},
                                {"formula", r.formula},
                                {"oracle", r.oracle},
                                {"verdict", to_string(r.verdict)},
                                {"note", r.note}});
    out["summary"] = {{"match", rep.matches}, {"mismatch", rep.mismatches}, {"skipped", rep.skipped}};
    return {dump(out), code};
  }
  std::ostringstream os;
  for (const auto& r : rep.records) {
    if (r.verdict == Verdict::Match && !verbose) continue;
    os << "[" << to_string(r.verdict) << "] " << r.check << " " << r.spec;
    if (!r.where.empty()) os << " " << r.where;
    if (r.verdict != Verdict::Skipped || !r.formula.empty()) os << ": formula " << r.formula << " | oracle " << r.oracle;
    if (!r.note.empty()) os << " (" << r.note << ")";
    os << "\n";
  }
  os << rep.matches << " match, " << rep.mismatches << " mismatch, " << rep.skipped << " skipped\n";
  return {os.str(), code};
}

Output cmd_snf(const std::string& text, bool json) {
  std::vector<std::vector<Integer>> rows(1);
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    Integer v;
    if (v.set_str(tok, 10) != 0) throw ValidationError("snf: not an integer: " + tok);
    rows.back().push_back(v);
    tok.clear();
  };
  for (char ch : text) {
    if (ch == ';') {
      flush();
      rows.emplace_back();
    } else if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else {
      tok += ch;
    }
  }
  flush();
  if (rows.back().empty()) rows.pop_back();
  if (rows.empty()) throw ValidationError("snf: empty matrix");
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) throw ValidationError("snf: rows of unequal length");
  IntMatrix a(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (rows[i][j] != 0) a.set(i, j, rows[i][j]);
  SnfResult s = smith_normal_form(a);
  FinAb coker = cokernel_invariants(a);
  if (json) {
    ordered_json out;
    out["rows"] = a.rows();
    out["cols"] = a.cols();
    out["diagonal"] = ordered_json::array();
    for (const auto& d : s.diagonal()) out["diagonal"].push_back(number(d));
    out["rank"] = s.rank();
    out["cokernel"] = coker.to_string();
    return {dump(out)};
  }
  std::ostringstream os;
  os << "diagonal:";
  for (const auto& d : s.diagonal()) os << " " << d.get_str();
  os << "\nrank: " << s.rank() << "\ncokernel: " << coker.to_string() << "\n";
  return {os.str()};
}

VerifyConfig::Perturb make_injection(const std::string& where) {
  auto colon = where.rfind(':');
  if (colon == std::string::npos) throw ValidationError("--inject expects SPEC:N");
  std::string name = where.substr(0, colon);
  int n = std::stoi(where.substr(colon + 1));
  return [name, n](const std::string&, const GroupSpec& s, int k, const FinAb& v) {
    return s.name() == name && k == n ? v + FinAb::cyclic(2) : v;
  };
}

}  // namespace vcg::cli
