// Command-line front end: membership and hull queries with certificates,
// worked-example reproduction, linear assignment-cost bound tables, and the
// randomized property suites. Exit codes: 0 completed, 1 assertion or
// property failure, 2 input error.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rltlab/disjunctive.hpp"
#include "rltlab/io.hpp"
#include "rltlab/qap.hpp"
#include "rltlab/rlt.hpp"
#include "rltlab/suites.hpp"

using namespace rltlab;
using nlohmann::ordered_json;

namespace {

std::string fnv64_hex(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string row_text(const Row& row) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < row.coef.size(); ++i) {
    if (row.coef[i] == 0) continue;
    const Rational mag = row.coef[i] < 0 ? Rational(-row.coef[i]) : row.coef[i];
    if (first)
      os << (row.coef[i] < 0 ? "-" : "");
    else
      os << (row.coef[i] < 0 ? " - " : " + ");
    if (mag != 1) os << rat_str(mag) << " ";
    os << "x" << (i + 1);
    first = false;
  }
  if (first) os << "0";
  os << " " << relation_text(row.rel) << " " << rat_str(row.rhs);
  return os.str();
}

std::vector<int> parse_index_list(const std::string& text, int n) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    const int v = std::stoi(item, &pos);
    if (pos != item.size() || v < 1 || v > n)
      throw std::runtime_error("index '" + item + "' out of range 1.." + std::to_string(n));
    out.push_back(v - 1);
  }
  if (out.empty()) throw std::runtime_error("empty index list");
  return out;
}

/// Disjunction specs: "card:1,2,3" (one-hot over the listed coordinates),
/// "var:2" (x2 = 0 or x2 = 1), "sub:1,2,3:100|010|001|000" (fix the listed
/// coordinates to each 0/1 pattern). Indices are 1-based as in the files.
Disjunction parse_disjunction(const BoxPolytope& P, const std::string& spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::runtime_error("disjunction spec needs a 'kind:' prefix");
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (kind == "card") return cardinality_disjunction(P, parse_index_list(rest, P.n));
  if (kind == "var") {
    const std::vector<int> idx = parse_index_list(rest, P.n);
    if (idx.size() != 1) throw std::runtime_error("var: takes exactly one coordinate");
    return variable_disjunction(P, idx[0]);
  }
  if (kind == "sub") {
    const std::size_t colon2 = rest.find(':');
    if (colon2 == std::string::npos)
      throw std::runtime_error("sub: needs coordinates and patterns");
    SubsetDisjunction sd;
    sd.D = parse_index_list(rest.substr(0, colon2), P.n);
    std::stringstream ss(rest.substr(colon2 + 1));
    std::string pat;
    while (std::getline(ss, pat, '|')) {
      if (pat.size() != sd.D.size())
        throw std::runtime_error("pattern '" + pat + "' does not match the coordinate count");
      std::vector<int> bits;
      for (char c : pat) {
        if (c != '0' && c != '1') throw std::runtime_error("patterns must be 0/1 strings");
        bits.push_back(c - '0');
      }
      sd.patterns.push_back(std::move(bits));
    }
    if (sd.patterns.empty()) throw std::runtime_error("sub: needs at least one pattern");
    return expand(sd, P.n);
  }
  throw std::runtime_error("unknown disjunction kind '" + kind + "'");
}

ordered_json certificate_json(const ProjectionMembership& pm) {
  ordered_json cert;
  if (pm.member) {
    cert["witness"] = vec_to_json(pm.witness);
  } else {
    cert["cut"] = row_to_json(pm.cut);
    cert["ef_row_multipliers"] = vec_to_json(pm.ef_row_mults);
  }
  return cert;
}

void emit(const ordered_json& doc, bool as_json, const std::string& human) {
  if (as_json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << human;
}

struct MemberArgs {
  std::string polytope_path;
  std::string closure = "weak";
  std::string point;
  std::string disjunction;
  bool as_json = false;
};

int cmd_member(const MemberArgs& a) {
  const BoxPolytope P = load_polytope(a.polytope_path);
  const RatVector x = parse_point(a.point);
  if (static_cast<int>(x.size()) != P.n)
    throw std::runtime_error("point has " + std::to_string(x.size()) +
                             " coordinates, polytope has " + std::to_string(P.n));

  ordered_json doc;
  doc["command"] = "member";
  doc["closure"] = a.closure;
  doc["point"] = point_text(x);
  {
    ordered_json digest_src;
    digest_src["polytope"] = polytope_to_json(P);
    digest_src["closure"] = a.closure;
    digest_src["point"] = point_text(x);
    digest_src["disjunction"] = a.disjunction;
    doc["input_digest"] = fnv64_hex(digest_src.dump());
  }

  bool member = false;
  ordered_json cert;
  std::string detail;
  if (a.closure == "weak" || a.closure == "strong") {
    const ClosureVariant v =
        a.closure == "weak" ? ClosureVariant::Weak : ClosureVariant::Strong;
    const ProjectionMembership pm = closure_member(P, v, x);
    member = pm.member;
    cert = certificate_json(pm);
    if (!pm.member) detail = "cut: " + row_text(pm.cut) + "\n";
  } else if (a.closure == "landp") {
    const LandpCertificate lc = landp_member(P, x);
    member = lc.member;
    if (lc.member) {
      ordered_json wits = ordered_json::array();
      for (const ProjectionMembership& pm : lc.per_coordinate)
        wits.push_back(vec_to_json(pm.witness));
      cert["per_coordinate_witnesses"] = wits;
    } else {
      cert["failing_coordinate"] = lc.failing + 1;
      cert["cut"] = row_to_json(lc.per_coordinate.back().cut);
      detail = "failing coordinate: x" + std::to_string(lc.failing + 1) +
               ", cut: " + row_text(lc.per_coordinate.back().cut) + "\n";
    }
  } else if (a.closure == "hull") {
    if (a.disjunction.empty())
      throw std::runtime_error("--closure hull requires --disjunction");
    const Disjunction disj = parse_disjunction(P, a.disjunction);
    const ProjectionMembership pm = hull_member(P, disj, x);
    member = pm.member;
    cert = certificate_json(pm);
    if (!pm.member) detail = "cut: " + row_text(pm.cut) + "\n";
  } else {
    throw std::runtime_error("unknown closure '" + a.closure + "'");
  }

  doc["member"] = member;
  doc["certificate"] = cert;
  emit(doc, a.as_json,
       "member: " + std::string(member ? "true" : "false") + "\n" + detail);
  return 0;
}

int cmd_reproduce(const std::string& figure, bool as_json) {
  const FigureReport rep = reproduce_figure(figure);
  ordered_json doc;
  doc["command"] = "reproduce";
  doc["figure"] = rep.figure;
  ordered_json checks = ordered_json::array();
  std::string human;
  for (const FigureCheck& c : rep.checks) {
    ordered_json e;
    e["name"] = c.name;
    e["ok"] = c.ok;
    checks.push_back(e);
    human += std::string(c.ok ? "  ok    " : "  FAIL  ") + c.name + "\n";
  }
  doc["checks"] = checks;
  doc["passed"] = rep.passed;
  human += rep.figure + ": " + (rep.passed ? "PASS" : "FAIL") + "\n";
  emit(doc, as_json, human);
  return rep.passed ? 0 : 1;
}

int cmd_qap(const std::string& instance_path, const std::string& formulations, bool as_json) {
  const QapInstance inst = load_qap(instance_path);
  std::vector<std::string> wanted;
  {
    std::stringstream ss(formulations);
    std::string item;
    while (std::getline(ss, item, ',')) wanted.push_back(item);
  }
  ordered_json doc;
  doc["command"] = "qap";
  doc["n"] = inst.n;
  {
    ordered_json digest_src;
    digest_src["n"] = inst.n;
    ordered_json costs = ordered_json::array();
    for (const Rational& q : inst.q) costs.push_back(rat_str(q));
    digest_src["q"] = costs;
    doc["input_digest"] = fnv64_hex(digest_src.dump());
  }

  ordered_json bounds;
  std::string human;
  std::optional<Rational> aj_bound, kb_bound;
  for (const std::string& f : wanted) {
    QapLpModel model;
    if (f == "aj")
      model = build_adams_johnson(inst);
    else if (f == "kb")
      model = build_kaufman_broeckx(inst);
    else if (f == "kbc")
      model = build_kaufman_broeckx_column(inst);
    else
      throw std::runtime_error("unknown formulation '" + f + "' (expected aj, kb, kbc)");
    const Rational bound = lp_bound(model);
    bounds[f] = rat_str(bound);
    human += "  " + f + std::string(5 - f.size(), ' ') + rat_str(bound) + "\n";
    if (f == "aj") aj_bound = bound;
    if (f == "kb") kb_bound = bound;
  }
  doc["bounds"] = bounds;

  bool ordered = true;
  if (aj_bound && kb_bound) {
    ordered = *aj_bound >= *kb_bound;
    doc["aj_ge_kb"] = ordered;
    human += std::string("  aj >= kb: ") + (ordered ? "ok" : "VIOLATED") + "\n";
  }
  emit(doc, as_json, human);
  return ordered ? 0 : 1;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int trials, bool as_json) {
  const SuiteReport rep = run_suite(suite, seed, trials);
  ordered_json doc;
  doc["command"] = "verify";
  doc["suite"] = rep.suite;
  doc["seed"] = rep.seed;
  doc["trials"] = rep.trials;
  doc["checks"] = rep.checks;
  doc["passed"] = rep.passed;
  if (!rep.passed) {
    doc["failure"] = rep.failure;
    doc["falsifying"] = rep.falsifying;
  }
  std::string human = "suite " + rep.suite + ": " + (rep.passed ? "PASS" : "FAIL") + " (" +
                      std::to_string(rep.trials) + " instances, " +
                      std::to_string(rep.checks) + " checks)\n";
  if (!rep.passed)
    human += "  violated: " + rep.failure + "\n  falsifying instance:\n" +
             rep.falsifying.dump(2) + "\n";
  emit(doc, as_json, human);
  return rep.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact polyhedral strengthening laboratory"};
  app.require_subcommand(1);

  MemberArgs ma;
  CLI::App* member = app.add_subcommand(
      "member", "closure / hull membership of a point, with certificate");
  member->add_option("--polytope", ma.polytope_path, "polytope JSON file")->required();
  member->add_option("--closure", ma.closure, "weak | strong | landp | hull");
  member->add_option("--point", ma.point, "comma-separated rationals, e.g. 1/2,0")->required();
  member->add_option("--disjunction", ma.disjunction,
                     "for hull: card:1,2 | var:2 | sub:1,2:10|01");
  member->add_flag("--json", ma.as_json, "machine-readable output");

  std::string figure;
  bool rep_json = false;
  CLI::App* reproduce =
      app.add_subcommand("reproduce", "run a worked-example assertion bundle");
  reproduce->add_option("figure", figure, "fig2 | fig3 | fig4")->required();
  reproduce->add_flag("--json", rep_json, "machine-readable output");

  std::string instance_path, formulations = "aj,kb,kbc";
  bool qap_json = false;
  CLI::App* qap = app.add_subcommand("qap", "assignment-cost LP bound table");
  qap->add_option("--instance", instance_path, "instance file: n then n^4 rationals")
      ->required();
  qap->add_option("--formulations", formulations, "comma list from aj, kb, kbc");
  qap->add_flag("--json", qap_json, "machine-readable output");

  std::string suite;
  std::uint64_t seed = 2024;
  int trials = 50;
  bool verify_json = false;
  CLI::App* verify = app.add_subcommand("verify", "run a randomized property suite");
  verify->add_option("--suite", suite, "prop2 | prop3 | thm3 | thm4 | thm7")->required();
  verify->add_option("--seed", seed, "base seed (default 2024)");
  verify->add_option("--trials", trials, "instance count (default 50)");
  verify->add_flag("--json", verify_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (member->parsed()) return cmd_member(ma);
    if (reproduce->parsed()) return cmd_reproduce(figure, rep_json);
    if (qap->parsed()) return cmd_qap(instance_path, formulations, qap_json);
    if (verify->parsed()) return cmd_verify(suite, seed, trials, verify_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
