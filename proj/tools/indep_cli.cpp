// indep: command-line front end for the independence-relation toolkit.
//
// Exit codes: 0 success or confirmed, 1 refuted or failed, 2 usage or file error.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "indep/acfg.hpp"
#include "indep/diagram.hpp"
#include "indep/io.hpp"

namespace fs = std::filesystem;
using namespace indep;

namespace {

struct Options {
  std::string site;
  std::string relation;
  std::string op;
  std::string out;
  bool search = false;
  std::string n_range = "3";
  std::size_t samples = 50;
  std::uint64_t seed = 0;
  std::vector<double> densities = {0.2, 0.5, 0.8};
  int jobs = 1;
  int p = 2;
  std::string positional;
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--n", "expected A..B, got \"" + text + "\"");
  }
}

// A relation argument is a relation file or "builtin:<name>" together with --site.
TernaryRelation load_relation(const Options& o) {
  SitePtr site = o.site.empty() ? nullptr : read_site(o.site);
  if (o.relation.rfind("builtin:", 0) == 0) {
    if (!site) throw IoError("builtin relations need --site");
    return relation_from_json({{"mode", "builtin"}, {"builtin", o.relation.substr(8)}}, {}, site);
  }
  if (o.relation.empty()) throw IoError("--relation is required");
  return read_relation(o.relation, site);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty())
    std::cout << text;
  else
    write_text(o.out, text);
}

int cmd_validate(const Options& o) {
  const std::string path = o.positional.empty() ? o.site : o.positional;
  if (path.empty()) throw IoError("validate needs a site file");
  const ValidationReport report = validate_site(read_site_spec(path));
  if (report.ok()) {
    std::cout << "OK\n";
    return 0;
  }
  for (const auto& v : report.violations) std::cout << v.kind << ": " << v.message << "\n";
  return 1;
}

int cmd_axioms(const Options& o) {
  const AxiomProfile profile = axiom_profile(load_relation(o));
  std::cout << profile.table();
  if (!o.out.empty()) write_text(o.out, profile_to_json(profile).dump(2) + "\n");
  return 0;
}

int cmd_apply(const Options& o) {
  if (o.op.empty()) throw IoError("apply needs --op");
  const TernaryRelation r = load_relation(o);
  const TernaryRelation out = apply_expr(OperatorExpr::parse(o.op), r);
  emit(o, relation_to_json(out).dump(2) + "\n");
  return 0;
}

std::string render(const Claim& claim, const ClaimVerdict& v) {
  std::ostringstream out;
  out << claim.id << " (" << claim.key << "): " << claim.statement << "\n";
  out << "status: " << status_name(v.status) << "  instances: " << v.instances_checked
      << "  skipped: " << v.skipped << "\n";
  if (v.refutation) {
    const auto& ref = *v.refutation;
    out << "refuted clause: " << ref.clause << (ref.finding ? " [external-proof finding]" : "") << "\n";
    out << "relation: " << ref.relation.name() << "\n";
    if (ref.weaker) out << "R0: " << ref.weaker->name() << "\n";
    out << "witness: " << ref.verdict.witness->describe() << "\n";
  }
  return out.str();
}

std::vector<const Claim*> selected_claims(const std::string& id) {
  std::vector<const Claim*> out;
  if (id == "all") {
    for (const auto& c : registry()) out.push_back(&c);
  } else {
    out.push_back(&find_claim(id));
  }
  return out;
}

int cmd_claim(const Options& o) {
  if (o.positional.empty()) throw IoError("claim needs an id (C1..C11, a key, or all)");
  const auto claims = selected_claims(o.positional);

  if (o.search) {
    SearchParams params;
    std::tie(params.n_min, params.n_max) = parse_range(o.n_range);
    params.samples = o.samples;
    params.seed = o.seed;
    params.densities = o.densities;
    params.jobs = o.jobs;
    validate_params(params);
    const SearchReport report = search(claims, params);
    std::cout << report.text();
    if (!o.out.empty()) {
      fs::create_directories(o.out);
      write_text(fs::path(o.out) / "report.json", search_report_to_json(report).dump(2) + "\n");
      for (const auto& tally : report.claims)
        for (std::size_t i = 0; i < tally.refutations.size(); ++i)
          write_refutation_bundle(o.out, tally.claim_id + "-" + std::to_string(i + 1), tally.refutations[i]);
    }
    return report.total_refutations() == 0 ? 0 : 1;
  }

  const TernaryRelation r = load_relation(o);
  bool refuted = false;
  json all = json::array();
  for (const Claim* c : claims) {
    const ClaimVerdict v = verify_claim(*c, r);
    std::cout << render(*c, v);
    all.push_back(claim_verdict_to_json(v));
    if (v.refutation) {
      refuted = true;
      if (!o.out.empty()) write_refutation_bundle(o.out, c->id, *v.refutation);
    }
  }
  if (!o.out.empty()) {
    fs::create_directories(o.out);
    write_text(fs::path(o.out) / "report.json", all.dump(2) + "\n");
  }
  return refuted ? 1 : 0;
}

int cmd_acfg(const Options& o) {
  const InstanceReport report = acfg_bmon_failure_instance(o.p);
  std::cout << report.text();
  if (!o.out.empty()) write_text(o.out, instance_report_to_json(report).dump(2) + "\n");
  return report.reproduces() ? 0 : 1;
}

int cmd_diagram(const Options& o) {
  emit(o, implication_diagram(load_relation(o)).dot());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite independence relations: axioms, operators, claims and the ACFG kernel"};
  app.require_subcommand(1);
  Options o;

  auto add_site = [&](CLI::App* c) { c->add_option("--site", o.site, "site JSON file"); };
  auto add_relation = [&](CLI::App* c) {
    add_site(c);
    c->add_option("--relation", o.relation, "relation JSON file, or builtin:full|empty|a-indep with --site");
  };
  auto add_out = [&](CLI::App* c, const char* what) { c->add_option("--out", o.out, what); };

  auto* validate = app.add_subcommand("validate", "check a site file");
  validate->add_option("file", o.positional, "site JSON file");
  add_site(validate);

  auto* axioms = app.add_subcommand("axioms", "print the axiom profile of a relation");
  add_relation(axioms);
  add_out(axioms, "write the profile as JSON");

  auto* apply = app.add_subcommand("apply", "apply an operator expression");
  add_relation(apply);
  apply->add_option("--op", o.op, "expression such as c(m(R))")->required();
  add_out(apply, "write the resulting relation file");

  auto* claim = app.add_subcommand("claim", "verify a claim on a relation or by search");
  claim->add_option("id", o.positional, "claim id, key, or all")->required();
  add_relation(claim);
  claim->add_flag("--search", o.search, "search over generated sites");
  claim->add_option("--n", o.n_range, "ground-size range A..B");
  claim->add_option("--samples", o.samples, "random relations per site");
  claim->add_option("--seed", o.seed, "base seed");
  claim->add_option("--densities", o.densities, "comma-separated densities")->delimiter(',');
  claim->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  add_out(claim, "directory for report.json and refutation bundles");

  auto* acfg = app.add_subcommand("acfg-demo", "reproduce the base-monotonicity failure over F_p");
  acfg->add_option("--p", o.p, "prime, at most 251");
  add_out(acfg, "write the report as JSON");

  auto* diagram = app.add_subcommand("diagram", "implication diagram as DOT");
  add_relation(diagram);
  add_out(diagram, "write the DOT text to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*axioms) return cmd_axioms(o);
    if (*apply) return cmd_apply(o);
    if (*claim) return cmd_claim(o);
    if (*acfg) return cmd_acfg(o);
    if (*diagram) return cmd_diagram(o);
  } catch (const SiteError& e) {
    std::cerr << "error: invalid site\n";
    for (const auto& v : e.report().violations) std::cerr << "  " << v.kind << ": " << v.message << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
