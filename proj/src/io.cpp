#include "indep/io.hpp"

#include <fstream>
#include <sstream>

namespace indep {

namespace fs = std::filesystem;

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw IoError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw IoError(std::string("bad field \"") + key + "\": " + e.what());
  }
}

json subset_list(const std::vector<Subset>& v) {
  json out = json::array();
  for (auto s : v) out.push_back(s.bits());
  return out;
}

}  // namespace

json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
}

// --------------------------------------------------------------------- sites

SiteSpec site_spec_from_json(const json& j) {
  if (!j.is_object()) throw IoError("site must be a JSON object");
  SiteSpec spec;
  spec.n = field<int>(j, "n");
  if (j.contains("closed_sets")) {
    spec.closed_sets = field<std::vector<std::uint32_t>>(j, "closed_sets");
  } else if (j.contains("closure_map")) {
    if (spec.n < 0 || spec.n > kMaxGroundSize) throw IoError("n out of range");
    std::vector<Subset> map;
    for (auto x : field<std::vector<std::uint32_t>>(j, "closure_map")) map.emplace_back(x);
    try {
      const ClosureOperator cl = ClosureOperator::from_map(spec.n, map);
      for (auto s : cl.closed_sets()) spec.closed_sets.push_back(s.bits());
    } catch (const Error& e) {
      throw IoError(std::string("closure_map: ") + e.what());
    }
  } else {
    throw IoError("site needs \"closed_sets\" or \"closure_map\"");
  }
  if (j.contains("group_generators"))
    spec.generators = field<std::vector<std::vector<int>>>(j, "group_generators");
  if (j.contains("models")) spec.models = field<std::vector<std::uint32_t>>(j, "models");
  return spec;
}

json site_to_json(const Site& site) {
  const SiteSpec spec = site.to_spec();
  json j;
  j["n"] = spec.n;
  j["closed_sets"] = spec.closed_sets;
  j["group_generators"] = spec.generators;
  if (spec.models) j["models"] = *spec.models;
  return j;
}

SiteSpec read_site_spec(const fs::path& path) { return site_spec_from_json(read_json(path)); }

SitePtr read_site(const fs::path& path) { return Site::build(read_site_spec(path)); }

// ----------------------------------------------------------------- relations

TernaryRelation relation_from_json(const json& j, const fs::path& base_dir, SitePtr site_override) {
  if (!j.is_object()) throw IoError("relation must be a JSON object");
  SitePtr site = site_override;
  if (!site) {
    if (!j.contains("site")) throw IoError("missing field \"site\"");
    const json& s = j.at("site");
    if (s.is_string()) {
      fs::path p = s.get<std::string>();
      if (p.is_relative()) p = base_dir / p;
      site = read_site(p);
    } else {
      site = Site::build(site_spec_from_json(s));
    }
  }
  const auto mode = j.value("mode", std::string("extensional"));
  std::string name = j.value("name", std::string("R"));
  if (mode == "builtin") {
    const auto which = field<std::string>(j, "builtin");
    TernaryRelation r = which == "full"      ? builtin_full(site)
                        : which == "empty"   ? builtin_empty(site)
                        : which == "a-indep" ? builtin_a_indep(site)
                                             : throw IoError("unknown builtin \"" + which + "\"");
    return j.contains("name") ? r.renamed(name) : r;
  }
  if (mode != "extensional") throw IoError("unknown relation mode \"" + mode + "\"");
  if (site->n() > kMaxExtensionalSize)
    throw CapError("extensional relation files need n <= " + std::to_string(kMaxExtensionalSize));
  std::vector<std::uint8_t> table(std::size_t{1} << (3 * site->n()), 0);
  const int n = site->n();
  for (const auto& t : field<std::vector<std::vector<std::uint32_t>>>(j, "true_triples")) {
    if (t.size() != 3) throw IoError("triples must have three entries");
    for (auto x : t)
      if (!site->is_valid(Subset(x))) throw IoError("triple entry " + std::to_string(x) + " out of range");
    table[(std::size_t{t[0]} << (2 * n)) | (std::size_t{t[1]} << n) | t[2]] = 1;
  }
  return TernaryRelation::from_table(site, std::move(table), name);
}

json relation_to_json(const TernaryRelation& r, const std::optional<std::string>& site_path) {
  json j;
  j["name"] = r.name();
  j["mode"] = "extensional";
  if (site_path)
    j["site"] = *site_path;
  else
    j["site"] = site_to_json(r.site());
  json triples = json::array();
  for (std::uint64_t i = 0; i < r.triple_count(); ++i) {
    const Triple t = r.triple_at(i);
    if (r(t)) triples.push_back({t.a.bits(), t.c.bits(), t.b.bits()});
  }
  j["true_triples"] = std::move(triples);
  return j;
}

TernaryRelation read_relation(const fs::path& path, SitePtr site_override) {
  return relation_from_json(read_json(path), path.parent_path(), std::move(site_override));
}

// ------------------------------------------------------------------- reports

json witness_to_json(const Witness& w) {
  json j;
  json vars = json::object();
  for (const auto& [name, s] : w.vars) vars[name] = s.bits();
  j["vars"] = vars;
  if (w.sigma) j["sigma"] = w.sigma->images();
  json facts = json::array();
  for (const auto& f : w.triples)
    facts.push_back({{"triple", {f.triple.a.bits(), f.triple.c.bits(), f.triple.b.bits()}},
                     {"expected", f.expected},
                     {"relation", f.relation}});
  j["triples"] = facts;
  json eq = json::array();
  for (const auto& f : w.equivs)
    eq.push_back({{"a", f.a.bits()}, {"a2", f.a2.bits()}, {"base", f.base.bits()}, {"expected", f.expected}});
  j["equivalences"] = eq;
  json cl = json::array();
  for (const auto& f : w.closures)
    cl.push_back({{"element", f.element}, {"set", f.set.bits()}, {"expected", f.expected}});
  j["closures"] = cl;
  json orb = json::array();
  for (const auto& f : w.orbits)
    orb.push_back({{"a", f.a.bits()}, {"base", f.base.bits()}, {"members", subset_list(f.members)}});
  j["orbits"] = orb;
  j["text"] = w.describe();
  return j;
}

json verdict_to_json(const Verdict& v) {
  json j;
  j["holds"] = v.holds;
  j["witness"] = v.witness ? witness_to_json(*v.witness) : json(nullptr);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

json profile_to_json(const AxiomProfile& p) {
  json rows = json::array();
  for (const auto& [id, v] : p.rows) {
    json row = verdict_to_json(v);
    row["axiom"] = std::string(axiom_name(id.axiom()));
    row["side"] = id.side() == Side::Left ? "left" : id.side() == Side::Right ? "right" : "none";
    rows.push_back(std::move(row));
  }
  return {{"relation", p.relation}, {"rows", rows}};
}

namespace {

json refutation_to_json(const Refutation& ref) {
  json j;
  j["claim"] = ref.claim_id;
  j["clause"] = ref.clause;
  j["tables"] = ref.tables;
  j["relation"] = ref.relation.name();
  if (ref.weaker) j["weaker"] = ref.weaker->name();
  j["finding"] = ref.finding;
  j["verdict"] = verdict_to_json(ref.verdict);
  return j;
}

}  // namespace

json claim_verdict_to_json(const ClaimVerdict& v) {
  json j;
  j["claim"] = v.claim_id;
  j["status"] = std::string(status_name(v.status));
  j["instances_checked"] = v.instances_checked;
  j["skipped"] = v.skipped;
  j["refutation"] = v.refutation ? refutation_to_json(*v.refutation) : json(nullptr);
  return j;
}

json search_report_to_json(const SearchReport& r) {
  json j;
  j["n"] = {r.params.n_min, r.params.n_max};
  j["samples"] = r.params.samples;
  j["densities"] = r.params.densities;
  j["seed"] = r.params.seed;
  j["sites"] = r.sites;
  j["relations"] = r.relations;
  json claims = json::array();
  for (const auto& c : r.claims) {
    json refs = json::array();
    for (std::size_t i = 0; i < c.refutations.size(); ++i) {
      json ref = refutation_to_json(c.refutations[i]);
      ref["site"] = c.refutation_sites[i];
      refs.push_back(std::move(ref));
    }
    claims.push_back({{"claim", c.claim_id},
                      {"relations", c.relations},
                      {"instances_checked", c.instances_checked},
                      {"confirmed", c.confirmed},
                      {"refuted", c.refuted},
                      {"skipped", c.skipped},
                      {"refutations", refs}});
  }
  j["claims"] = claims;
  j["total_refutations"] = r.total_refutations();
  return j;
}

json linear_verdict_to_json(const LinearVerdict& v) {
  json j;
  j["holds"] = v.holds;
  auto coords = [](const FpVector& x) { return std::vector<int>(x.coords().begin(), x.coords().end()); };
  j["witness"] = v.witness ? json(coords(*v.witness)) : json(nullptr);
  if (v.lambda) j["lambda"] = coords(*v.lambda);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

json instance_report_to_json(const InstanceReport& r) {
  auto sub = [](const FpSubspace& s) {
    json rows = json::array();
    for (const auto& b : s.basis()) rows.push_back(std::vector<int>(b.coords().begin(), b.coords().end()));
    return rows;
  };
  auto kase = [&](const KimCase& c) {
    json j = linear_verdict_to_json(c.verdict);
    j["U"] = sub(c.u);
    j["V"] = sub(c.v);
    j["W"] = sub(c.w);
    j["G"] = sub(c.g);
    if (c.verdict.witness) j["witness_text"] = monomial_string(*c.verdict.witness);
    return j;
  };
  json j;
  j["p"] = r.p;
  j["k"] = kInstanceDim;
  j["swapped"] = r.swapped;
  j["coordinates"] = {"a", "d1", "d2", "ad1", "ad2"};
  j["base"] = kase(r.base);
  j["intermediate"] = kase(r.intermediate);
  j["expected_witness"] = monomial_string(r.expected_witness);
  j["bmon_fails"] = r.reproduces();
  return j;
}

std::vector<FpVector> vectors_from_json(const json& j) {
  const int p = field<int>(j, "p");
  const int k = field<int>(j, "k");
  std::vector<FpVector> out;
  for (const auto& row : field<std::vector<std::vector<int>>>(j, "vectors")) {
    if (static_cast<int>(row.size()) != k) throw IoError("vector length differs from k");
    out.emplace_back(p, row);
  }
  return out;
}

json vectors_to_json(int p, int k, const std::vector<FpVector>& vs) {
  json rows = json::array();
  for (const auto& v : vs) rows.push_back(std::vector<int>(v.coords().begin(), v.coords().end()));
  return {{"p", p}, {"k", k}, {"vectors", rows}};
}

std::vector<fs::path> write_refutation_bundle(const fs::path& dir, const std::string& stem,
                                              const Refutation& ref) {
  fs::create_directories(dir);
  std::vector<fs::path> written;
  const std::string site_file = stem + ".site.json";
  auto emit = [&](const std::string& file, const json& j) {
    write_text(dir / file, j.dump(2) + "\n");
    written.push_back(dir / file);
  };
  emit(site_file, site_to_json(ref.relation.site()));
  emit(stem + ".relation.json", relation_to_json(ref.relation, site_file));
  json meta = refutation_to_json(ref);
  meta["relation_file"] = stem + ".relation.json";
  if (ref.weaker) {
    emit(stem + ".weaker.json", relation_to_json(*ref.weaker, site_file));
    meta["weaker_file"] = stem + ".weaker.json";
  }
  emit(stem + ".json", meta);
  return written;
}

}  // namespace indep
