#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "indep/acfg.hpp"
#include "indep/axioms.hpp"
#include "indep/claims.hpp"
#include "indep/search.hpp"

namespace indep {

using json = nlohmann::json;

/// Thrown on unreadable or malformed files.
class IoError : public Error {
 public:
  using Error::Error;
};

// Sites. Either "closed_sets" or "closure_map" (2^n images) describes the closure.
SiteSpec site_spec_from_json(const json& j);
json site_to_json(const Site& site);
SiteSpec read_site_spec(const std::filesystem::path& path);
SitePtr read_site(const std::filesystem::path& path);

// Relations. mode "extensional" lists true_triples; mode "builtin" names "full",
// "empty" or "a-indep". A string "site" is a path relative to the relation file.
TernaryRelation relation_from_json(const json& j, const std::filesystem::path& base_dir = {},
                                   SitePtr site_override = nullptr);
json relation_to_json(const TernaryRelation& r, const std::optional<std::string>& site_path = {});
TernaryRelation read_relation(const std::filesystem::path& path, SitePtr site_override = nullptr);

json witness_to_json(const Witness& w);
json verdict_to_json(const Verdict& v);
json profile_to_json(const AxiomProfile& p);
json claim_verdict_to_json(const ClaimVerdict& v);
json search_report_to_json(const SearchReport& r);
json linear_verdict_to_json(const LinearVerdict& v);
json instance_report_to_json(const InstanceReport& r);

// Vector files: {"p": P, "k": K, "vectors": [[...], ...]}.
std::vector<FpVector> vectors_from_json(const json& j);
json vectors_to_json(int p, int k, const std::vector<FpVector>& vs);

/// Writes `<dir>/<stem>.site.json`, `<stem>.relation.json` (plus `<stem>.weaker.json`)
/// and `<stem>.json` describing the failed clause. Returns the files written.
std::vector<std::filesystem::path> write_refutation_bundle(const std::filesystem::path& dir,
                                                           const std::string& stem,
                                                           const Refutation& ref);

json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace indep
