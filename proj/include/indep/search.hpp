#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "indep/claims.hpp"
#include "indep/rng.hpp"

namespace indep {

/// Every Moore family on n points (intersection-closed, containing the full set), in
/// ascending order of the family's bitmask-of-members. Brute force over 2^(2^n - 1)
/// candidate families; n <= 4.
std::vector<ClosureOperator> enumerate_moore_families(int n);

/// Closes 1..2n random subsets plus the full set under intersection.
ClosureOperator random_moore_family(int n, Rng& rng);

enum class ClosureMode { Auto, Exhaustive, Random };
enum class GroupMode { Trivial, Symmetric, Sampled };

/// Largest n the search harness accepts.
inline constexpr int kMaxSearchSize = 5;

struct SearchParams {
  int n_min = 3;
  int n_max = 3;
  /// Auto: exhaustive for n <= 3, random beyond. Exhaustive is allowed up to n = 4.
  ClosureMode closure_mode = ClosureMode::Auto;
  std::size_t random_families = 24;  // per n, in random mode
  /// Symmetric = all permutations preserving the closure (the full symmetric group
  /// when the family is symmetric). Sampled = subgroup generated by 1-2 random
  /// automorphisms; dropped when it coincides with the trivial or full group.
  std::vector<GroupMode> groups = {GroupMode::Trivial, GroupMode::Symmetric, GroupMode::Sampled};
  std::size_t samples = 50;  // random invariant relations per site
  std::vector<double> densities = {0.2, 0.5, 0.8};
  std::uint64_t seed = 0;
  int jobs = 1;
  std::size_t max_refutations = 5;  // kept per claim, in canonical order
};

/// Throws CapError / Error on parameters outside the caps.
void validate_params(const SearchParams& p);

struct SearchSite {
  SitePtr site;
  std::string label;  // "n=3 family=12 group=symmetric"
};

/// The sites a search visits, in canonical order.
std::vector<SearchSite> search_sites(const SearchParams& p);

/// Relations checked on one site: per sample, the random invariant relation R followed by
/// c(R), m(R), star(R), core(R), m(core(R)), c(core(R)), star(core(R)); then the builtins
/// full, a-indep, M(a-indep), m(a-indep), star(a-indep).
std::vector<TernaryRelation> sample_population(const SearchSite& site, std::size_t site_index,
                                               const SearchParams& p);

struct ClaimTally {
  std::string claim_id;
  std::size_t relations = 0;  // verify_claim calls
  std::size_t instances_checked = 0;
  std::size_t confirmed = 0;
  std::size_t refuted = 0;
  std::size_t skipped = 0;
  std::vector<Refutation> refutations;  // first max_refutations
  std::vector<std::string> refutation_sites;
};

struct SearchReport {
  SearchParams params;
  std::size_t sites = 0;
  std::size_t relations = 0;
  std::vector<ClaimTally> claims;

  std::size_t total_refutations() const;
  /// Deterministic plain-text rendering.
  std::string text() const;
};

/// Runs verify_claim over every (site, relation) pair. Output is identical for any jobs.
SearchReport search(const std::vector<const Claim*>& claims, const SearchParams& p);

}  // namespace indep
