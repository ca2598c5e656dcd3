#include "indep/search.hpp"

#include <algorithm>
#include <exception>
#include <sstream>

#include "indep/operators.hpp"

namespace indep {

std::vector<ClosureOperator> enumerate_moore_families(int n) {
  if (n < 1 || n > 4) throw CapError("exhaustive Moore-family enumeration requires 1 <= n <= 4");
  const std::uint32_t proper = (std::uint32_t{1} << n) - 1;  // subsets other than the full set
  const Subset full = Subset::full(n);
  std::vector<ClosureOperator> out;
  std::vector<Subset> members;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << proper); ++mask) {
    members.clear();
    for (std::uint32_t s = 0; s < proper; ++s)
      if ((mask >> s) & 1U) members.emplace_back(s);
    bool closed = true;
    for (std::size_t i = 0; i < members.size() && closed; ++i)
      for (std::size_t j = i + 1; j < members.size() && closed; ++j) {
        const std::uint32_t meet = (members[i] & members[j]).bits();
        closed = (mask >> meet) & 1U;
      }
    if (!closed) continue;
    members.push_back(full);
    out.push_back(ClosureOperator::from_family(n, members));
  }
  return out;
}

ClosureOperator random_moore_family(int n, Rng& rng) {
  const std::uint32_t count = std::uint32_t{1} << n;
  std::vector<bool> member(count, false);
  member[count - 1] = true;
  const auto k = 1 + rng.below(static_cast<std::uint64_t>(2 * n));
  for (std::uint64_t i = 0; i < k; ++i) member[rng.below(count)] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t a = 0; a < count; ++a)
      for (std::uint32_t b = a + 1; b < count && member[a]; ++b)
        if (member[b] && !member[a & b]) {
          member[a & b] = true;
          changed = true;
        }
  }
  std::vector<Subset> family;
  for (std::uint32_t a = 0; a < count; ++a)
    if (member[a]) family.emplace_back(a);
  return ClosureOperator::from_family(n, std::move(family));
}

void validate_params(const SearchParams& p) {
  if (p.n_min < 1 || p.n_max > kMaxSearchSize || p.n_min > p.n_max)
    throw CapError("search range must satisfy 1 <= n_min <= n_max <= " +
                   std::to_string(kMaxSearchSize));
  if (p.closure_mode == ClosureMode::Exhaustive && p.n_max > 4)
    throw CapError("exhaustive closure enumeration requires n <= 4");
  if (p.densities.empty()) throw Error("at least one density is required");
  for (double d : p.densities)
    if (!(d >= 0.0 && d <= 1.0)) throw Error("densities must lie in [0, 1]");
  if (p.jobs < 1) throw Error("jobs must be positive");
  if (p.groups.empty()) throw Error("at least one group mode is required");
}

namespace {

std::string_view group_label(GroupMode g) {
  switch (g) {
    case GroupMode::Trivial: return "trivial";
    case GroupMode::Symmetric: return "symmetric";
    case GroupMode::Sampled: return "sampled";
  }
  return "?";
}

std::string fmt_double(double d) {
  std::ostringstream out;
  out << d;
  return out.str();
}

bool same_elements(const SymmetryGroup& a, const SymmetryGroup& b) {
  return a.elements().size() == b.elements().size() &&
         std::equal(a.elements().begin(), a.elements().end(), b.elements().begin());
}

}  // namespace

std::vector<SearchSite> search_sites(const SearchParams& p) {
  validate_params(p);
  std::vector<SearchSite> out;
  for (int n = p.n_min; n <= p.n_max; ++n) {
    const bool exhaustive = p.closure_mode == ClosureMode::Exhaustive ||
                            (p.closure_mode == ClosureMode::Auto && n <= 3);
    std::vector<ClosureOperator> families;
    if (exhaustive) {
      families = enumerate_moore_families(n);
    } else {
      Rng rng(derive_seed(p.seed, {0xC105ULL, static_cast<std::uint64_t>(n)}));
      for (std::size_t i = 0; i < p.random_families; ++i)
        families.push_back(random_moore_family(n, rng));
    }
    for (std::size_t f = 0; f < families.size(); ++f) {
      const auto& cl = families[f];
      const SymmetryGroup autos = closure_automorphisms(cl);
      std::vector<SymmetryGroup> used;
      for (GroupMode mode : p.groups) {
        SymmetryGroup group = SymmetryGroup::trivial(n);
        if (mode == GroupMode::Symmetric) {
          group = autos;
        } else if (mode == GroupMode::Sampled) {
          const auto& els = autos.elements();
          if (els.size() <= 2) continue;
          Rng rng(derive_seed(p.seed, {0x6E0ULL, static_cast<std::uint64_t>(n), f}));
          std::vector<Permutation> gens;
          const auto k = 1 + rng.below(2);
          for (std::uint64_t i = 0; i < k; ++i) gens.push_back(els[1 + rng.below(els.size() - 1)]);
          group = SymmetryGroup::generate(n, std::move(gens));
          if (same_elements(group, autos)) continue;
        }
        if (std::any_of(used.begin(), used.end(),
                        [&](const SymmetryGroup& g) { return same_elements(g, group); }))
          continue;
        used.push_back(group);
        out.push_back({Site::make(cl, std::move(group)),
                       "n=" + std::to_string(n) + " family=" + std::to_string(f) +
                           " group=" + std::string(group_label(mode))});
      }
    }
  }
  return out;
}

namespace {

std::vector<TernaryRelation> sample_relations(const SearchSite& s, std::size_t site_index,
                                              std::size_t sample, const SearchParams& p) {
  const double density = p.densities[sample % p.densities.size()];
  const auto r = random_invariant_relation(
      s.site, derive_seed(p.seed, {static_cast<std::uint64_t>(site_index), sample}), density);
  const auto core = monotone_normal_core(r);
  return {r,          closure_c(r),    monotonise_m(r), star(r),
          core,       monotonise_m(core), closure_c(core), star(core)};
}

std::vector<TernaryRelation> builtin_relations(const SearchSite& s) {
  const auto a = builtin_a_indep(s.site);
  return {builtin_full(s.site), a, monotonise_M(a), monotonise_m(a), star(a)};
}

struct Partial {
  std::vector<ClaimTally> tallies;
};

}  // namespace

std::vector<TernaryRelation> sample_population(const SearchSite& site, std::size_t site_index,
                                               const SearchParams& p) {
  std::vector<TernaryRelation> out;
  for (std::size_t s = 0; s < p.samples; ++s) {
    auto part = sample_relations(site, site_index, s, p);
    out.insert(out.end(), part.begin(), part.end());
  }
  auto builtins = builtin_relations(site);
  out.insert(out.end(), builtins.begin(), builtins.end());
  return out;
}

std::size_t SearchReport::total_refutations() const {
  std::size_t total = 0;
  for (const auto& c : claims) total += c.refuted;
  return total;
}

std::string SearchReport::text() const {
  std::ostringstream out;
  out << "search n=" << params.n_min << ".." << params.n_max << " closure="
      << (params.closure_mode == ClosureMode::Auto         ? "auto"
          : params.closure_mode == ClosureMode::Exhaustive ? "exhaustive"
                                                           : "random")
      << " groups=";
  for (std::size_t i = 0; i < params.groups.size(); ++i)
    out << (i ? "," : "") << group_label(params.groups[i]);
  out << " samples=" << params.samples << " densities=";
  for (std::size_t i = 0; i < params.densities.size(); ++i)
    out << (i ? "," : "") << fmt_double(params.densities[i]);
  out << " seed=" << params.seed << "\n";
  out << "sites=" << sites << " relations=" << relations << "\n";
  out << "claim  relations  instances  confirmed  refuted  skipped\n";
  for (const auto& c : claims) {
    std::string id = c.claim_id;
    id.resize(5, ' ');
    out << id << "  " << c.relations << "  " << c.instances_checked << "  " << c.confirmed << "  "
        << c.refuted << "  " << c.skipped << "\n";
  }
  for (const auto& c : claims) {
    for (std::size_t i = 0; i < c.refutations.size(); ++i) {
      const auto& ref = c.refutations[i];
      out << "refuted " << c.claim_id << (ref.finding ? " [external-proof finding]" : " [BUG]")
          << " at " << c.refutation_sites[i] << ": " << ref.clause << " fails for "
          << ref.relation.name();
      if (ref.weaker) out << " with R0 = " << ref.weaker->name();
      out << "; witness " << ref.verdict.witness->describe() << "\n";
    }
  }
  out << "total refutations: " << total_refutations() << "\n";
  return out.str();
}

SearchReport search(const std::vector<const Claim*>& claims, const SearchParams& p) {
  const auto sites = search_sites(p);
  // One work item per (site, sample) plus one per site for the builtins.
  const std::size_t per_site = p.samples + 1;
  const std::size_t items = sites.size() * per_site;
  std::vector<Partial> partials(items);
  std::vector<std::size_t> relation_counts(items, 0);
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 1) num_threads(p.jobs)
  for (std::int64_t item = 0; item < static_cast<std::int64_t>(items); ++item) {
    try {
      const std::size_t site_index = static_cast<std::size_t>(item) / per_site;
      const std::size_t sample = static_cast<std::size_t>(item) % per_site;
      const bool builtin_item = sample == p.samples;
      const auto& site = sites[site_index];
      const auto relations =
          builtin_item ? builtin_relations(site) : sample_relations(site, site_index, sample, p);
      relation_counts[static_cast<std::size_t>(item)] = relations.size();
      auto& tallies = partials[static_cast<std::size_t>(item)].tallies;
      for (const Claim* claim : claims) {
        ClaimTally t;
        t.claim_id = claim->id;
        if (claim->subject == ClaimSubject::AIndep) {
          if (!builtin_item) {
            tallies.push_back(std::move(t));
            continue;
          }
        }
        const std::size_t runs = claim->subject == ClaimSubject::AIndep ? 1 : relations.size();
        for (std::size_t i = 0; i < runs; ++i) {
          ClaimVerdict v = verify_claim(*claim, relations[i]);
          ++t.relations;
          t.instances_checked += v.instances_checked;
          t.skipped += v.skipped;
          switch (v.status) {
            case ClaimStatus::Confirmed: ++t.confirmed; break;
            case ClaimStatus::Skipped: break;
            case ClaimStatus::Refuted:
              ++t.refuted;
              if (t.refutations.size() < p.max_refutations) {
                t.refutations.push_back(std::move(*v.refutation));
                t.refutation_sites.push_back(site.label);
              }
              break;
          }
        }
        tallies.push_back(std::move(t));
      }
    } catch (...) {
#pragma omp critical(indep_search_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  SearchReport report;
  report.params = p;
  report.sites = sites.size();
  for (auto n : relation_counts) report.relations += n;
  for (const Claim* claim : claims) report.claims.push_back({claim->id, 0, 0, 0, 0, 0, {}, {}});
  for (auto& part : partials) {
    for (std::size_t c = 0; c < claims.size(); ++c) {
      auto& into = report.claims[c];
      auto& from = part.tallies[c];
      into.relations += from.relations;
      into.instances_checked += from.instances_checked;
      into.confirmed += from.confirmed;
      into.refuted += from.refuted;
      into.skipped += from.skipped;
      for (std::size_t i = 0; i < from.refutations.size(); ++i) {
        if (into.refutations.size() >= p.max_refutations) break;
        into.refutations.push_back(std::move(from.refutations[i]));
        into.refutation_sites.push_back(std::move(from.refutation_sites[i]));
      }
    }
  }
  return report;
}

}  // namespace indep
