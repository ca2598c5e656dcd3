#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "indep/kernels.hpp"
#include "indep/site.hpp"
#include "indep/verdict.hpp"

namespace indep {

/// Largest ground size for which relations are stored as full truth tables.
inline constexpr int kMaxExtensionalSize = 5;

/// A ternary relation r(A, C, B) on the subsets of a site ("A independent from B over C").
///
/// For n <= 5 the relation is a table of 2^{3n} entries indexed by (A << 2n | C << n | B),
/// so index order is the canonical lexicographic (A, C, B) order. For larger n it is
/// backed by a predicate with a thread-safe memo cache.
class TernaryRelation {
 public:
  using Predicate = std::function<bool(Subset a, Subset c, Subset b)>;

  /// Throws MismatchError unless table.size() == 2^{3n} and n <= 5.
  static TernaryRelation from_table(SitePtr site, std::vector<std::uint8_t> table,
                                    std::string name);
  /// Materializes a table when n <= 5, otherwise wraps `pred` lazily.
  /// `pred` must be pure and thread-safe.
  static TernaryRelation from_predicate(SitePtr site, Predicate pred, std::string name,
                                        Exec exec = Exec::Parallel);

  const Site& site() const { return *site_; }
  const SitePtr& site_ptr() const { return site_; }
  const std::string& name() const { return name_; }
  TernaryRelation renamed(std::string name) const;

  bool extensional() const { return table_ != nullptr; }
  /// Throws Error for lazy relations.
  std::span<const std::uint8_t> table() const;

  std::uint64_t triple_count() const { return std::uint64_t{1} << (3 * site_->n()); }
  std::uint64_t index(Subset a, Subset c, Subset b) const {
    const int n = site_->n();
    return (std::uint64_t{a.bits()} << (2 * n)) | (std::uint64_t{c.bits()} << n) | b.bits();
  }
  Triple triple_at(std::uint64_t index) const;

  /// Unchecked evaluation.
  bool operator()(Subset a, Subset c, Subset b) const {
    if (table_) return (*table_)[index(a, c, b)] != 0;
    return lazy_eval(a, c, b);
  }
  bool operator()(const Triple& t) const { return (*this)(t.a, t.c, t.b); }
  /// Checked evaluation; throws MismatchError on subsets outside the site.
  bool eval(Subset a, Subset c, Subset b) const;

 private:
  struct Lazy;
  bool lazy_eval(Subset a, Subset c, Subset b) const;

  SitePtr site_;
  std::string name_;
  std::shared_ptr<const std::vector<std::uint8_t>> table_;
  std::shared_ptr<Lazy> lazy_;
};

/// Throws MismatchError unless both relations live on equal sites.
void require_same_site(const TernaryRelation& r1, const TernaryRelation& r2);

TernaryRelation builtin_full(SitePtr site);
/// Constantly false.
TernaryRelation builtin_empty(SitePtr site);
/// r(A,C,B) ⟺ cl(A∪C) ∩ cl(B∪C) = cl(C).
TernaryRelation builtin_a_indep(SitePtr site);
TernaryRelation builtin_from_predicate(SitePtr site, TernaryRelation::Predicate pred,
                                       std::string name);

/// Pointwise conjunction, named "name1 & name2".
TernaryRelation conjunction(const TernaryRelation& r1, const TernaryRelation& r2);

/// Largest sub-relation with left and right MON and NOR:
/// core(A,C,B) ⟺ r(A',C,B') for all A' ⊆ A∪C, B' ⊆ B∪C. Invariant if r is.
TernaryRelation monotone_normal_core(const TernaryRelation& r);

/// Holds iff r(A,C,B) = r(σA,σC,σB) for every group element σ and triple.
/// Witness: least triple in canonical order, then least σ.
Verdict is_invariant(const TernaryRelation& r);

/// Every true triple of r1 is true in r2. Witness: least counterexample triple.
Verdict implies(const TernaryRelation& r1, const TernaryRelation& r2);
/// implies in both directions; witness from the first failing direction.
Verdict equals(const TernaryRelation& r1, const TernaryRelation& r2);

/// Random relation constant on group orbits of triples.
///
/// Each orbit is keyed by its least triple index i; its value is
/// unit(derive_seed(seed, {i})) < density, with unit() as in Rng. The value
/// depends only on (site, seed, density), not on evaluation order or n.
TernaryRelation random_invariant_relation(SitePtr site, std::uint64_t seed, double density);

}  // namespace indep
