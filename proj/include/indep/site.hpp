#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "indep/error.hpp"
#include "indep/subset.hpp"

namespace indep {

/// A permutation of {0, ..., n-1}, n <= 16.
class Permutation {
 public:
  Permutation() = default;
  /// Throws Error unless `images` is a permutation of 0..size-1.
  explicit Permutation(std::span<const int> images);

  static Permutation identity(int n);

  int degree() const { return n_; }
  int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
  Subset apply(Subset s) const;
  bool fixes_pointwise(Subset s) const;
  bool is_identity() const;

  /// (this ∘ other)(x) = this(other(x)).
  Permutation compose(const Permutation& other) const;

  /// Four bits per point; total order used for canonical element lists.
  std::uint64_t code() const;
  std::vector<int> images() const;
  /// Cycle notation, e.g. "(0 1)(2 3)"; identity is "()".
  std::string cycles() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.n_ == b.n_ && a.code() == b.code();
  }

 private:
  int n_ = 0;
  std::uint8_t img_[kMaxGroundSize] = {};
};

/// Default cap on materialized group order.
inline constexpr std::size_t kDefaultGroupCap = 20160;

/// A permutation group given by generators, materialized as a sorted element list.
class SymmetryGroup {
 public:
  /// BFS closure of the generators under composition. Throws CapError past `cap`.
  static SymmetryGroup generate(int n, std::vector<Permutation> generators,
                                std::size_t cap = kDefaultGroupCap);
  static SymmetryGroup trivial(int n);

  int degree() const { return n_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  /// Sorted by code(); the identity is always first.
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

 private:
  int n_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

/// A closure operator, represented by its Moore family of closed sets.
class ClosureOperator {
 public:
  /// Throws Error unless `closed_sets` contains the full set and is intersection-closed.
  static ClosureOperator from_family(int n, std::vector<Subset> closed_sets);
  /// Converts an explicit map (map[a] = cl(a) for all 2^n subsets) to its Moore family.
  /// Throws Error unless the map is extensive, monotone and idempotent.
  static ClosureOperator from_map(int n, std::span<const Subset> map);
  /// Every subset is closed.
  static ClosureOperator trivial(int n);

  int ground_size() const { return n_; }
  const std::vector<Subset>& closed_sets() const { return closed_; }
  Subset closure(Subset a) const { return table_[a.bits()]; }
  bool is_closed(Subset a) const { return table_[a.bits()] == a; }

  /// ∀A,x,y: y ∈ cl(A∪{x}) \ cl(A) → x ∈ cl(A∪{y}).
  bool has_exchange() const;

  friend bool operator==(const ClosureOperator& a, const ClosureOperator& b) {
    return a.n_ == b.n_ && a.closed_ == b.closed_;
  }

 private:
  int n_ = 0;
  std::vector<Subset> closed_;
  std::vector<Subset> table_;
};

/// Raw, unvalidated site data as read from a file.
struct SiteSpec {
  int n = 0;
  std::vector<std::uint32_t> closed_sets;
  std::vector<std::vector<int>> generators;
  std::optional<std::vector<std::uint32_t>> models;
  std::size_t group_cap = kDefaultGroupCap;
};

struct Violation {
  std::string kind;  // "ground-size", "bitmask", "full-set", "intersection", "generator",
                     // "equivariance", "group-order", "model"
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Lists every violated site invariant; empty report iff `spec` describes a valid site.
ValidationReport validate_site(const SiteSpec& spec);

class SiteError : public Error {
 public:
  explicit SiteError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// A finite site: ground set, closure operator, symmetry group, designated model subsets.
/// Immutable once built.
class Site {
 public:
  /// Validates and builds. Throws SiteError with the full report if invalid.
  static std::shared_ptr<const Site> build(const SiteSpec& spec);
  /// Builds from already-validated parts. Throws SiteError if they are inconsistent.
  static std::shared_ptr<const Site> make(ClosureOperator cl, SymmetryGroup group,
                                          std::optional<std::vector<Subset>> models = {});

  int n() const { return cl_.ground_size(); }
  Subset full() const { return Subset::full(n()); }
  std::uint32_t subset_count() const { return std::uint32_t{1} << n(); }
  const ClosureOperator& cl() const { return cl_; }
  const SymmetryGroup& group() const { return group_; }
  const std::vector<Subset>& models() const { return models_; }

  Subset closure(Subset a) const { return cl_.closure(a); }
  bool is_valid(Subset a) const { return a.bits() < subset_count(); }

  /// Image of `s` under the i-th group element.
  Subset image(std::size_t element, Subset s) const;
  /// Indices of group elements fixing `base` pointwise (identity first).
  std::vector<std::uint32_t> stabilizer(Subset base) const;
  /// Sorted images of `a` under the pointwise stabilizer of `base`.
  std::vector<Subset> orbit(Subset a, Subset base) const;
  /// True iff some element fixing `base` pointwise maps `a` onto `a2`.
  bool equivalent(Subset a, Subset a2, Subset base) const;

  SiteSpec to_spec() const;

  friend bool operator==(const Site& a, const Site& b);

 private:
  Site(ClosureOperator cl, SymmetryGroup group, std::vector<Subset> models);

  ClosureOperator cl_;
  SymmetryGroup group_;
  std::vector<Subset> models_;
  // image_table_[e * 2^n + s] when small enough, else empty
  std::vector<Subset> image_table_;
  // stab_[base] when n <= 8, else empty
  std::vector<std::vector<std::uint32_t>> stab_;
};

using SitePtr = std::shared_ptr<const Site>;

/// Automorphisms of the closure: all σ ∈ Sym(n) mapping closed sets onto closed sets.
/// Enumerates Sym(n); requires n <= 8.
SymmetryGroup closure_automorphisms(const ClosureOperator& cl,
                                    std::size_t cap = kDefaultGroupCap);

}  // namespace indep
