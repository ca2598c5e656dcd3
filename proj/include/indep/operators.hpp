#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "indep/relation.hpp"

namespace indep {

/// The relation transformers.
enum class Op {
  Mono,        // M: base ranges over C ⊆ D ⊆ cl(B∪C)
  NaiveMono,   // m: base ranges over C ⊆ D ⊆ B∪C
  Star,        // star: extension to every D ⊇ B up to type over B∪C
  ClosureExt,  // c: right-hand side replaced by cl(B∪C)
};

std::string_view op_symbol(Op op);

inline constexpr std::size_t kDefaultExprDepthCap = 4;

/// A term over {M, m, star, c} applied to the base symbol R, e.g. "c(m(R))".
/// Stored innermost operator first.
class OperatorExpr {
 public:
  OperatorExpr() = default;
  explicit OperatorExpr(std::vector<Op> innermost_first) : ops_(std::move(innermost_first)) {}

  /// EXPR := "R" | "m(" EXPR ")" | "M(" EXPR ")" | "star(" EXPR ")" | "c(" EXPR ")".
  /// Throws Error on syntax errors and CapError when nesting exceeds `depth_cap`.
  static OperatorExpr parse(std::string_view text, std::size_t depth_cap = kDefaultExprDepthCap);

  const std::vector<Op>& ops() const { return ops_; }
  std::size_t depth() const { return ops_.size(); }
  /// Wraps this expression in one more operator.
  OperatorExpr then(Op op) const;

  /// Renders with `base` substituted for R.
  std::string to_string(std::string_view base = "R") const;

  friend bool operator==(const OperatorExpr&, const OperatorExpr&) = default;

 private:
  std::vector<Op> ops_;
};

/// out(A,C,B) ⟺ r(A,D,B) for every D with C ⊆ D ⊆ cl(B∪C).
TernaryRelation monotonise_M(const TernaryRelation& r, Exec exec = Exec::Parallel);
/// out(A,C,B) ⟺ r(A,D,B) for every D with C ⊆ D ⊆ B∪C.
TernaryRelation monotonise_m(const TernaryRelation& r, Exec exec = Exec::Parallel);
/// out(A,C,B) ⟺ for every D ⊇ B there is A' ≡_{B∪C} A with r(A',C,D).
/// D ranges over supersets of B, not of B∪C.
TernaryRelation star(const TernaryRelation& r, Exec exec = Exec::Parallel);
/// out(A,C,B) ⟺ r(A, C, cl(B∪C)).
TernaryRelation closure_c(const TernaryRelation& r, Exec exec = Exec::Parallel);

TernaryRelation apply_op(Op op, const TernaryRelation& r, Exec exec = Exec::Parallel);
/// Applies innermost first; the result is named expr.to_string(r.name()).
/// Throws CapError if expr is deeper than `depth_cap`.
TernaryRelation apply_expr(const OperatorExpr& expr, const TernaryRelation& r,
                           std::size_t depth_cap = kDefaultExprDepthCap,
                           Exec exec = Exec::Parallel);

}  // namespace indep
