#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "indep/relation.hpp"

namespace indep {

enum class Axiom {
  FIN, EX, SYM, LOC, NOR, MON, BMON, TRA, AREF, CLO_B, CLO_BC, SCLO, STRFIN, EXT, FEX, INDTHM, STAT
};

enum class Side { None, Left, Right };

/// True for NOR, MON, TRA, CLO_B, CLO_BC. BMON is right-sided only and carries no tag.
bool is_sided(Axiom a);
std::string_view axiom_name(Axiom a);

/// An axiom plus side tag. Sided axioms must carry Left or Right, others None.
class AxiomId {
 public:
  /// Throws Error if the side tag does not fit the axiom.
  AxiomId(Axiom axiom, Side side = Side::None);

  /// Accepts "EX", "right NOR", "left MON", "BMON", ... (case-sensitive axiom names).
  static AxiomId parse(std::string_view text);

  Axiom axiom() const { return axiom_; }
  Side side() const { return side_; }
  /// "right NOR", "EX".
  std::string to_string() const;

  friend bool operator==(const AxiomId&, const AxiomId&) = default;
  friend auto operator<=>(const AxiomId&, const AxiomId&) = default;

 private:
  Axiom axiom_;
  Side side_;
};

inline AxiomId right(Axiom a) { return {a, Side::Right}; }
inline AxiomId left(Axiom a) { return {a, Side::Left}; }

/// Finite-semantics check. Failing verdicts carry the least violating tuple in canonical
/// order (the axiom's variables in the order they are quantified); left-sided checks are
/// the right-sided checks on the transposed relation r'(A,C,B) = r(B,C,A).
///
/// FIN and LOC hold vacuously. STRFIN, EXT, FEX, INDTHM and STAT note a warning when r
/// is not invariant. INDTHM and STAT quantify over site.models() only.
Verdict check_axiom(const TernaryRelation& r, AxiomId ax, Exec exec = Exec::Parallel);

/// Every axiom and both sides, in the fixed profile order.
const std::vector<AxiomId>& profile_order();

struct AxiomProfile {
  std::string relation;
  std::vector<std::pair<AxiomId, Verdict>> rows;

  const Verdict& at(AxiomId id) const;
  /// Fixed-order plain-text table: axiom, side, holds, witness.
  std::string table() const;
};

AxiomProfile axiom_profile(const TernaryRelation& r, Exec exec = Exec::Parallel);

}  // namespace indep
