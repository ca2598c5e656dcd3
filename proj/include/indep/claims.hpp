#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "indep/axioms.hpp"
#include "indep/operators.hpp"

namespace indep {

/// A precondition on the input relation (or, for Exchange, on its site's closure).
struct Requirement {
  enum class Kind { Axiom, Invariant, Exchange };
  Kind kind = Kind::Axiom;
  std::optional<AxiomId> axiom;

  static Requirement of(AxiomId id) { return {Kind::Axiom, id}; }
  static Requirement invariant() { return {Kind::Invariant, std::nullopt}; }
  static Requirement exchange() { return {Kind::Exchange, std::nullopt}; }
  std::string to_string() const;
};

/// What a claim asserts about operator expressions over the input relation R.
struct Conclusion {
  enum class Kind {
    Satisfies,  // lhs satisfies axiom
    Invariant,  // lhs is invariant
    Implies,    // lhs → rhs
    Equals,     // lhs = rhs
    Weakening,  // every R0 with R0 → R and the clause's weaker-requirements has R0 → lhs
  };
  Kind kind = Kind::Satisfies;
  OperatorExpr lhs;
  OperatorExpr rhs;
  std::optional<AxiomId> axiom;

  std::string to_string() const;
};

struct Clause {
  std::vector<Requirement> requires_;  // extra hypotheses on R for this clause
  Conclusion conclusion;
  std::vector<Requirement> weaker;     // Weakening only: requirements on R0
};

enum class Provenance {
  Formal,          // proof uses set manipulation only; a refutation is a bug
  ExternalProof,   // proof lives in an external reference; refutations are findings
  FiniteAnalogue,  // finite reading of a theory-level fact; refutations are findings
};

enum class ClaimSubject { Input, AIndep };

struct Claim {
  std::string id;   // "C1"
  std::string key;  // "m-bmon"
  std::string statement;
  Provenance provenance = Provenance::Formal;
  ClaimSubject subject = ClaimSubject::Input;
  std::vector<Requirement> hypotheses;
  std::vector<Clause> clauses;
};

/// The eleven built-in claims C1..C11, in id order.
const std::vector<Claim>& registry();
/// Looks up by id ("C6") or key ("Mstar-eq-mstar"); throws Error if unknown.
const Claim& find_claim(std::string_view id_or_key);

enum class ClaimStatus { Confirmed, Refuted, Skipped };
std::string_view status_name(ClaimStatus s);

/// Everything needed to replay a refutation.
struct Refutation {
  std::string claim_id;
  std::string clause;               // rendered conclusion
  std::vector<std::string> tables;  // names of every relation involved
  Verdict verdict;                  // failing verdict with witness
  TernaryRelation relation;         // the input relation R
  std::optional<TernaryRelation> weaker;  // R0, for weakening clauses
  bool finding = false;             // true unless the claim's proof is formal
};

struct ClaimVerdict {
  std::string claim_id;
  std::size_t instances_checked = 0;
  std::size_t skipped = 0;  // clause instances whose hypotheses were unmet
  ClaimStatus status = ClaimStatus::Skipped;
  std::optional<Refutation> refutation;
};

/// Checks hypotheses with the axiom checkers, then every clause whose own requirements
/// hold. Weakening clauses draw R0 from a pool derived from R (R itself, operator
/// outputs, the monotone core and conjunctions with a-indep).
ClaimVerdict verify_claim(const Claim& claim, const TernaryRelation& r);
/// As above, with an explicit R0 for weakening clauses instead of the derived pool.
ClaimVerdict verify_claim(const Claim& claim, const TernaryRelation& r,
                          const TernaryRelation& weaker);

}  // namespace indep
