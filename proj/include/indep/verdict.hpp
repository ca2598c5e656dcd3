#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "indep/site.hpp"
#include "indep/subset.hpp"

namespace indep {

class TernaryRelation;

/// r(triple) == expected, on relation `relation` (0 = subject, 1 = second operand).
struct TripleFact {
  Triple triple;
  bool expected = false;
  int relation = 0;
};

/// equivalent(a, a2, base) == expected.
struct EquivFact {
  Subset a, a2, base;
  bool expected = false;
};

/// (element ∈ cl(set)) == expected.
struct ClosureFact {
  int element = 0;
  Subset set;
  bool expected = false;
};

/// orbit(a, base) == members; records an exhausted existential search space.
struct OrbitFact {
  Subset a, base;
  std::vector<Subset> members;
};

/// A concrete counterexample. Every fact is re-checkable by evaluation alone.
struct Witness {
  std::vector<std::pair<std::string, Subset>> vars;
  std::optional<Permutation> sigma;
  std::vector<TripleFact> triples;
  std::vector<EquivFact> equivs;
  std::vector<ClosureFact> closures;
  std::vector<OrbitFact> orbits;

  /// "A={0} C={} B={1}".
  std::string describe() const;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;  // present iff !holds
  std::string note;

  static Verdict pass(std::string note = {}) { return {true, std::nullopt, std::move(note)}; }
  static Verdict fail(Witness w, std::string note = {}) {
    return {false, std::move(w), std::move(note)};
  }
};

/// Re-checks every fact in `w` against `r` (and `second` for relation-1 facts).
/// True iff all facts hold, i.e. the witness re-demonstrates the failure.
bool replay(const Witness& w, const TernaryRelation& r, const TernaryRelation* second = nullptr);

}  // namespace indep
