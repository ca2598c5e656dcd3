#pragma once

// Serial reference implementations of the operator kernels, written directly from the
// quantifier definitions: every candidate base D and every candidate A' is drawn from
// the full power set and filtered, and type equivalence goes through Site::equivalent.
// Used to cross-check the parallel kernels in tests and benchmarks. Requires n <= 5.

#include "indep/relation.hpp"

namespace indep::reference {

TernaryRelation monotonise_M(const TernaryRelation& r);
TernaryRelation monotonise_m(const TernaryRelation& r);
TernaryRelation star(const TernaryRelation& r);
TernaryRelation closure_c(const TernaryRelation& r);

/// Literal table comparison: true iff every true triple of r1 is true in r2.
bool implies(const TernaryRelation& r1, const TernaryRelation& r2);

}  // namespace indep::reference
