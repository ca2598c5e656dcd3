#pragma once

#include <optional>
#include <string>
#include <vector>

#include "indep/fp_linalg.hpp"

namespace indep {

/// Outcome of a linear-algebra check. `witness` is a vector on the failing side;
/// `lambda` is set by the generic-intersection check.
struct LinearVerdict {
  bool holds = true;
  std::optional<FpVector> witness;
  std::optional<FpVector> lambda;
  std::string note;
};

/// U ⫝_W V with generic subgroup G: U ∩ V = W and G ∩ (U+V) = (G∩U) + (G∩V).
/// Throws Error unless W ⊆ U and W ⊆ V.
LinearVerdict kim_indep(const FpSubspace& u, const FpSubspace& v, const FpSubspace& w,
                        const FpSubspace& g);

/// Scales v so its last nonzero coordinate is 1.
FpVector normalize_last(const FpVector& v);

/// Monomial coordinates of the k=5 instance.
inline constexpr int kA = 0, kD1 = 1, kD2 = 2, kAD1 = 3, kAD2 = 4;
inline constexpr int kInstanceDim = 5;

/// Renders a vector over the monomial coordinates, highest coordinate first: "ad2 - d1".
std::string monomial_string(const FpVector& v);

struct KimCase {
  FpSubspace u, v, w, g;
  LinearVerdict verdict;
};

struct InstanceReport {
  int p = 2;
  bool swapped = false;
  KimCase base;
  KimCase intermediate;
  FpVector expected_witness;

  /// Base holds, intermediate fails, witness equals `expected_witness`.
  bool reproduces() const;
  std::string text() const;
};

/// The base-monotonicity failure. `swapped` applies d1↔d2, ad1↔ad2 to every datum.
InstanceReport acfg_bmon_failure_instance(int p, bool swapped = false);

/// x·u − v in the degree-one slice.
struct GenericPair {
  FpVector u, v;
};

/// [G ⊕ ⊕ Span(x·u_n − v_n)] ∩ K = G: every λ with Σλu = 0 has Σλv ∈ G.
LinearVerdict generic_intersection_check(const FpSubspace& g, const std::vector<GenericPair>& pairs);

enum class SequenceConfig { Config1, Config2, Config3, NotIndiscernible, Inconclusive };

std::string config_name(SequenceConfig c);

inline constexpr int kMaxSequenceLength = 32;
inline constexpr int kMaxArity = 4;

using VectorPair = std::pair<FpVector, FpVector>;

/// Linear relations among the 2j vectors d1^{i1}, d2^{i1}, ..., d1^{ij}, d2^{ij}.
FpSubspace tuple_relations(const std::vector<VectorPair>& seq, const std::vector<int>& idx);

/// Order-indiscernibility of linear dependencies up to `arity`.
bool linearly_indiscernible(const std::vector<VectorPair>& seq, int arity);

/// Throws Error on length < 2, repeated pairs, shape mismatch, or arity/length cap.
SequenceConfig classify_sequence(const std::vector<VectorPair>& seq, int arity = 3);

}  // namespace indep
