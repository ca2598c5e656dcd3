#include "indep/acfg.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace indep {

namespace {

std::optional<FpVector> first_missing(const FpSubspace& lhs, const FpSubspace& rhs) {
  for (const auto& b : lhs.basis())
    if (!rhs.contains(b)) return b;
  return std::nullopt;
}

}  // namespace

LinearVerdict kim_indep(const FpSubspace& u, const FpSubspace& v, const FpSubspace& w,
                        const FpSubspace& g) {
  for (const auto* s : {&v, &w, &g})
    if (s->p() != u.p() || s->ambient_dim() != u.ambient_dim())
      throw MismatchError("kim_indep arguments live in different ambient spaces");
  if (!w.subspace_of(u) || !w.subspace_of(v)) throw Error("kim_indep requires W ⊆ U and W ⊆ V");
  LinearVerdict out;
  // W ⊆ U ∩ V always, so equality fails only through a vector of U ∩ V outside W.
  if (auto miss = first_missing(intersect(u, v), w)) {
    out.holds = false;
    out.witness = normalize_last(*miss);
    out.note = "U ∩ V ≠ W";
    return out;
  }
  const FpSubspace lhs = intersect(g, sum(u, v));
  const FpSubspace rhs = sum(intersect(g, u), intersect(g, v));
  if (auto miss = first_missing(lhs, rhs)) {
    out.holds = false;
    out.witness = normalize_last(*miss);
    out.note = "G ∩ (U+V) ≠ (G∩U) + (G∩V)";
  }
  return out;
}

FpVector normalize_last(const FpVector& v) {
  for (int i = v.dim() - 1; i >= 0; --i)
    if (v[i] != 0) return v.scaled(inverse_mod(v[i], v.p()));
  return v;
}

std::string monomial_string(const FpVector& v) {
  static const std::array<const char*, kInstanceDim> names = {"a", "d1", "d2", "ad1", "ad2"};
  if (v.dim() != kInstanceDim) return v.to_string();
  std::string out;
  for (int i = v.dim() - 1; i >= 0; --i) {
    const int c = v[i];
    if (c == 0) continue;
    const bool neg = c == v.p() - 1 && !(out.empty() && v.p() == 2);
    const int mag = neg ? 1 : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mag != 1) out += std::to_string(mag) + "*";
    out += names[static_cast<std::size_t>(i)];
  }
  return out.empty() ? "0" : out;
}

bool InstanceReport::reproduces() const {
  return base.verdict.holds && !intermediate.verdict.holds && intermediate.verdict.witness &&
         *intermediate.verdict.witness == expected_witness;
}

std::string InstanceReport::text() const {
  auto show = [](const FpSubspace& s) {
    std::string out = "span{";
    for (std::size_t i = 0; i < s.basis().size(); ++i)
      out += (i ? ", " : "") + monomial_string(normalize_last(s.basis()[i]));
    return out + "}";
  };
  auto line = [&](const char* label, const KimCase& c) {
    std::string out = std::string(label) + ": U=" + show(c.u) + " V=" + show(c.v) + " W=" + show(c.w) +
                      " G=" + show(c.g) + " -> " + (c.verdict.holds ? "holds" : "fails");
    if (c.verdict.witness) out += " witness " + monomial_string(*c.verdict.witness);
    if (!c.verdict.note.empty()) out += " (" + c.verdict.note + ")";
    return out + "\n";
  };
  std::string out = "p=" + std::to_string(p) + (swapped ? " swapped" : "") + "\n";
  out += line("base", base);
  out += line("intermediate", intermediate);
  out += std::string("base monotonicity ") + (reproduces() ? "fails" : "not reproduced") + "\n";
  return out;
}

InstanceReport acfg_bmon_failure_instance(int p, bool swapped) {
  auto e = [&](int i) { return FpVector::unit(p, kInstanceDim, i); };
  std::array<int, kInstanceDim> perm = {kA, kD1, kD2, kAD1, kAD2};
  if (swapped) perm = {kA, kD2, kD1, kAD2, kAD1};
  auto sp = [&](std::initializer_list<FpVector> vs) {
    return permute(FpSubspace::span(p, kInstanceDim, std::vector<FpVector>(vs)), perm);
  };

  InstanceReport r;
  r.p = p;
  r.swapped = swapped;
  const FpSubspace g = sp({e(kAD2) - e(kD1)});
  const FpSubspace v = sp({e(kD1), e(kD2)});
  r.base = {sp({e(kA)}), v, FpSubspace::zero(p, kInstanceDim), g, {}};
  r.base.verdict = kim_indep(r.base.u, r.base.v, r.base.w, r.base.g);
  r.intermediate = {sp({e(kA), e(kD2), e(kAD2)}), v, sp({e(kD2)}), g, {}};
  r.intermediate.verdict = kim_indep(r.intermediate.u, r.intermediate.v, r.intermediate.w, r.intermediate.g);
  r.expected_witness = permute(e(kAD2) - e(kD1), perm);
  return r;
}

LinearVerdict generic_intersection_check(const FpSubspace& g, const std::vector<GenericPair>& pairs) {
  const int p = g.p();
  const int k = g.ambient_dim();
  std::vector<FpVector> us;
  for (const auto& pr : pairs) {
    if (pr.u.p() != p || pr.v.p() != p || pr.u.dim() != k || pr.v.dim() != k)
      throw MismatchError("generic pair shape differs from G");
    us.push_back(pr.u);
  }
  LinearVerdict out;
  const FpSubspace kernel = left_kernel(p, k, us);
  for (const auto& lambda : kernel.basis()) {
    FpVector total = FpVector::zero(p, k);
    for (std::size_t i = 0; i < pairs.size(); ++i) total = total + pairs[i].v.scaled(lambda[static_cast<int>(i)]);
    if (!g.contains(total)) {
      out.holds = false;
      out.lambda = lambda;
      out.witness = total;
      out.note = "x-free combination outside G";
      return out;
    }
  }
  return out;
}

std::string config_name(SequenceConfig c) {
  switch (c) {
    case SequenceConfig::Config1: return "Config1";
    case SequenceConfig::Config2: return "Config2";
    case SequenceConfig::Config3: return "Config3";
    case SequenceConfig::NotIndiscernible: return "NotIndiscernible";
    case SequenceConfig::Inconclusive: return "Inconclusive";
  }
  return "?";
}

FpSubspace tuple_relations(const std::vector<VectorPair>& seq, const std::vector<int>& idx) {
  std::vector<FpVector> rows;
  for (int i : idx) {
    rows.push_back(seq.at(static_cast<std::size_t>(i)).first);
    rows.push_back(seq.at(static_cast<std::size_t>(i)).second);
  }
  const auto& v0 = seq.front().first;
  return left_kernel(v0.p(), v0.dim(), rows);
}

bool linearly_indiscernible(const std::vector<VectorPair>& seq, int arity) {
  const int len = static_cast<int>(seq.size());
  for (int j = 1; j <= std::min(arity, len); ++j) {
    std::vector<int> idx(static_cast<std::size_t>(j));
    for (int i = 0; i < j; ++i) idx[static_cast<std::size_t>(i)] = i;
    const FpSubspace first = tuple_relations(seq, idx);
    // Walk increasing tuples in lexicographic order.
    while (true) {
      int pos = j - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == len - j + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < j; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
      if (!(tuple_relations(seq, idx) == first)) return false;
    }
  }
  return true;
}

namespace {

int rank_of(const std::vector<FpVector>& vs) { return span(vs).dim(); }

bool all_equal(const std::vector<FpVector>& vs) {
  return std::all_of(vs.begin(), vs.end(), [&](const FpVector& v) { return v == vs.front(); });
}

// One coordinate constant, the other independent over it.
bool constant_and_independent(const std::vector<FpVector>& constant, const std::vector<FpVector>& moving) {
  if (!all_equal(constant)) return false;
  std::vector<FpVector> all = moving;
  all.push_back(constant.front());
  return rank_of(all) == rank_of({constant.front()}) + static_cast<int>(moving.size());
}

}  // namespace

SequenceConfig classify_sequence(const std::vector<VectorPair>& seq, int arity) {
  if (seq.size() < 2) throw Error("sequence needs at least two terms");
  if (seq.size() > static_cast<std::size_t>(kMaxSequenceLength))
    throw CapError("sequence length exceeds " + std::to_string(kMaxSequenceLength));
  if (arity < 1 || arity > kMaxArity)
    throw CapError("arity must be in [1, " + std::to_string(kMaxArity) + "]");
  const int p = seq.front().first.p();
  const int k = seq.front().first.dim();
  std::set<VectorPair> seen;
  for (const auto& pr : seq) {
    for (const auto* v : {&pr.first, &pr.second})
      if (v->p() != p || v->dim() != k) throw MismatchError("sequence vectors differ in shape");
    if (!seen.insert(pr).second) throw Error("sequence pairs must be pairwise distinct");
  }

  if (!linearly_indiscernible(seq, arity)) return SequenceConfig::NotIndiscernible;

  std::vector<FpVector> d1, d2;
  for (const auto& [a, b] : seq) {
    d1.push_back(a);
    d2.push_back(b);
  }
  std::vector<FpVector> joint = d1;
  joint.insert(joint.end(), d2.begin(), d2.end());
  const bool c1 = rank_of(joint) == static_cast<int>(joint.size());
  const bool c2 = constant_and_independent(d1, d2);
  const bool c3 = constant_and_independent(d2, d1);
  if (c1 + c2 + c3 != 1) return SequenceConfig::Inconclusive;
  return c1 ? SequenceConfig::Config1 : c2 ? SequenceConfig::Config2 : SequenceConfig::Config3;
}

}  // namespace indep
