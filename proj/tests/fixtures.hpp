#pragma once

#include <vector>

#include "indep/relation.hpp"
#include "indep/site.hpp"

namespace fixtures {

using namespace indep;

inline Subset S(std::initializer_list<int> xs) {
  Subset s;
  for (int x : xs) s = s | Subset::singleton(x);
  return s;
}

inline SitePtr site(int n, std::vector<std::uint32_t> closed, std::vector<std::vector<int>> gens = {}) {
  SiteSpec spec;
  spec.n = n;
  spec.closed_sets = std::move(closed);
  spec.generators = std::move(gens);
  return Site::build(spec);
}

// n=3, every subset closed, trivial group.
inline SitePtr s0() { return site(3, {0, 1, 2, 3, 4, 5, 6, 7}); }
// n=3, closed sets ∅, {0,1}, {2}, X.
inline SitePtr s1() { return site(3, {0, 3, 4, 7}); }
inline SitePtr s1_swap() { return site(3, {0, 3, 4, 7}, {{1, 0, 2}}); }

inline TernaryRelation pred(SitePtr s, TernaryRelation::Predicate p, const char* name) {
  return builtin_from_predicate(std::move(s), std::move(p), name);
}

inline TernaryRelation c_even(SitePtr s) {
  return pred(std::move(s), [](Subset, Subset c, Subset) { return c.size() % 2 == 0; }, "|C| even");
}

// Every (A, C, B) of a site, in canonical order.
template <class F>
void for_each_triple(const Site& s, F&& f) {
  const std::uint32_t m = s.subset_count();
  for (std::uint32_t a = 0; a < m; ++a)
    for (std::uint32_t c = 0; c < m; ++c)
      for (std::uint32_t b = 0; b < m; ++b) f(Subset(a), Subset(c), Subset(b));
}

}  // namespace fixtures
