#include "indep/reference.hpp"

namespace indep::reference {

namespace {

template <typename F>
TernaryRelation build(const TernaryRelation& r, std::string name, F&& f) {
  const Site& site = r.site();
  const std::uint32_t count = site.subset_count();
  std::vector<std::uint8_t> table(r.triple_count());
  std::size_t i = 0;
  for (std::uint32_t a = 0; a < count; ++a)
    for (std::uint32_t c = 0; c < count; ++c)
      for (std::uint32_t b = 0; b < count; ++b) table[i++] = f(Subset(a), Subset(c), Subset(b));
  return TernaryRelation::from_table(r.site_ptr(), std::move(table), std::move(name));
}

}  // namespace

TernaryRelation monotonise_M(const TernaryRelation& r) {
  const Site& site = r.site();
  return build(r, "M(" + r.name() + ")", [&](Subset a, Subset c, Subset b) {
    const Subset top = site.closure(b | c);
    for (std::uint32_t d = 0; d < site.subset_count(); ++d)
      if (c.subset_of(Subset(d)) && Subset(d).subset_of(top) && !r.eval(a, Subset(d), b))
        return false;
    return true;
  });
}

TernaryRelation monotonise_m(const TernaryRelation& r) {
  const Site& site = r.site();
  return build(r, "m(" + r.name() + ")", [&](Subset a, Subset c, Subset b) {
    for (std::uint32_t d = 0; d < site.subset_count(); ++d)
      if (c.subset_of(Subset(d)) && Subset(d).subset_of(b | c) && !r.eval(a, Subset(d), b))
        return false;
    return true;
  });
}

TernaryRelation star(const TernaryRelation& r) {
  const Site& site = r.site();
  return build(r, "star(" + r.name() + ")", [&](Subset a, Subset c, Subset b) {
    for (std::uint32_t d = 0; d < site.subset_count(); ++d) {
      if (!b.subset_of(Subset(d))) continue;
      bool found = false;
      for (std::uint32_t a2 = 0; a2 < site.subset_count() && !found; ++a2)
        found = site.equivalent(a, Subset(a2), b | c) && r.eval(Subset(a2), c, Subset(d));
      if (!found) return false;
    }
    return true;
  });
}

TernaryRelation closure_c(const TernaryRelation& r) {
  const Site& site = r.site();
  return build(r, "c(" + r.name() + ")",
               [&](Subset a, Subset c, Subset b) { return r.eval(a, c, site.closure(b | c)); });
}

bool implies(const TernaryRelation& r1, const TernaryRelation& r2) {
  const auto t1 = r1.table();
  const auto t2 = r2.table();
  for (std::size_t i = 0; i < t1.size(); ++i)
    if (t1[i] && !t2[i]) return false;
  return true;
}

}  // namespace indep::reference
