#include "indep/relation.hpp"

#include <array>
#include <mutex>
#include <unordered_map>

#include "indep/rng.hpp"

namespace indep {

struct TernaryRelation::Lazy {
  static constexpr std::size_t kShards = 64;
  Predicate pred;
  struct Shard {
    std::mutex mu;
    std::unordered_map<std::uint64_t, bool> memo;
  };
  std::array<Shard, kShards> shards;
};

TernaryRelation TernaryRelation::from_table(SitePtr site, std::vector<std::uint8_t> table,
                                            std::string name) {
  if (site->n() > kMaxExtensionalSize)
    throw CapError("extensional relations require n <= " + std::to_string(kMaxExtensionalSize));
  const std::uint64_t expected = std::uint64_t{1} << (3 * site->n());
  if (table.size() != expected)
    throw MismatchError("relation table has " + std::to_string(table.size()) +
                        " entries, expected " + std::to_string(expected));
  TernaryRelation r;
  r.site_ = std::move(site);
  r.name_ = std::move(name);
  r.table_ = std::make_shared<const std::vector<std::uint8_t>>(std::move(table));
  return r;
}

TernaryRelation TernaryRelation::from_predicate(SitePtr site, Predicate pred, std::string name,
                                                Exec exec) {
  if (site->n() <= kMaxExtensionalSize) {
    const int n = site->n();
    const std::uint32_t mask = site->subset_count() - 1;
    auto table = tabulate(
        std::uint64_t{1} << (3 * n),
        [&](std::uint64_t i) {
          return pred(Subset(static_cast<std::uint32_t>(i >> (2 * n))),
                      Subset(static_cast<std::uint32_t>(i >> n) & mask),
                      Subset(static_cast<std::uint32_t>(i) & mask));
        },
        exec);
    return from_table(std::move(site), std::move(table), std::move(name));
  }
  TernaryRelation r;
  r.site_ = std::move(site);
  r.name_ = std::move(name);
  r.lazy_ = std::make_shared<Lazy>();
  r.lazy_->pred = std::move(pred);
  return r;
}

TernaryRelation TernaryRelation::renamed(std::string name) const {
  TernaryRelation r = *this;
  r.name_ = std::move(name);
  return r;
}

std::span<const std::uint8_t> TernaryRelation::table() const {
  if (!table_) throw Error("relation '" + name_ + "' is not extensional");
  return *table_;
}

Triple TernaryRelation::triple_at(std::uint64_t index) const {
  const int n = site_->n();
  const std::uint32_t mask = site_->subset_count() - 1;
  return {Subset(static_cast<std::uint32_t>(index >> (2 * n))),
          Subset(static_cast<std::uint32_t>(index >> n) & mask),
          Subset(static_cast<std::uint32_t>(index) & mask)};
}

bool TernaryRelation::eval(Subset a, Subset c, Subset b) const {
  if (!site_->is_valid(a) || !site_->is_valid(c) || !site_->is_valid(b))
    throw MismatchError("subset outside the relation's site (n = " + std::to_string(site_->n()) +
                        ")");
  return (*this)(a, c, b);
}

bool TernaryRelation::lazy_eval(Subset a, Subset c, Subset b) const {
  const std::uint64_t key = index(a, c, b);
  auto& shard = lazy_->shards[mix64(key) % Lazy::kShards];
  {
    std::lock_guard lock(shard.mu);
    if (auto it = shard.memo.find(key); it != shard.memo.end()) return it->second;
  }
  // Evaluate outside the lock: the predicate may recurse into other relations.
  const bool value = lazy_->pred(a, c, b);
  std::lock_guard lock(shard.mu);
  shard.memo.emplace(key, value);
  return value;
}

void require_same_site(const TernaryRelation& r1, const TernaryRelation& r2) {
  if (!(r1.site() == r2.site()))
    throw MismatchError("relations '" + r1.name() + "' and '" + r2.name() +
                        "' live on different sites");
}

TernaryRelation builtin_full(SitePtr site) {
  return TernaryRelation::from_predicate(std::move(site), [](Subset, Subset, Subset) { return true; },
                                         "full");
}

TernaryRelation builtin_empty(SitePtr site) {
  return TernaryRelation::from_predicate(std::move(site),
                                         [](Subset, Subset, Subset) { return false; }, "empty");
}

TernaryRelation builtin_a_indep(SitePtr site) {
  const Site* s = site.get();
  return TernaryRelation::from_predicate(
      std::move(site),
      [s](Subset a, Subset c, Subset b) {
        return (s->closure(a | c) & s->closure(b | c)) == s->closure(c);
      },
      "a-indep");
}

TernaryRelation builtin_from_predicate(SitePtr site, TernaryRelation::Predicate pred,
                                       std::string name) {
  return TernaryRelation::from_predicate(std::move(site), std::move(pred), std::move(name));
}

TernaryRelation conjunction(const TernaryRelation& r1, const TernaryRelation& r2) {
  require_same_site(r1, r2);
  return TernaryRelation::from_predicate(
      r1.site_ptr(), [r1, r2](Subset a, Subset c, Subset b) { return r1(a, c, b) && r2(a, c, b); },
      r1.name() + " & " + r2.name());
}

TernaryRelation monotone_normal_core(const TernaryRelation& r) {
  return TernaryRelation::from_predicate(
      r.site_ptr(),
      [r](Subset a, Subset c, Subset b) {
        return all_between(Subset(), a | c, [&](Subset a2) {
          return all_between(Subset(), b | c, [&](Subset b2) { return r(a2, c, b2); });
        });
      },
      "core(" + r.name() + ")");
}

Verdict is_invariant(const TernaryRelation& r) {
  const Site& site = r.site();
  const auto& elements = site.group().elements();
  const std::uint64_t total = r.triple_count();
  auto violating_element = [&](std::uint64_t i) -> std::size_t {
    const Triple t = r.triple_at(i);
    const bool v = r(t);
    for (std::size_t e = 1; e < elements.size(); ++e)
      if (r(site.image(e, t.a), site.image(e, t.c), site.image(e, t.b)) != v) return e;
    return 0;
  };
  const std::uint64_t first =
      find_first(total, [&](std::uint64_t i) { return violating_element(i) != 0; }, Exec::Parallel);
  if (first == total) return Verdict::pass();
  const Triple t = r.triple_at(first);
  const std::size_t e = violating_element(first);
  const Triple img{site.image(e, t.a), site.image(e, t.c), site.image(e, t.b)};
  const bool v = r(t);
  Witness w;
  w.vars = {{"A", t.a}, {"C", t.c}, {"B", t.b}};
  w.sigma = elements[e];
  w.triples = {{t, v}, {img, !v}};
  return Verdict::fail(std::move(w));
}

Verdict implies(const TernaryRelation& r1, const TernaryRelation& r2) {
  require_same_site(r1, r2);
  const std::uint64_t total = r1.triple_count();
  const std::uint64_t first = find_first(
      total,
      [&](std::uint64_t i) {
        const Triple t = r1.triple_at(i);
        return r1(t) && !r2(t);
      },
      Exec::Parallel);
  if (first == total) return Verdict::pass();
  const Triple t = r1.triple_at(first);
  Witness w;
  w.vars = {{"A", t.a}, {"C", t.c}, {"B", t.b}};
  w.triples = {{t, true, 0}, {t, false, 1}};
  return Verdict::fail(std::move(w), r1.name() + " does not imply " + r2.name());
}

Verdict equals(const TernaryRelation& r1, const TernaryRelation& r2) {
  if (auto v = implies(r1, r2); !v.holds) return v;
  auto v = implies(r2, r1);
  if (!v.holds) {
    // Re-label so relation 0 is always r1.
    for (auto& f : v.witness->triples) f.relation = 1 - f.relation;
  }
  return v;
}

TernaryRelation random_invariant_relation(SitePtr site, std::uint64_t seed, double density) {
  if (!(density >= 0.0 && density <= 1.0)) throw Error("density must lie in [0, 1]");
  const Site* s = site.get();
  const std::size_t order = s->group().order();
  const int n = s->n();
  return TernaryRelation::from_predicate(
      std::move(site),
      [s, order, n, seed, density](Subset a, Subset c, Subset b) {
        auto key = [n](Subset x, Subset y, Subset z) {
          return (std::uint64_t{x.bits()} << (2 * n)) | (std::uint64_t{y.bits()} << n) | z.bits();
        };
        std::uint64_t rep = key(a, c, b);
        for (std::size_t e = 1; e < order; ++e)
          rep = std::min(rep, key(s->image(e, a), s->image(e, c), s->image(e, b)));
        const double u = static_cast<double>(derive_seed(seed, {rep}) >> 11) * 0x1.0p-53;
        return u < density;
      },
      "random(seed=" + std::to_string(seed) + ",density=" + [&] {
        std::string d = std::to_string(density);
        while (d.size() > 1 && d.back() == '0') d.pop_back();
        if (d.back() == '.') d.pop_back();
        return d;
      }() + ")");
}

// -------------------------------------------------------------------- witness

std::string Witness::describe() const {
  std::string out;
  for (const auto& [name, s] : vars) {
    if (!out.empty()) out += ' ';
    out += name + "=" + to_string(s);
  }
  if (sigma) out += (out.empty() ? "" : " ") + std::string("sigma=") + sigma->cycles();
  return out;
}

bool replay(const Witness& w, const TernaryRelation& r, const TernaryRelation* second) {
  const Site& site = r.site();
  for (const auto& f : w.triples) {
    const TernaryRelation* target = f.relation == 0 ? &r : second;
    if (target == nullptr) return false;
    if (target->eval(f.triple.a, f.triple.c, f.triple.b) != f.expected) return false;
  }
  for (const auto& f : w.equivs)
    if (site.equivalent(f.a, f.a2, f.base) != f.expected) return false;
  for (const auto& f : w.closures)
    if (site.closure(f.set).contains(f.element) != f.expected) return false;
  for (const auto& f : w.orbits)
    if (site.orbit(f.a, f.base) != f.members) return false;
  if (w.sigma) {
    const auto& els = site.group().elements();
    if (std::find(els.begin(), els.end(), *w.sigma) == els.end()) return false;
  }
  return true;
}

}  // namespace indep
