#include "indep/site.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace indep {

std::string to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int x = 0; x < 32; ++x) {
    if (!s.contains(x)) continue;
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

std::string to_string(const Triple& t) {
  return "(" + to_string(t.a) + ", " + to_string(t.c) + ", " + to_string(t.b) + ")";
}

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::span<const int> images) {
  if (images.empty() || images.size() > static_cast<std::size_t>(kMaxGroundSize))
    throw Error("permutation degree must be in 1.." + std::to_string(kMaxGroundSize));
  n_ = static_cast<int>(images.size());
  std::uint32_t seen = 0;
  for (int i = 0; i < n_; ++i) {
    const int y = images[static_cast<std::size_t>(i)];
    if (y < 0 || y >= n_ || ((seen >> y) & 1U))
      throw Error("not a permutation of 0.." + std::to_string(n_ - 1));
    seen |= 1U << y;
    img_[i] = static_cast<std::uint8_t>(y);
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  return Permutation(id);
}

Subset Permutation::apply(Subset s) const {
  std::uint32_t out = 0;
  std::uint32_t bits = s.bits();
  while (bits) {
    const int x = std::countr_zero(bits);
    bits &= bits - 1;
    out |= 1U << img_[x];
  }
  return Subset(out);
}

bool Permutation::fixes_pointwise(Subset s) const {
  for (int x = 0; x < n_; ++x)
    if (s.contains(x) && img_[x] != x) return false;
  return true;
}

bool Permutation::is_identity() const { return fixes_pointwise(Subset::full(n_)); }

Permutation Permutation::compose(const Permutation& other) const {
  Permutation out = *this;
  for (int x = 0; x < n_; ++x) out.img_[x] = img_[other.img_[x]];
  return out;
}

std::uint64_t Permutation::code() const {
  std::uint64_t c = 0;
  for (int x = 0; x < n_; ++x) c |= static_cast<std::uint64_t>(img_[x]) << (4 * (15 - x));
  return c;
}

std::vector<int> Permutation::images() const { return {img_, img_ + n_}; }

std::string Permutation::cycles() const {
  std::string out;
  std::uint32_t done = 0;
  for (int x = 0; x < n_; ++x) {
    if (((done >> x) & 1U) || img_[x] == x) continue;
    out += "(";
    int y = x;
    bool first = true;
    while (!((done >> y) & 1U)) {
      done |= 1U << y;
      if (!first) out += ' ';
      out += std::to_string(y);
      first = false;
      y = img_[y];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

// ------------------------------------------------------------- SymmetryGroup

SymmetryGroup SymmetryGroup::generate(int n, std::vector<Permutation> generators,
                                      std::size_t cap) {
  for (const auto& g : generators)
    if (g.degree() != n) throw MismatchError("generator degree differs from ground size");
  SymmetryGroup group;
  group.n_ = n;
  group.generators_ = std::move(generators);

  const Permutation id = Permutation::identity(n);
  std::unordered_set<std::uint64_t> seen{id.code()};
  std::deque<Permutation> frontier{id};
  group.elements_.push_back(id);
  while (!frontier.empty()) {
    const Permutation cur = frontier.front();
    frontier.pop_front();
    for (const auto& g : group.generators_) {
      Permutation next = g.compose(cur);
      if (!seen.insert(next.code()).second) continue;
      if (seen.size() > cap)
        throw CapError("group order exceeds cap " + std::to_string(cap));
      group.elements_.push_back(next);
      frontier.push_back(next);
    }
  }
  std::sort(group.elements_.begin(), group.elements_.end(),
            [](const Permutation& a, const Permutation& b) { return a.code() < b.code(); });
  return group;
}

SymmetryGroup SymmetryGroup::trivial(int n) { return generate(n, {}); }

// ------------------------------------------------------------ ClosureOperator

namespace {

// meet[a] = intersection of all family members containing a, or no value (all-ones
// sentinel) when none does. Members ⊋ a contain a ∪ {x} for some x ∉ a.
std::vector<std::uint32_t> meet_table(int n, const std::vector<bool>& member) {
  const std::uint32_t count = std::uint32_t{1} << n;
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> meet(count, kNone);
  for (std::uint32_t a = count; a-- > 0;) {
    if (member[a]) {
      meet[a] = a;
      continue;
    }
    std::uint32_t acc = kNone;
    for (int x = 0; x < n; ++x) {
      if ((a >> x) & 1U) continue;
      const std::uint32_t up = meet[a | (1U << x)];
      if (up != kNone) acc = (acc == kNone) ? up : (acc & up);
    }
    meet[a] = acc;
  }
  return meet;
}

void check_ground_size(int n) {
  if (n < 1 || n > kMaxGroundSize)
    throw CapError("ground size must be in 1.." + std::to_string(kMaxGroundSize));
}

}  // namespace

ClosureOperator ClosureOperator::from_family(int n, std::vector<Subset> closed_sets) {
  check_ground_size(n);
  const std::uint32_t count = std::uint32_t{1} << n;
  std::vector<bool> member(count, false);
  for (Subset s : closed_sets) {
    if (s.bits() >= count) throw Error("closed set " + std::to_string(s.bits()) + " out of range");
    member[s.bits()] = true;
  }
  if (!member[count - 1]) throw Error("full set absent from the closed sets");
  const auto meet = meet_table(n, member);
  ClosureOperator cl;
  cl.n_ = n;
  cl.table_.resize(count);
  for (std::uint32_t a = 0; a < count; ++a) {
    if (!member[meet[a]]) throw Error("closed sets are not intersection-closed");
    cl.table_[a] = Subset(meet[a]);
  }
  for (std::uint32_t a = 0; a < count; ++a)
    if (member[a]) cl.closed_.emplace_back(a);
  return cl;
}

ClosureOperator ClosureOperator::from_map(int n, std::span<const Subset> map) {
  check_ground_size(n);
  const std::uint32_t count = std::uint32_t{1} << n;
  if (map.size() != count) throw Error("closure map must list all 2^n subsets");
  for (std::uint32_t a = 0; a < count; ++a) {
    const Subset ca = map[a];
    if (ca.bits() >= count) throw Error("closure map value out of range");
    if (!Subset(a).subset_of(ca)) throw Error("closure map is not extensive at " + to_string(Subset(a)));
    if (map[ca.bits()] != ca) throw Error("closure map is not idempotent at " + to_string(Subset(a)));
    for (int x = 0; x < n; ++x)
      if (!ca.subset_of(map[a | (1U << x)]))
        throw Error("closure map is not monotone at " + to_string(Subset(a)));
  }
  std::vector<Subset> family;
  for (std::uint32_t a = 0; a < count; ++a)
    if (map[a] == Subset(a)) family.emplace_back(a);
  return from_family(n, std::move(family));
}

ClosureOperator ClosureOperator::trivial(int n) {
  check_ground_size(n);
  std::vector<Subset> all;
  for (std::uint32_t a = 0; a < (std::uint32_t{1} << n); ++a) all.emplace_back(a);
  return from_family(n, std::move(all));
}

bool ClosureOperator::has_exchange() const {
  const std::uint32_t count = std::uint32_t{1} << n_;
  for (std::uint32_t a = 0; a < count; ++a) {
    const Subset ca = table_[a];
    for (int x = 0; x < n_; ++x) {
      const Subset cax = closure(Subset(a) | Subset::singleton(x));
      const Subset gained = cax - ca;
      for (int y = 0; y < n_; ++y) {
        if (!gained.contains(y)) continue;
        if (!closure(Subset(a) | Subset::singleton(y)).contains(x)) return false;
      }
    }
  }
  return true;
}

// ----------------------------------------------------------------- validation

ValidationReport validate_site(const SiteSpec& spec) {
  ValidationReport report;
  auto add = [&](std::string kind, std::string msg) {
    report.violations.push_back({std::move(kind), std::move(msg)});
  };
  if (spec.n < 1 || spec.n > kMaxGroundSize) {
    add("ground-size", "n = " + std::to_string(spec.n) + " outside 1.." +
                           std::to_string(kMaxGroundSize));
    return report;
  }
  const int n = spec.n;
  const std::uint32_t count = std::uint32_t{1} << n;

  std::vector<bool> member(count, false);
  for (std::uint32_t s : spec.closed_sets) {
    if (s >= count)
      add("bitmask", "closed set " + std::to_string(s) + " is not a subset of {0.." +
                         std::to_string(n - 1) + "}");
    else
      member[s] = true;
  }
  if (!member[count - 1]) add("full-set", "full set absent");

  const auto meet = meet_table(n, member);
  bool intersection_ok = true;
  for (std::uint32_t a = 0; a < count && intersection_ok; ++a)
    if (meet[a] != ~std::uint32_t{0} && !member[meet[a]]) intersection_ok = false;
  if (!intersection_ok) {
    // Find the first witness pair in canonical order.
    std::vector<std::uint32_t> members;
    for (std::uint32_t a = 0; a < count; ++a)
      if (member[a]) members.push_back(a);
    bool reported = false;
    for (std::size_t i = 0; i < members.size() && !reported; ++i)
      for (std::size_t j = i + 1; j < members.size() && !reported; ++j) {
        const std::uint32_t meet_ij = members[i] & members[j];
        if (!member[meet_ij]) {
          add("intersection", to_string(Subset(members[i])) + " ∩ " + to_string(Subset(members[j])) +
                                  " = " + to_string(Subset(meet_ij)) + " not closed");
          reported = true;
        }
      }
  }

  std::vector<Permutation> gens;
  for (std::size_t g = 0; g < spec.generators.size(); ++g) {
    try {
      if (spec.generators[g].size() != static_cast<std::size_t>(n))
        throw Error("has " + std::to_string(spec.generators[g].size()) + " entries, expected " +
                    std::to_string(n));
      gens.emplace_back(spec.generators[g]);
    } catch (const Error& e) {
      add("generator", "generator " + std::to_string(g) + ": " + e.what());
    }
  }
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (std::uint32_t a = 0; a < count; ++a) {
      if (!member[a]) continue;
      const Subset img = gens[g].apply(Subset(a));
      if (!member[img.bits()]) {
        add("equivariance", "generator " + gens[g].cycles() + ": sigma(" + to_string(Subset(a)) +
                                ") = " + to_string(img) + " not closed");
        break;
      }
    }
  }
  if (gens.size() == spec.generators.size()) {
    try {
      (void)SymmetryGroup::generate(n, gens, spec.group_cap);
    } catch (const CapError& e) {
      add("group-order", e.what());
    }
  }

  if (spec.models) {
    for (std::uint32_t m : *spec.models) {
      if (m >= count)
        add("bitmask", "model " + std::to_string(m) + " is not a subset of the ground set");
      else if (intersection_ok && meet[m] != m)
        add("model", "model " + to_string(Subset(m)) + " is not closed");
    }
  }
  return report;
}

namespace {
std::string summarize(const ValidationReport& r) {
  std::string out = "invalid site";
  for (const auto& v : r.violations) out += "; " + v.message;
  return out;
}
}  // namespace

SiteError::SiteError(ValidationReport report)
    : Error(summarize(report)), report_(std::move(report)) {}

// ----------------------------------------------------------------------- Site

Site::Site(ClosureOperator cl, SymmetryGroup group, std::vector<Subset> models)
    : cl_(std::move(cl)), group_(std::move(group)), models_(std::move(models)) {
  const std::size_t count = subset_count();
  const std::size_t order = group_.order();
  if (count * order <= (std::size_t{1} << 22)) {
    image_table_.resize(count * order);
    for (std::size_t e = 0; e < order; ++e)
      for (std::uint32_t s = 0; s < count; ++s)
        image_table_[e * count + s] = group_.elements()[e].apply(Subset(s));
  }
  if (n() <= 8) {
    stab_.resize(count);
    for (std::uint32_t base = 0; base < count; ++base)
      for (std::uint32_t e = 0; e < order; ++e)
        if (group_.elements()[e].fixes_pointwise(Subset(base))) stab_[base].push_back(e);
  }
}

std::shared_ptr<const Site> Site::build(const SiteSpec& spec) {
  auto report = validate_site(spec);
  if (!report.ok()) throw SiteError(std::move(report));
  std::vector<Subset> family;
  for (auto s : spec.closed_sets) family.emplace_back(s);
  auto cl = ClosureOperator::from_family(spec.n, std::move(family));
  std::vector<Permutation> gens;
  for (const auto& g : spec.generators) gens.emplace_back(g);
  auto group = SymmetryGroup::generate(spec.n, std::move(gens), spec.group_cap);
  std::optional<std::vector<Subset>> models;
  if (spec.models) {
    models.emplace();
    for (auto m : *spec.models) models->emplace_back(m);
  }
  return make(std::move(cl), std::move(group), std::move(models));
}

std::shared_ptr<const Site> Site::make(ClosureOperator cl, SymmetryGroup group,
                                       std::optional<std::vector<Subset>> models) {
  ValidationReport report;
  if (group.degree() != cl.ground_size())
    report.violations.push_back({"generator", "group degree differs from ground size"});
  else
    for (const auto& g : group.generators())
      for (Subset s : cl.closed_sets())
        if (!cl.is_closed(g.apply(s))) {
          report.violations.push_back(
              {"equivariance", "generator " + g.cycles() + ": sigma(" + to_string(s) + ") = " +
                                   to_string(g.apply(s)) + " not closed"});
          break;
        }
  std::vector<Subset> ms = models ? std::move(*models) : cl.closed_sets();
  for (Subset m : ms)
    if (m.bits() >= (std::uint32_t{1} << cl.ground_size()) || !cl.is_closed(m))
      report.violations.push_back({"model", "model " + to_string(m) + " is not closed"});
  if (!report.ok()) throw SiteError(std::move(report));
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  return std::shared_ptr<const Site>(new Site(std::move(cl), std::move(group), std::move(ms)));
}

Subset Site::image(std::size_t element, Subset s) const {
  if (!image_table_.empty()) return image_table_[element * subset_count() + s.bits()];
  return group_.elements()[element].apply(s);
}

std::vector<std::uint32_t> Site::stabilizer(Subset base) const {
  if (!stab_.empty()) return stab_[base.bits()];
  std::vector<std::uint32_t> out;
  for (std::uint32_t e = 0; e < group_.order(); ++e)
    if (group_.elements()[e].fixes_pointwise(base)) out.push_back(e);
  return out;
}

std::vector<Subset> Site::orbit(Subset a, Subset base) const {
  std::vector<Subset> out;
  auto collect = [&](const std::vector<std::uint32_t>& stab) {
    out.reserve(stab.size());
    for (auto e : stab) out.push_back(image(e, a));
  };
  if (!stab_.empty())
    collect(stab_[base.bits()]);
  else
    collect(stabilizer(base));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Site::equivalent(Subset a, Subset a2, Subset base) const {
  if (a.size() != a2.size()) return false;
  if (a == a2) return true;
  auto test = [&](const std::vector<std::uint32_t>& stab) {
    return std::any_of(stab.begin(), stab.end(), [&](auto e) { return image(e, a) == a2; });
  };
  if (!stab_.empty()) return test(stab_[base.bits()]);
  return test(stabilizer(base));
}

SiteSpec Site::to_spec() const {
  SiteSpec spec;
  spec.n = n();
  for (Subset s : cl_.closed_sets()) spec.closed_sets.push_back(s.bits());
  for (const auto& g : group_.generators()) spec.generators.push_back(g.images());
  std::vector<std::uint32_t> ms;
  for (Subset m : models_) ms.push_back(m.bits());
  spec.models = std::move(ms);
  return spec;
}

bool operator==(const Site& a, const Site& b) {
  if (&a == &b) return true;
  if (!(a.cl_ == b.cl_) || a.models_ != b.models_) return false;
  const auto& ea = a.group_.elements();
  const auto& eb = b.group_.elements();
  return ea.size() == eb.size() && std::equal(ea.begin(), ea.end(), eb.begin());
}

SymmetryGroup closure_automorphisms(const ClosureOperator& cl, std::size_t cap) {
  const int n = cl.ground_size();
  if (n > 8) throw CapError("closure automorphism search requires n <= 8");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  // Greedy generating set: keep an automorphism only if the group so far misses it.
  std::vector<Permutation> gens;
  std::unordered_set<std::uint64_t> reached{Permutation::identity(n).code()};
  do {
    Permutation p(perm);
    if (reached.count(p.code())) continue;
    bool ok = std::all_of(cl.closed_sets().begin(), cl.closed_sets().end(),
                          [&](Subset s) { return cl.is_closed(p.apply(s)); });
    if (!ok) continue;
    gens.push_back(p);
    const SymmetryGroup so_far = SymmetryGroup::generate(n, gens, cap);
    for (const auto& e : so_far.elements()) reached.insert(e.code());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return SymmetryGroup::generate(n, std::move(gens), cap);
}

}  // namespace indep
