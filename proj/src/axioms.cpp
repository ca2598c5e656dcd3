#include "indep/axioms.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>

namespace indep {

namespace {

constexpr std::array<std::string_view, 17> kNames = {
    "FIN", "EX",    "SYM",  "LOC",    "NOR", "MON", "BMON",   "TRA", "AREF",
    "CLO_B", "CLO_BC", "SCLO", "STRFIN", "EXT", "FEX", "INDTHM", "STAT"};

// The relation as seen by a right-sided check; transposed for left-sided ones.
struct View {
  const TernaryRelation& r;
  bool transposed = false;
  bool operator()(Subset a, Subset c, Subset b) const {
    return transposed ? r(b, c, a) : r(a, c, b);
  }
};

using MaybeWitness = std::optional<Witness>;

Witness make(std::initializer_list<std::pair<std::string, Subset>> vars,
             std::initializer_list<TripleFact> triples) {
  Witness w;
  w.vars = vars;
  w.triples = triples;
  return w;
}

// Least violation over the outermost variable, then whatever order `per` scans in.
template <typename Per>
Verdict scan(std::uint64_t outer_count, Per&& per, Exec exec, std::string note = {}) {
  const std::uint64_t first =
      find_first(outer_count, [&](std::uint64_t o) { return per(o).has_value(); }, exec);
  if (first == outer_count) return Verdict::pass(std::move(note));
  return Verdict::fail(*per(first), std::move(note));
}

// Maps a witness found on the transposed view back to the relation's own coordinates.
Witness untranspose(Witness w) {
  for (auto& f : w.triples) std::swap(f.triple.a, f.triple.b);
  for (auto& [name, s] : w.vars) {
    if (name == "A")
      name = "B";
    else if (name == "B")
      name = "A";
  }
  std::stable_sort(w.vars.begin(), w.vars.end(), [](const auto& x, const auto& y) {
    auto rank = [](const std::string& n) { return n == "A" ? 0 : n == "C" ? 1 : n == "B" ? 2 : 3; };
    return rank(x.first) < rank(y.first);
  });
  return w;
}

// ------------------------------------------------------------ right-sided checks

Verdict check_nor(const View& r, const Site& site, Exec exec) {
  const std::uint32_t count = site.subset_count();
  return scan(count, [&](std::uint64_t ai) -> MaybeWitness {
    const Subset a(static_cast<std::uint32_t>(ai));
    for (std::uint32_t c = 0; c < count; ++c)
      for (std::uint32_t b = 0; b < count; ++b) {
        const Subset C(c), B(b);
        if (r(a, C, B) && !r(a, C, B | C))
          return make({{"A", a}, {"C", C}, {"B", B}}, {{{a, C, B}, true}, {{a, C, B | C}, false}});
      }
    return std::nullopt;
  }, exec);
}

Verdict check_mon(const View& r, const Site& site, Exec exec) {
  const std::uint32_t count = site.subset_count();
  const Subset full = site.full();
  return scan(count, [&](std::uint64_t ai) -> MaybeWitness {
    const Subset a(static_cast<std::uint32_t>(ai));
    for (std::uint32_t c = 0; c < count; ++c)
      for (std::uint32_t b = 0; b < count; ++b) {
        const Subset C(c), B(b);
        if (r(a, C, B)) continue;
        MaybeWitness hit;
        all_between(B, full, [&](Subset d) {
          if (!r(a, C, d)) return true;
          hit = make({{"A", a}, {"C", C}, {"B", B}, {"D", d}},
                     {{{a, C, d}, true}, {{a, C, B}, false}});
          return false;
        });
        if (hit) return hit;
      }
    return std::nullopt;
  }, exec);
}

Verdict check_bmon(const View& r, const Site& site, Exec exec) {
  const std::uint32_t count = site.subset_count();
  const Subset full = site.full();
  return scan(count, [&](std::uint64_t ai) -> MaybeWitness {
    const Subset a(static_cast<std::uint32_t>(ai));
    MaybeWitness hit;
    for (std::uint32_t c = 0; c < count && !hit; ++c) {
      const Subset C(c);
      all_between(C, full, [&](Subset b) {
        return all_between(b, full, [&](Subset d) {
          if (!r(a, C, d) || r(a, b, d)) return true;
          hit = make({{"A", a}, {"C", C}, {"B", b}, {"D", d}},
                     {{{a, C, d}, true}, {{a, b, d}, false}});
          return false;
        });
      });
    }
    return hit;
  }, exec);
}

Verdict check_tra(const View& r, const Site& site, Exec exec) {
  const std::uint32_t count = site.subset_count();
  const Subset full = site.full();
  return scan(count, [&](std::uint64_t ai) -> MaybeWitness {
    const Subset a(static_cast<std::uint32_t>(ai));
    MaybeWitness hit;
    for (std::uint32_t c = 0; c < count && !hit; ++c) {
      const Subset C(c);
      all_between(C, full, [&](Subset b) {
        if (!r(a, C, b)) return true;
        return all_between(b, full, [&](Subset d) {
          if (!r(a, b, d) || r(a, C, d)) return true;
          hit = make({{"A", a}, {"C", C}, {"B", b}, {"D", d}},
                     {{{a, C, b}, true}, {{a, b, d}, true}, {{a, C, d}, false}});
          return false;
        });
      });
    }
    return hit;
  }, exec);
}

// right CLO; with_base selects cl(B∪C) over cl(B).
Verdict check_clo(const View& r, const Site& site, bool with_base, Exec exec) {
  const std::uint32_t count = site.subset_count();
  return scan(count, [&](std::uint64_t ai) -> MaybeWitness {
    const Subset a(static_cast<std::uint32_t>(ai));
    for (std::uint32_t c = 0; c < count; ++c)
      for (std::uint32_t b = 0; b < count; ++b) {
        const Subset C(c), B(b);
        const Subset closed = site.closure(with_base ? (B | C) : B);
        if (r(a, C, B) && !r(a, C, closed))
          return make({{"A", a}, {"C", C}, {"B", B}}, {{{a, C, B}, true}, {{a, C, closed}, false}});
      }
    return std::nullopt;
  }, exec);
}

// ------------------------------------------------------------ unsided checks

Verdict check_ex(const TernaryRelation& r, Exec exec) {
  const std::uint32_t count = r.site().subset_count();
  return scan(count, [&](std::uint64_t ai) -> MaybeWitness {
    const Subset a(static_cast<std::uint32_t>(ai));
    for (std::uint32_t c = 0; c < count; ++c)
      if (!r(a, Subset(c), Subset(c)))
        return make({{"A", a}, {"C", Subset(c)}}, {{{a, Subset(c), Subset(c)}, false}});
    return std::nullopt;
  }, exec);
}

Verdict check_sym(const TernaryRelation& r, Exec exec) {
  const std::uint32_t count = r.site().subset_count();
  return scan(count, [&](std::uint64_t ai) -> MaybeWitness {
    const Subset a(static_cast<std::uint32_t>(ai));
    for (std::uint32_t c = 0; c < count; ++c)
      for (std::uint32_t b = 0; b < count; ++b) {
        const Subset C(c), B(b);
        const bool v = r(a, C, B);
        if (v != r(B, C, a))
          return make({{"A", a}, {"C", C}, {"B", B}}, {{{a, C, B}, v}, {{B, C, a}, !v}});
      }
    return std::nullopt;
  }, exec);
}

Verdict check_aref(const TernaryRelation& r, Exec exec) {
  const Site& site = r.site();
  const std::uint32_t count = site.subset_count();
  return scan(static_cast<std::uint64_t>(site.n()), [&](std::uint64_t xi) -> MaybeWitness {
    const int x = static_cast<int>(xi);
    const Subset sx = Subset::singleton(x);
    for (std::uint32_t c = 0; c < count; ++c) {
      const Subset C(c);
      if (r(sx, C, sx) && !site.closure(C).contains(x)) {
        Witness w = make({{"A", sx}, {"C", C}}, {{{sx, C, sx}, true}});
        w.closures.push_back({x, C, false});
        return w;
      }
    }
    return std::nullopt;
  }, exec);
}

Verdict check_sclo(const TernaryRelation& r, Exec exec) {
  const Site& site = r.site();
  const std::uint32_t count = site.subset_count();
  return scan(count, [&](std::uint64_t ai) -> MaybeWitness {
    const Subset a(static_cast<std::uint32_t>(ai));
    for (std::uint32_t c = 0; c < count; ++c)
      for (std::uint32_t b = 0; b < count; ++b) {
        const Subset C(c), B(b);
        const Triple t{a, C, B};
        const Triple closed{site.closure(a | C), site.closure(C), site.closure(B | C)};
        const bool v = r(t);
        if (v != r(closed)) return make({{"A", a}, {"C", C}, {"B", B}}, {{t, v}, {closed, !v}});
      }
    return std::nullopt;
  }, exec);
}

Verdict check_strfin(const TernaryRelation& r, Exec exec, std::string note) {
  const Site& site = r.site();
  const std::uint32_t count = site.subset_count();
  return scan(count, [&](std::uint64_t ai) -> MaybeWitness {
    const Subset a(static_cast<std::uint32_t>(ai));
    for (std::uint32_t c = 0; c < count; ++c)
      for (std::uint32_t b = 0; b < count; ++b) {
        const Subset C(c), B(b);
        if (r(a, C, B)) continue;
        for (Subset a2 : site.orbit(a, B | C)) {
          if (!r(a2, C, B)) continue;
          Witness w = make({{"A", a}, {"C", C}, {"B", B}, {"A'", a2}},
                           {{{a, C, B}, false}, {{a2, C, B}, true}});
          w.equivs.push_back({a, a2, B | C, true});
          return w;
        }
      }
    return std::nullopt;
  }, exec, std::move(note));
}

Verdict check_ext(const TernaryRelation& r, Exec exec, std::string note) {
  const Site& site = r.site();
  const std::uint32_t count = site.subset_count();
  const Subset full = site.full();
  return scan(count, [&](std::uint64_t ai) -> MaybeWitness {
    const Subset a(static_cast<std::uint32_t>(ai));
    for (std::uint32_t c = 0; c < count; ++c)
      for (std::uint32_t b = 0; b < count; ++b) {
        const Subset C(c), B(b);
        if (!r(a, C, B)) continue;
        const auto candidates = site.orbit(a, B | C);
        MaybeWitness hit;
        all_between(B, full, [&](Subset d) {
          if (std::any_of(candidates.begin(), candidates.end(),
                          [&](Subset a2) { return r(a2, C, d); }))
            return true;
          Witness w = make({{"A", a}, {"C", C}, {"B", B}, {"D", d}}, {{{a, C, B}, true}});
          for (Subset a2 : candidates) w.triples.push_back({{a2, C, d}, false});
          w.orbits.push_back({a, B | C, candidates});
          hit = std::move(w);
          return false;
        });
        if (hit) return hit;
      }
    return std::nullopt;
  }, exec, std::move(note));
}

Verdict check_fex(const TernaryRelation& r, Exec exec, std::string note) {
  const Site& site = r.site();
  const std::uint32_t count = site.subset_count();
  return scan(count, [&](std::uint64_t ai) -> MaybeWitness {
    const Subset a(static_cast<std::uint32_t>(ai));
    for (std::uint32_t c = 0; c < count; ++c) {
      const Subset C(c);
      const auto candidates = site.orbit(a, C);
      for (std::uint32_t b = 0; b < count; ++b) {
        const Subset B(b);
        if (std::any_of(candidates.begin(), candidates.end(),
                        [&](Subset a2) { return r(a2, C, B); }))
          continue;
        Witness w = make({{"A", a}, {"C", C}, {"B", B}}, {});
        for (Subset a2 : candidates) w.triples.push_back({{a2, C, B}, false});
        w.orbits.push_back({a, C, candidates});
        return w;
      }
    }
    return std::nullopt;
  }, exec, std::move(note));
}

Verdict check_indthm(const TernaryRelation& r, Exec exec, std::string note) {
  const Site& site = r.site();
  const std::uint32_t count = site.subset_count();
  const auto& models = site.models();
  return scan(models.size() * count, [&](std::uint64_t outer) -> MaybeWitness {
    const Subset m = models[outer / count];
    const Subset a(static_cast<std::uint32_t>(outer % count));
    for (std::uint32_t b = 0; b < count; ++b) {
      const Subset B(b);
      if (!r(a, m, B)) continue;
      for (std::uint32_t c1 = 0; c1 < count; ++c1) {
        const Subset C1(c1);
        if (!r(C1, m, a)) continue;
        const auto candidates = site.orbit(C1, m | a);
        for (std::uint32_t c2 = 0; c2 < count; ++c2) {
          const Subset C2(c2);
          if (!r(C2, m, B) || !site.equivalent(C1, C2, m)) continue;
          const bool amalgam = std::any_of(candidates.begin(), candidates.end(), [&](Subset cc) {
            return site.equivalent(cc, C2, m | B) && r(cc, m, a | B);
          });
          if (amalgam) continue;
          Witness w = make({{"M", m}, {"A", a}, {"B", B}, {"C1", C1}, {"C2", C2}},
                           {{{a, m, B}, true}, {{C1, m, a}, true}, {{C2, m, B}, true}});
          w.equivs.push_back({C1, C2, m, true});
          w.orbits.push_back({C1, m | a, candidates});
          for (Subset cc : candidates) {
            if (!site.equivalent(cc, C2, m | B))
              w.equivs.push_back({cc, C2, m | B, false});
            else
              w.triples.push_back({{cc, m, a | B}, false});
          }
          return w;
        }
      }
    }
    return std::nullopt;
  }, exec, std::move(note));
}

Verdict check_stat(const TernaryRelation& r, Exec exec, std::string note) {
  const Site& site = r.site();
  const std::uint32_t count = site.subset_count();
  const auto& models = site.models();
  return scan(models.size() * count, [&](std::uint64_t outer) -> MaybeWitness {
    const Subset m = models[outer / count];
    const Subset a(static_cast<std::uint32_t>(outer % count));
    for (std::uint32_t c1 = 0; c1 < count; ++c1) {
      const Subset C1(c1);
      if (!r(C1, m, a)) continue;
      for (std::uint32_t c2 = 0; c2 < count; ++c2) {
        const Subset C2(c2);
        if (!r(C2, m, a) || !site.equivalent(C1, C2, m) || site.equivalent(C1, C2, m | a))
          continue;
        Witness w = make({{"M", m}, {"A", a}, {"C1", C1}, {"C2", C2}},
                         {{{C1, m, a}, true}, {{C2, m, a}, true}});
        w.equivs.push_back({C1, C2, m, true});
        w.equivs.push_back({C1, C2, m | a, false});
        return w;
      }
    }
    return std::nullopt;
  }, exec, std::move(note));
}

Verdict sided(const TernaryRelation& r, Side side, auto&& check) {
  const View view{r, side == Side::Left};
  Verdict v = check(view);
  if (!v.holds && side == Side::Left) v.witness = untranspose(std::move(*v.witness));
  return v;
}

}  // namespace

bool is_sided(Axiom a) {
  return a == Axiom::NOR || a == Axiom::MON || a == Axiom::TRA || a == Axiom::CLO_B ||
         a == Axiom::CLO_BC;
}

std::string_view axiom_name(Axiom a) { return kNames[static_cast<std::size_t>(a)]; }

AxiomId::AxiomId(Axiom axiom, Side side) : axiom_(axiom), side_(side) {
  if (is_sided(axiom) == (side == Side::None))
    throw Error(std::string(axiom_name(axiom)) +
                (is_sided(axiom) ? " requires a side" : " takes no side"));
}

AxiomId AxiomId::parse(std::string_view text) {
  Side side = Side::None;
  if (text.starts_with("right ")) {
    side = Side::Right;
    text.remove_prefix(6);
  } else if (text.starts_with("left ")) {
    side = Side::Left;
    text.remove_prefix(5);
  }
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == text) return AxiomId(static_cast<Axiom>(i), side);
  throw Error("unknown axiom '" + std::string(text) + "'");
}

std::string AxiomId::to_string() const {
  const std::string base(axiom_name(axiom_));
  switch (side_) {
    case Side::Left: return "left " + base;
    case Side::Right: return "right " + base;
    case Side::None: break;
  }
  return base;
}

Verdict check_axiom(const TernaryRelation& r, AxiomId ax, Exec exec) {
  const Site& site = r.site();
  auto invariance_note = [&] {
    return is_invariant(r).holds ? std::string{} : std::string("warning: relation is not invariant");
  };
  switch (ax.axiom()) {
    case Axiom::FIN:
    case Axiom::LOC: return Verdict::pass("vacuous");
    case Axiom::EX: return check_ex(r, exec);
    case Axiom::SYM: return check_sym(r, exec);
    case Axiom::NOR: return sided(r, ax.side(), [&](const View& v) { return check_nor(v, site, exec); });
    case Axiom::MON: return sided(r, ax.side(), [&](const View& v) { return check_mon(v, site, exec); });
    case Axiom::BMON: return sided(r, Side::Right, [&](const View& v) { return check_bmon(v, site, exec); });
    case Axiom::TRA: return sided(r, ax.side(), [&](const View& v) { return check_tra(v, site, exec); });
    case Axiom::AREF: return check_aref(r, exec);
    case Axiom::CLO_B:
      return sided(r, ax.side(), [&](const View& v) { return check_clo(v, site, false, exec); });
    case Axiom::CLO_BC:
      return sided(r, ax.side(), [&](const View& v) { return check_clo(v, site, true, exec); });
    case Axiom::SCLO: return check_sclo(r, exec);
    case Axiom::STRFIN: return check_strfin(r, exec, invariance_note());
    case Axiom::EXT: return check_ext(r, exec, invariance_note());
    case Axiom::FEX: return check_fex(r, exec, invariance_note());
    case Axiom::INDTHM:
      return check_indthm(r, exec, site.models().empty() ? "vacuous (no models)" : invariance_note());
    case Axiom::STAT:
      return check_stat(r, exec, site.models().empty() ? "vacuous (no models)" : invariance_note());
  }
  throw Error("unknown axiom");
}

const std::vector<AxiomId>& profile_order() {
  static const std::vector<AxiomId> order = [] {
    std::vector<AxiomId> out;
    for (std::size_t i = 0; i < kNames.size(); ++i) {
      const auto a = static_cast<Axiom>(i);
      if (is_sided(a)) {
        out.emplace_back(a, Side::Left);
        out.emplace_back(a, Side::Right);
      } else {
        out.emplace_back(a);
      }
    }
    return out;
  }();
  return order;
}

const Verdict& AxiomProfile::at(AxiomId id) const {
  for (const auto& [k, v] : rows)
    if (k == id) return v;
  throw Error("axiom " + id.to_string() + " not in profile");
}

std::string AxiomProfile::table() const {
  std::ostringstream out;
  out << "relation: " << relation << "\n";
  out << "axiom   side   holds  witness\n";
  for (const auto& [id, v] : rows) {
    std::string name(axiom_name(id.axiom()));
    std::string side = id.side() == Side::Left ? "left" : id.side() == Side::Right ? "right" : "-";
    if (id.axiom() == Axiom::BMON) side = "right";
    name.resize(std::max<std::size_t>(name.size(), 7), ' ');
    side.resize(6, ' ');
    out << name << ' ' << side << ' ' << (v.holds ? "yes  " : "no   ") << "  ";
    if (v.witness) out << v.witness->describe();
    if (!v.note.empty()) out << (v.witness ? "  " : "") << "[" << v.note << "]";
    out << "\n";
  }
  return out.str();
}

AxiomProfile axiom_profile(const TernaryRelation& r, Exec exec) {
  AxiomProfile p;
  p.relation = r.name();
  for (const auto& id : profile_order()) p.rows.emplace_back(id, check_axiom(r, id, exec));
  return p;
}

}  // namespace indep
