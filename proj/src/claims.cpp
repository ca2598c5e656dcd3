#include "indep/claims.hpp"

#include <map>

namespace indep {

namespace {

OperatorExpr ex(std::string_view s) { return OperatorExpr::parse(s); }

Conclusion satisfies(std::string_view expr, AxiomId ax) {
  return {Conclusion::Kind::Satisfies, ex(expr), {}, ax};
}
Conclusion invariant_of(std::string_view expr) {
  return {Conclusion::Kind::Invariant, ex(expr), {}, std::nullopt};
}
Conclusion implies_c(std::string_view lhs, std::string_view rhs) {
  return {Conclusion::Kind::Implies, ex(lhs), ex(rhs), std::nullopt};
}
Conclusion equals_c(std::string_view lhs, std::string_view rhs) {
  return {Conclusion::Kind::Equals, ex(lhs), ex(rhs), std::nullopt};
}

Requirement req(Axiom a, Side s = Side::None) { return Requirement::of(AxiomId(a, s)); }

std::vector<Claim> build_registry() {
  const AxiomId bmon(Axiom::BMON);
  std::vector<Claim> out;

  out.push_back({"C1", "m-bmon", "m(R) satisfies right BMON", Provenance::Formal,
                 ClaimSubject::Input, {}, {{{}, satisfies("m(R)", bmon), {}}}});

  out.push_back({"C2", "m-preserve", "m preserves left/right MON, left NOR, right NOR, left TRA",
                 Provenance::Formal, ClaimSubject::Input, {},
                 {
                     {{req(Axiom::MON, Side::Left)}, satisfies("m(R)", left(Axiom::MON)), {}},
                     {{req(Axiom::MON, Side::Right)}, satisfies("m(R)", right(Axiom::MON)), {}},
                     {{req(Axiom::NOR, Side::Left), req(Axiom::MON, Side::Left)},
                      satisfies("m(R)", left(Axiom::NOR)), {}},
                     {{req(Axiom::NOR, Side::Right)}, satisfies("m(R)", right(Axiom::NOR)), {}},
                     {{req(Axiom::TRA, Side::Left), req(Axiom::NOR, Side::Left),
                       req(Axiom::MON, Side::Left)},
                      satisfies("m(R)", left(Axiom::TRA)), {}},
                 }});

  out.push_back({"C3", "m-weakening",
                 "R0 -> R and R0 has right NOR, MON, BMON imply R0 -> m(R)", Provenance::Formal,
                 ClaimSubject::Input, {},
                 {{{},
                   {Conclusion::Kind::Weakening, ex("m(R)"), {}, std::nullopt},
                   {req(Axiom::NOR, Side::Right), req(Axiom::MON, Side::Right), req(Axiom::BMON)}}}});

  out.push_back({"C4", "star-preserve",
                 "for invariant R with left and right MON, star(R) is invariant with left and "
                 "right MON, right NOR, EXT, right CLO and keeps BMON, left TRA, left NOR, AREF",
                 Provenance::ExternalProof, ClaimSubject::Input,
                 {Requirement::invariant(), req(Axiom::MON, Side::Left), req(Axiom::MON, Side::Right)},
                 {
                     {{}, invariant_of("star(R)"), {}},
                     {{}, satisfies("star(R)", left(Axiom::MON)), {}},
                     {{}, satisfies("star(R)", right(Axiom::MON)), {}},
                     {{}, satisfies("star(R)", right(Axiom::NOR)), {}},
                     {{}, satisfies("star(R)", AxiomId(Axiom::EXT)), {}},
                     {{}, satisfies("star(R)", right(Axiom::CLO_BC)), {}},
                     {{req(Axiom::BMON)}, satisfies("star(R)", bmon), {}},
                     {{req(Axiom::TRA, Side::Left)}, satisfies("star(R)", left(Axiom::TRA)), {}},
                     {{req(Axiom::NOR, Side::Left)}, satisfies("star(R)", left(Axiom::NOR)), {}},
                     {{req(Axiom::AREF)}, satisfies("star(R)", AxiomId(Axiom::AREF)), {}},
                 }});

  out.push_back({"C5", "mstar-chain",
                 "for invariant R with left and right MON, star(m(R)) has right NOR, right CLO, "
                 "BMON, EXT and star(m(R)) -> m(R) -> R",
                 Provenance::ExternalProof, ClaimSubject::Input,
                 {Requirement::invariant(), req(Axiom::MON, Side::Left), req(Axiom::MON, Side::Right)},
                 {
                     {{}, satisfies("star(m(R))", right(Axiom::NOR)), {}},
                     {{}, satisfies("star(m(R))", right(Axiom::CLO_BC)), {}},
                     {{}, satisfies("star(m(R))", bmon), {}},
                     {{}, satisfies("star(m(R))", AxiomId(Axiom::EXT)), {}},
                     {{}, implies_c("star(m(R))", "m(R)"), {}},
                     {{}, implies_c("m(R)", "R"), {}},
                 }});

  out.push_back({"C6", "Mstar-eq-mstar",
                 "for invariant R with left and right NOR and MON, star(M(R)) = star(m(R))",
                 Provenance::ExternalProof, ClaimSubject::Input,
                 {Requirement::invariant(), req(Axiom::NOR, Side::Left), req(Axiom::NOR, Side::Right),
                  req(Axiom::MON, Side::Left), req(Axiom::MON, Side::Right)},
                 {{{}, equals_c("star(M(R))", "star(m(R))"), {}}}});

  out.push_back({"C7", "c-basic",
                 "c(R) has right CLO and right NOR; with right MON c(R) -> R; c preserves "
                 "left/right MON, left NOR and BMON",
                 Provenance::Formal, ClaimSubject::Input, {},
                 {
                     {{}, satisfies("c(R)", right(Axiom::CLO_BC)), {}},
                     {{}, satisfies("c(R)", right(Axiom::NOR)), {}},
                     {{req(Axiom::MON, Side::Right)}, implies_c("c(R)", "R"), {}},
                     {{req(Axiom::MON, Side::Right)}, satisfies("c(R)", right(Axiom::MON)), {}},
                     {{req(Axiom::MON, Side::Left)}, satisfies("c(R)", left(Axiom::MON)), {}},
                     {{req(Axiom::NOR, Side::Left)}, satisfies("c(R)", left(Axiom::NOR)), {}},
                     {{req(Axiom::BMON)}, satisfies("c(R)", bmon), {}},
                 }});

  out.push_back({"C8", "mc-vs-M",
                 "with right NOR and MON, c(m(R)) -> M(R); with right CLO also, c(m(R)) = M(R)",
                 Provenance::Formal, ClaimSubject::Input,
                 {req(Axiom::NOR, Side::Right), req(Axiom::MON, Side::Right)},
                 {
                     {{}, implies_c("c(m(R))", "M(R)"), {}},
                     {{req(Axiom::CLO_BC, Side::Right)}, equals_c("c(m(R))", "M(R)"), {}},
                 }});

  out.push_back({"C9", "M-to-m", "M(R) -> m(R)", Provenance::Formal, ClaimSubject::Input, {},
                 {{{}, implies_c("M(R)", "m(R)"), {}}}});

  out.push_back({"C10", "pregeom-aM-eq-am",
                 "if cl has the exchange property, M(a-indep) = m(a-indep)",
                 Provenance::FiniteAnalogue, ClaimSubject::AIndep, {Requirement::exchange()},
                 {{{}, equals_c("M(R)", "m(R)"), {}}}});

  out.push_back({"C11", "star-weaker", "for invariant R with right MON, star(R) -> R",
                 Provenance::Formal, ClaimSubject::Input,
                 {Requirement::invariant(), req(Axiom::MON, Side::Right)},
                 {{{}, implies_c("star(R)", "R"), {}}}});
  return out;
}

// Memoizes operator outputs and requirement checks for one verification.
class Context {
 public:
  explicit Context(const TernaryRelation& base) : base_(base) {}

  const TernaryRelation& base() const { return base_; }

  const TernaryRelation& rel(const OperatorExpr& e) {
    const std::string key = e.to_string();
    auto it = rels_.find(key);
    if (it != rels_.end()) return it->second;
    if (e.depth() == 0) return rels_.emplace(key, base_).first->second;
    const OperatorExpr inner(std::vector<Op>(e.ops().begin(), e.ops().end() - 1));
    TernaryRelation out = apply_op(e.ops().back(), rel(inner));
    return rels_.emplace(key, std::move(out)).first->second;
  }

  bool holds(const Requirement& r) {
    switch (r.kind) {
      case Requirement::Kind::Invariant:
        if (!invariant_) invariant_ = is_invariant(base_).holds;
        return *invariant_;
      case Requirement::Kind::Exchange: return base_.site().cl().has_exchange();
      case Requirement::Kind::Axiom: {
        auto it = axioms_.find(*r.axiom);
        if (it != axioms_.end()) return it->second;
        return axioms_.emplace(*r.axiom, check_axiom(base_, *r.axiom).holds).first->second;
      }
    }
    return false;
  }

  bool holds_all(const std::vector<Requirement>& reqs) {
    for (const auto& r : reqs)
      if (!holds(r)) return false;
    return true;
  }

 private:
  const TernaryRelation& base_;
  std::map<std::string, TernaryRelation> rels_;
  std::map<AxiomId, bool> axioms_;
  std::optional<bool> invariant_;
};

std::vector<TernaryRelation> weaker_pool(const TernaryRelation& r) {
  const auto a = builtin_a_indep(r.site_ptr());
  const auto core = monotone_normal_core(r);
  const auto mr = monotonise_m(r);
  return {r,
          mr,
          monotonise_M(r),
          closure_c(r),
          star(mr),
          core,
          monotonise_m(core),
          conjunction(r, a),
          conjunction(mr, a),
          conjunction(core, a)};
}

struct Evaluation {
  Verdict verdict;
  std::vector<std::string> tables;
};

Evaluation evaluate(Context& ctx, const Conclusion& c) {
  const std::string base = ctx.base().name();
  switch (c.kind) {
    case Conclusion::Kind::Satisfies: {
      const auto& lhs = ctx.rel(c.lhs);
      return {check_axiom(lhs, *c.axiom), {lhs.name()}};
    }
    case Conclusion::Kind::Invariant: {
      const auto& lhs = ctx.rel(c.lhs);
      return {is_invariant(lhs), {lhs.name()}};
    }
    case Conclusion::Kind::Implies: {
      const auto& lhs = ctx.rel(c.lhs);
      const auto& rhs = ctx.rel(c.rhs);
      return {implies(lhs, rhs), {lhs.name(), rhs.name()}};
    }
    case Conclusion::Kind::Equals: {
      const auto& lhs = ctx.rel(c.lhs);
      const auto& rhs = ctx.rel(c.rhs);
      return {equals(lhs, rhs), {lhs.name(), rhs.name()}};
    }
    case Conclusion::Kind::Weakening: break;
  }
  throw Error("weakening clauses are evaluated per candidate");
}

ClaimVerdict run(const Claim& claim, const TernaryRelation& input,
                 const std::vector<TernaryRelation>* explicit_weaker) {
  const TernaryRelation subject =
      claim.subject == ClaimSubject::AIndep ? builtin_a_indep(input.site_ptr()) : input;
  ClaimVerdict out;
  out.claim_id = claim.id;
  Context ctx(subject);
  if (!ctx.holds_all(claim.hypotheses)) {
    out.skipped = claim.clauses.size();
    out.status = ClaimStatus::Skipped;
    return out;
  }
  auto refute = [&](const Clause& clause, Evaluation ev, std::optional<TernaryRelation> weaker) {
    if (out.refutation) return;
    Refutation ref{claim.id, clause.conclusion.to_string(), std::move(ev.tables),
                   std::move(ev.verdict), subject, std::move(weaker),
                   claim.provenance != Provenance::Formal};
    out.refutation = std::move(ref);
  };
  for (const auto& clause : claim.clauses) {
    if (!ctx.holds_all(clause.requires_)) {
      ++out.skipped;
      continue;
    }
    if (clause.conclusion.kind != Conclusion::Kind::Weakening) {
      ++out.instances_checked;
      Evaluation ev = evaluate(ctx, clause.conclusion);
      if (!ev.verdict.holds) refute(clause, std::move(ev), std::nullopt);
      continue;
    }
    const auto pool = explicit_weaker ? *explicit_weaker : weaker_pool(subject);
    const auto& target = ctx.rel(clause.conclusion.lhs);
    for (const auto& r0 : pool) {
      Context inner(r0);
      if (!implies(r0, subject).holds || !inner.holds_all(clause.weaker)) {
        ++out.skipped;
        continue;
      }
      ++out.instances_checked;
      Verdict v = implies(r0, target);
      if (!v.holds) refute(clause, {std::move(v), {r0.name(), subject.name(), target.name()}}, r0);
    }
  }
  if (out.refutation)
    out.status = ClaimStatus::Refuted;
  else
    out.status = out.instances_checked > 0 ? ClaimStatus::Confirmed : ClaimStatus::Skipped;
  return out;
}

}  // namespace

std::string Requirement::to_string() const {
  switch (kind) {
    case Kind::Invariant: return "invariant";
    case Kind::Exchange: return "cl has exchange";
    case Kind::Axiom: return axiom->to_string();
  }
  return "?";
}

std::string Conclusion::to_string() const {
  switch (kind) {
    case Kind::Satisfies: return lhs.to_string() + " satisfies " + axiom->to_string();
    case Kind::Invariant: return lhs.to_string() + " is invariant";
    case Kind::Implies: return lhs.to_string() + " -> " + rhs.to_string();
    case Kind::Equals: return lhs.to_string() + " = " + rhs.to_string();
    case Kind::Weakening: return "R0 -> " + lhs.to_string();
  }
  return "?";
}

const std::vector<Claim>& registry() {
  static const std::vector<Claim> claims = build_registry();
  return claims;
}

const Claim& find_claim(std::string_view id_or_key) {
  for (const auto& c : registry())
    if (c.id == id_or_key || c.key == id_or_key) return c;
  throw Error("unknown claim '" + std::string(id_or_key) + "'");
}

std::string_view status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Confirmed: return "confirmed";
    case ClaimStatus::Refuted: return "refuted";
    case ClaimStatus::Skipped: return "skipped";
  }
  return "?";
}

ClaimVerdict verify_claim(const Claim& claim, const TernaryRelation& r) {
  return run(claim, r, nullptr);
}

ClaimVerdict verify_claim(const Claim& claim, const TernaryRelation& r,
                          const TernaryRelation& weaker) {
  require_same_site(r, weaker);
  const std::vector<TernaryRelation> pool{weaker};
  return run(claim, r, &pool);
}

}  // namespace indep
