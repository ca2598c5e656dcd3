#include "indep/operators.hpp"

#include <algorithm>

namespace indep {

std::string_view op_symbol(Op op) {
  switch (op) {
    case Op::Mono: return "M";
    case Op::NaiveMono: return "m";
    case Op::Star: return "star";
    case Op::ClosureExt: return "c";
  }
  return "?";
}

OperatorExpr OperatorExpr::parse(std::string_view text, std::size_t depth_cap) {
  std::vector<Op> outer_first;
  std::string_view rest = text;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  rest = trim(rest);
  while (rest != "R") {
    const auto open = rest.find('(');
    if (open == std::string_view::npos || rest.back() != ')')
      throw Error("malformed operator expression '" + std::string(text) + "'");
    const auto head = rest.substr(0, open);
    Op op;
    if (head == "M")
      op = Op::Mono;
    else if (head == "m")
      op = Op::NaiveMono;
    else if (head == "star")
      op = Op::Star;
    else if (head == "c")
      op = Op::ClosureExt;
    else
      throw Error("unknown operator '" + std::string(head) + "' in '" + std::string(text) + "'");
    outer_first.push_back(op);
    if (outer_first.size() > depth_cap)
      throw CapError("operator expression deeper than cap " + std::to_string(depth_cap));
    rest = trim(rest.substr(open + 1, rest.size() - open - 2));
  }
  std::reverse(outer_first.begin(), outer_first.end());
  return OperatorExpr(std::move(outer_first));
}

OperatorExpr OperatorExpr::then(Op op) const {
  auto ops = ops_;
  ops.push_back(op);
  return OperatorExpr(std::move(ops));
}

std::string OperatorExpr::to_string(std::string_view base) const {
  std::string out(base);
  for (Op op : ops_) out = std::string(op_symbol(op)) + "(" + out + ")";
  return out;
}

TernaryRelation monotonise_M(const TernaryRelation& r, Exec exec) {
  const Site* site = &r.site();
  return TernaryRelation::from_predicate(
      r.site_ptr(),
      [r, site](Subset a, Subset c, Subset b) {
        return all_between(c, site->closure(b | c), [&](Subset d) { return r(a, d, b); });
      },
      "M(" + r.name() + ")", exec);
}

TernaryRelation monotonise_m(const TernaryRelation& r, Exec exec) {
  return TernaryRelation::from_predicate(
      r.site_ptr(),
      [r](Subset a, Subset c, Subset b) {
        return all_between(c, b | c, [&](Subset d) { return r(a, d, b); });
      },
      "m(" + r.name() + ")", exec);
}

TernaryRelation star(const TernaryRelation& r, Exec exec) {
  const Site* site = &r.site();
  const bool trivial_group = site->group().order() == 1;
  return TernaryRelation::from_predicate(
      r.site_ptr(),
      [r, site, trivial_group](Subset a, Subset c, Subset b) {
        if (trivial_group)
          return all_between(b, site->full(), [&](Subset d) { return r(a, c, d); });
        const auto candidates = site->orbit(a, b | c);
        return all_between(b, site->full(), [&](Subset d) {
          return std::any_of(candidates.begin(), candidates.end(),
                             [&](Subset a2) { return r(a2, c, d); });
        });
      },
      "star(" + r.name() + ")", exec);
}

TernaryRelation closure_c(const TernaryRelation& r, Exec exec) {
  const Site* site = &r.site();
  return TernaryRelation::from_predicate(
      r.site_ptr(), [r, site](Subset a, Subset c, Subset b) { return r(a, c, site->closure(b | c)); },
      "c(" + r.name() + ")", exec);
}

TernaryRelation apply_op(Op op, const TernaryRelation& r, Exec exec) {
  switch (op) {
    case Op::Mono: return monotonise_M(r, exec);
    case Op::NaiveMono: return monotonise_m(r, exec);
    case Op::Star: return star(r, exec);
    case Op::ClosureExt: return closure_c(r, exec);
  }
  throw Error("unknown operator");
}

TernaryRelation apply_expr(const OperatorExpr& expr, const TernaryRelation& r,
                           std::size_t depth_cap, Exec exec) {
  if (expr.depth() > depth_cap)
    throw CapError("operator expression deeper than cap " + std::to_string(depth_cap));
  TernaryRelation out = r;
  for (Op op : expr.ops()) out = apply_op(op, out, exec);
  return out.renamed(expr.to_string(r.name()));
}

}  // namespace indep
