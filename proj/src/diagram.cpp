#include "indep/diagram.hpp"

#include <algorithm>

#include "indep/operators.hpp"

namespace indep {

namespace {

const char* const kExprs[] = {"R", "m(R)", "M(R)", "c(R)", "star(R)", "star(m(R))", "star(M(R))", "c(m(R))"};

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

ImplicationDiagram implication_diagram(const TernaryRelation& r) {
  if (r.site().n() > kMaxDiagramSize)
    throw CapError("diagram needs n <= " + std::to_string(kMaxDiagramSize));

  ImplicationDiagram d;
  std::vector<TernaryRelation> reps;
  for (const char* text : kExprs) {
    const auto expr = OperatorExpr::parse(text);
    const TernaryRelation t = apply_expr(expr, r);
    auto same = std::find_if(reps.begin(), reps.end(), [&](const TernaryRelation& x) {
      return std::ranges::equal(x.table(), t.table());
    });
    if (same == reps.end()) {
      reps.push_back(t);
      d.nodes.push_back({{text}});
    } else {
      d.nodes[static_cast<std::size_t>(same - reps.begin())].labels.push_back(text);
    }
  }

  const std::size_t k = reps.size();
  std::vector<std::vector<bool>> imp(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) imp[i][j] = implies(reps[i], reps[j]).holds;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (!imp[i][j]) continue;
      bool factored = false;
      for (std::size_t m = 0; m < k && !factored; ++m)
        factored = m != i && m != j && imp[i][m] && imp[m][j];
      if (!factored) d.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return d;
}

std::string ImplicationDiagram::dot() const {
  std::string out = "digraph implications {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::string label;
    for (const auto& l : nodes[i].labels) label += (label.empty() ? "" : " = ") + l;
    out += "  n" + std::to_string(i) + " [label=" + quoted(label) + "];\n";
  }
  for (const auto& [a, b] : edges) out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  return out + "}\n";
}

}  // namespace indep
