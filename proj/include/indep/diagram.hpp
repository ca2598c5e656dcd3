#pragma once

#include <string>
#include <utility>
#include <vector>

#include "indep/relation.hpp"

namespace indep {

inline constexpr int kMaxDiagramSize = 4;

struct DiagramNode {
  std::vector<std::string> labels;  // expressions with equal tables
};

struct ImplicationDiagram {
  std::vector<DiagramNode> nodes;
  std::vector<std::pair<int, int>> edges;  // transitive reduction, sorted

  std::string dot() const;
};

/// Nodes R, m(R), M(R), c(R), star(R), star(m(R)), star(M(R)), c(m(R)); equal tables
/// share a node. Throws CapError for n > 4.
ImplicationDiagram implication_diagram(const TernaryRelation& r);

}  // namespace indep
