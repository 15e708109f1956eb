#include "seifert/plumbing.hpp"

#include <sstream>

namespace seifert {

std::size_t PlumbingGraph::rank() const {
  std::size_t r = 1;
  for (const auto& arm : arms) r += arm.size();
  return r;
}

std::size_t PlumbingGraph::edge_count() const {
  return rank() - 1;  // a star of chains is a tree
}

PlumbingGraph plumbing_graph(const SeifertInvariants& inv) {
  if (!verify_eq1(inv, -1))
    throw std::invalid_argument(
        "plumbing_graph: invariants do not satisfy the -1 convention");
  for (const auto& [a, b] : inv.pairs) {
    bool ok = (a == 1) ? (b == 0) : (b >= 1 && b < a);
    if (!ok) throw std::invalid_argument("plumbing_graph: non-canonical pair");
  }

  PlumbingGraph g;
  g.central_weight = -inv.e;
  for (const auto& [a, b] : inv.pairs) {
    if (a == 1) continue;  // no chain for a regular fiber
    NegContFrac cf = neg_cont_frac(a, b);
    std::vector<Int> arm;
    arm.reserve(cf.entries.size());
    for (const Int& x : cf.entries) arm.push_back(-x);
    g.arms.push_back(std::move(arm));
  }
  return g;
}

std::string export_dot(const PlumbingGraph& g) {
  std::ostringstream os;
  os << "graph plumbing {\n";
  os << "  node [shape=circle];\n";
  os << "  v0 [label=\"" << g.central_weight.get_str() << "\"];\n";
  std::size_t next = 1;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& arm : g.arms) {
    std::size_t prev = 0;
    for (const Int& w : arm) {
      os << "  v" << next << " [label=\"" << w.get_str() << "\"];\n";
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  for (const auto& [u, v] : edges) os << "  v" << u << " -- v" << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace seifert
