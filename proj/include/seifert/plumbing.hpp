#pragma once

#include "seifert/seifert_data.hpp"

#include <string>
#include <vector>

namespace seifert {

// Star-shaped plumbing graph: a central vertex of weight -e and one
// chain per singular fiber, weights -x_{k,1}, ..., -x_{k,m_k} listed
// from the center outward, where a_k/b_k = [x_{k,1}, ..., x_{k,m_k}].
struct PlumbingGraph {
  Int central_weight;
  std::vector<std::vector<Int>> arms;

  std::size_t rank() const;
  std::size_t edge_count() const;
};

// Requires canonical invariants with eq1 = -1. Order-1 slots contribute
// no arm.
PlumbingGraph plumbing_graph(const SeifertInvariants& inv);

// Undirected DOT text; vertex labels are the weights.
std::string export_dot(const PlumbingGraph& g);

}  // namespace seifert
