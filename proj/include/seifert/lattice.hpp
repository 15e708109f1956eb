#pragma once

#include "seifert/plumbing.hpp"
#include "seifert/seifert_data.hpp"

#include <cstddef>
#include <vector>

namespace seifert {

// Negative-definite unimodular integer lattice given by a symmetric Gram
// matrix. Construction validates definiteness and |det| = 1.
class GramLattice {
 public:
  static GramLattice from_matrix(std::vector<std::vector<Int>> gram);
  static GramLattice diagonal(std::size_t n, const Int& entry = Int(-1));

  std::size_t rank() const { return gram_.size(); }
  const Int& at(std::size_t i, std::size_t j) const { return gram_[i][j]; }
  const std::vector<std::vector<Int>>& matrix() const { return gram_; }
  const Int& det() const { return det_; }

 private:
  GramLattice() = default;
  std::vector<std::vector<Int>> gram_;
  Int det_;
};

// Intersection lattice of the plumbing: diagonal entries are the vertex
// weights, off-diagonal entries 1 exactly for edges.
GramLattice gram_matrix(const PlumbingGraph& g);

GramLattice direct_sum(const GramLattice& a, const GramLattice& b);

// max { (<chi, chi> + rank)/4 : chi characteristic }, an even integer.
// Characteristic vectors are parametrized by their pairing vectors c
// (c_i = <chi, v_i>, c_i = G_ii mod 2); at any maximizer |c_i| <= -G_ii,
// so the exact maximum of c^T G^{-1} c over that box is taken, with
// branch-and-bound pruning that cannot change the result.
Int d_invariant(const GramLattice& L);

// d of the plumbing lattice of inv, negated when sign = -1.
Int d_of_manifold(const OrientedSeifert& y);

}  // namespace seifert
