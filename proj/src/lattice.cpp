#include "seifert/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace seifert {

namespace {

using Mat = std::vector<std::vector<Int>>;
using RatMat = std::vector<std::vector<Rat>>;

// LDL^T pivots of a symmetric matrix over the rationals. A zero pivot
// before the last step means the matrix is not definite.
std::vector<Rat> ldl_pivots(const Mat& m) {
  std::size_t n = m.size();
  RatMat a(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);

  std::vector<Rat> pivots(n);
  for (std::size_t k = 0; k < n; ++k) {
    pivots[k] = a[k][k];
    if (pivots[k] == 0) return {};  // singular leading minor
    for (std::size_t i = k + 1; i < n; ++i) {
      Rat f = a[i][k] / pivots[k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return pivots;
}

// Inverse of a unimodular integer matrix; entries are integers.
Mat invert_unimodular(const Mat& m) {
  std::size_t n = m.size();
  RatMat a(n, std::vector<Rat>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
    a[i][n + i] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw std::logic_error("invert_unimodular: singular matrix");
    std::swap(a[k], a[p]);
    Rat piv = a[k][k];
    for (std::size_t j = 0; j < 2 * n; ++j) a[k][j] /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rat f = a[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  Mat inv(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& v = a[i][n + j];
      if (v.get_den() != 1)
        throw std::logic_error("invert_unimodular: non-integral inverse");
      inv[i][j] = v.get_num();
    }
  return inv;
}

Int quad_form(const Mat& q, const std::vector<Int>& c) {
  Int acc = 0;
  std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i] == 0) continue;
    Int row = 0;
    for (std::size_t j = 0; j < n; ++j) row += q[i][j] * c[j];
    acc += c[i] * row;
  }
  return acc;
}

// Depth-first enumeration of the characteristic box maximizing c^T Q c
// (Q = G^{-1}, negative definite). Levels are assigned from index n-1
// downward; -Q is factored as U^T D U with U unit upper triangular, so
// the accumulated terms d_k (c_k + sum_{j>k} U_kj c_j)^2 give an exact
// lower bound on -c^T Q c and subtrees that cannot beat the incumbent
// are cut. Candidates at each level are visited nearest-first, so the
// per-level terms increase and a single break exhausts the level.
class BoxSearch {
 public:
  BoxSearch(const Mat& gram, const Mat& q) : n_(gram.size()) {
    // largest |G_ii| outermost (level n-1 is assigned first)
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) {
                       return gram[a][a] > gram[b][b];  // weights negative
                     });

    RatMat m(n_, std::vector<Rat>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        m[i][j] = Rat(-q[order_[i]][order_[j]]);
    d_.assign(n_, Rat(0));
    u_.assign(n_, std::vector<Rat>(n_, Rat(0)));
    for (std::size_t k = 0; k < n_; ++k) {
      Rat dk = m[k][k];
      for (std::size_t i = 0; i < k; ++i) dk -= d_[i] * u_[i][k] * u_[i][k];
      if (dk <= 0) throw std::logic_error("BoxSearch: form not definite");
      d_[k] = dk;
      for (std::size_t j = k + 1; j < n_; ++j) {
        Rat v = m[k][j];
        for (std::size_t i = 0; i < k; ++i) v -= d_[i] * u_[i][k] * u_[i][j];
        u_[k][j] = v / dk;
      }
    }

    lo_.resize(n_);
    for (std::size_t k = 0; k < n_; ++k) lo_[k] = gram[order_[k]][order_[k]];
    value_.assign(n_, Int(0));
  }

  // best = max over the box, seeded with an incumbent value.
  Int run(const Int& seed) {
    best_ = seed;
    if (n_ > 0) descend(n_ - 1, Rat(0));
    return best_;
  }

 private:
  void descend(std::size_t k, const Rat& partial) {
    Rat s(0);
    for (std::size_t j = k + 1; j < n_; ++j)
      if (value_[j] != 0) s += u_[k][j] * value_[j];

    // candidate values lo, lo+2, ..., -lo ordered by |v + s|
    std::vector<Int> cand;
    for (Int v = lo_[k]; v <= -lo_[k]; v += 2) cand.push_back(v);
    std::sort(cand.begin(), cand.end(), [&](const Int& a, const Int& b) {
      Rat da = abs(Rat(a) + s), db = abs(Rat(b) + s);
      return da < db;
    });

    for (const Int& v : cand) {
      Rat t = Rat(v) + s;
      Rat next = partial + d_[k] * t * t;
      if (next >= -Rat(best_)) break;  // terms only grow from here
      value_[k] = v;
      if (k == 0) {
        // next == -c^T Q c exactly; strict improvement guaranteed
        Rat f = -next;
        if (f.get_den() != 1)
          throw std::logic_error("BoxSearch: non-integral form value");
        best_ = f.get_num();
      } else {
        descend(k - 1, next);
      }
    }
    value_[k] = 0;
  }

  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<Rat> d_;
  RatMat u_;
  std::vector<Int> lo_;      // box lower bound per level (= G_ii permuted)
  std::vector<Int> value_;   // current assignment per level
  Int best_;
};

}  // namespace

GramLattice GramLattice::from_matrix(std::vector<std::vector<Int>> gram) {
  std::size_t n = gram.size();
  if (n == 0) throw std::invalid_argument("GramLattice: empty matrix");
  for (const auto& row : gram)
    if (row.size() != n) throw std::invalid_argument("GramLattice: not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram[i][j] != gram[j][i])
        throw std::invalid_argument("GramLattice: not symmetric");

  std::vector<Rat> pivots = ldl_pivots(gram);
  if (pivots.empty())
    throw std::invalid_argument("GramLattice: singular leading minor");
  Rat det(1);
  for (const Rat& p : pivots) {
    if (p >= 0)
      throw std::invalid_argument("GramLattice: matrix is not negative definite");
    det *= p;
  }
  if (det.get_den() != 1) throw std::logic_error("GramLattice: non-integral det");
  Int d = det.get_num();
  if (d != 1 && d != -1)
    throw std::invalid_argument("GramLattice: lattice is not unimodular");

  GramLattice L;
  L.gram_ = std::move(gram);
  L.det_ = d;
  return L;
}

GramLattice GramLattice::diagonal(std::size_t n, const Int& entry) {
  std::vector<std::vector<Int>> g(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = entry;
  return from_matrix(std::move(g));
}

GramLattice gram_matrix(const PlumbingGraph& g) {
  std::size_t n = g.rank();
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
  m[0][0] = g.central_weight;
  std::size_t next = 1;
  for (const auto& arm : g.arms) {
    std::size_t prev = 0;
    for (const Int& w : arm) {
      m[next][next] = w;
      m[prev][next] = 1;
      m[next][prev] = 1;
      prev = next++;
    }
  }
  return GramLattice::from_matrix(std::move(m));
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  std::size_t n = a.rank(), m = b.rank();
  std::vector<std::vector<Int>> g(n + m, std::vector<Int>(n + m, Int(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = a.at(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g[n + i][n + j] = b.at(i, j);
  return GramLattice::from_matrix(std::move(g));
}

Int d_invariant(const GramLattice& L) {
  std::size_t n = L.rank();
  const Mat& gram = L.matrix();
  Mat q = invert_unimodular(gram);

  // incumbents: the diagonal vector is always characteristic and in the
  // box; the zero vector is characteristic exactly for even lattices
  std::vector<Int> diag(n);
  bool even = true;
  for (std::size_t i = 0; i < n; ++i) {
    diag[i] = gram[i][i];
    if (mod_floor(diag[i], 2) != 0) even = false;
  }
  Int seed = quad_form(q, diag);
  if (even && seed < 0) seed = 0;

  BoxSearch search(gram, q);
  Int best = search.run(seed);

  Int total = best + Int(n);
  if (mod_floor(total, 4) != 0)
    throw std::logic_error("d_invariant: maximum not congruent to -rank mod 4");
  Int d = total / 4;
  if (mod_floor(d, 2) != 0)
    throw std::logic_error("d_invariant: value is not even");
  return d;
}

Int d_of_manifold(const OrientedSeifert& y) {
  Int d = d_invariant(gram_matrix(plumbing_graph(y.inv)));
  return y.sign < 0 ? Int(-d) : d;
}

}  // namespace seifert
