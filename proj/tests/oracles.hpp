// Test-side oracles, independent of the library's computation paths, plus
// deterministic random generators shared by the unit and acceptance suites.
#pragma once

#include "seifert/lattice.hpp"
#include "seifert/seifert_data.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace testutil {

using seifert::Int;

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// --- Seifert data oracle -------------------------------------------------
// Scans b in [1, a) for the defining congruence instead of using modular
// inverses, then solves for e.
struct BruteInvariants {
  Int e;
  std::vector<std::pair<Int, Int>> pairs;
};

inline BruteInvariants brute_invariants(const std::vector<Int>& tuple) {
  Int p = 1;
  for (const Int& a : tuple) p *= a;
  BruteInvariants out;
  for (const Int& a : tuple) {
    if (a == 1) {
      out.pairs.emplace_back(a, Int(0));
      continue;
    }
    Int found = -1;
    for (Int b = 1; b < a; ++b) {
      Int lhs = (p / a) * b + 1;  // (P/a) b = -1 mod a
      if (lhs % a == 0) {
        found = b;
        break;
      }
    }
    if (found < 1) throw std::logic_error("brute_invariants: no residue found");
    out.pairs.emplace_back(a, found);
  }
  Int num = 1;
  for (const auto& [a, b] : out.pairs) num += b * (p / a);
  if (num % p != 0) throw std::logic_error("brute_invariants: e not integral");
  out.e = num / p;
  return out;
}

// --- naive d-invariant oracle ---------------------------------------------
// Inverse via cofactor expansion and a plain odometer walk over the
// characteristic box (optionally widened), evaluating the full quadratic
// form at every point. No factorization, no pruning.

inline Int det_cofactor(const std::vector<std::vector<Int>>& m) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Int det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Int>> sub(n - 1, std::vector<Int>(n - 1));
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        sub[r - 1][cc++] = m[r][c];
      }
    }
    Int term = m[0][j] * det_cofactor(sub);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

inline std::vector<std::vector<Int>> inverse_cofactor(
    const std::vector<std::vector<Int>>& m) {
  std::size_t n = m.size();
  Int det = det_cofactor(m);
  if (det != 1 && det != -1)
    throw std::logic_error("inverse_cofactor: matrix is not unimodular");
  std::vector<std::vector<Int>> inv(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<Int>> sub;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<Int> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(m[r][c]);
        sub.push_back(std::move(row));
      }
      Int minor = sub.empty() ? Int(1) : det_cofactor(sub);
      Int cof = ((i + j) % 2 == 0) ? minor : -minor;
      inv[i][j] = cof * det;  // det in {1,-1}: division by det == multiplication
    }
  return inv;
}

inline Int naive_d(const seifert::GramLattice& L, int widen) {
  std::size_t n = L.rank();
  auto q = inverse_cofactor(L.matrix());
  std::vector<Int> lo(n), c(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = Int(widen) * L.at(i, i);
    c[i] = lo[i];
  }
  bool have = false;
  Int best = 0;
  for (;;) {
    Int f = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i] == 0) continue;
      Int row = 0;
      for (std::size_t j = 0; j < n; ++j) row += q[i][j] * c[j];
      f += c[i] * row;
    }
    if (!have || f > best) {
      best = f;
      have = true;
    }
    std::size_t k = 0;
    while (k < n) {
      c[k] += 2;
      if (c[k] <= -lo[k]) break;
      c[k] = lo[k];
      ++k;
    }
    if (k == n) break;
  }
  Int total = best + Int(n);
  if (total % 4 != 0) throw std::logic_error("naive_d: bad congruence");
  return total / 4;
}

// --- random generators -----------------------------------------------------

// Pairwise-coprime tuple, entries in [2, max_entry], optionally with a
// trailing regular (order 1) slot.
inline std::vector<Int> random_tuple(std::mt19937_64& rng, int n_min, int n_max,
                                     long max_entry, bool allow_regular = false) {
  std::uniform_int_distribution<int> nd(n_min, n_max);
  std::uniform_int_distribution<long> ad(2, max_entry);
  for (;;) {
    int n = nd(rng);
    bool regular = allow_regular && (rng() % 4 == 0);
    std::vector<Int> out;
    int guard = 0;
    while (static_cast<int>(out.size()) < (regular ? n - 1 : n)) {
      if (++guard > 1000) break;
      Int cand = ad(rng);
      bool ok = true;
      for (const Int& a : out)
        if (gcd(a, cand) != 1) ok = false;
      if (ok) out.push_back(cand);
    }
    if (guard > 1000) continue;
    if (regular) out.push_back(1);
    return out;
  }
}

}  // namespace testutil
