#pragma once

#include "seifert/seifert_data.hpp"

#include <string>
#include <utility>
#include <vector>

namespace seifert {

// Quantities attached to 1/m surgery on the fiber in the last slot:
// alpha = a_1...a_{n-1}, beta = (alpha b_n + 1)/a_n (an integer), and
// a_n = q alpha + r with 0 < r < alpha when alpha > 1.
struct SurgeryContext {
  Int alpha;
  Int beta;
  long long m = 0;
  Int q;
  Int r;
};

SurgeryContext surgery_context(const SeifertInvariants& y, long long m);

struct SurgeryResult {
  OrientedSeifert result;
  Int core_fiber_order;  // |a_n - m alpha|
};

// Seifert data of 1/m surgery on the last-slot fiber. For a_n > m alpha
// the data keeps e and replaces the last pair by (a_n - m alpha,
// b_n - m beta); otherwise the orientation flips and the reversed data
// (n - e, (a_j, a_j - b_j), (m alpha - a_n, m(alpha - beta) + b_n - a_n))
// is returned. Results are re-canonicalized, so inv always satisfies the
// -1 convention. m = 0 returns y unchanged.
SurgeryResult surger_fiber(const SeifertInvariants& y, long long m);

// Surgery on the last-slot fiber of an oriented manifold; reversing
// orientation negates the surgery coefficient.
OrientedSeifert surger_oriented(const OrientedSeifert& y, long long m);

// The +1 surgery specialization for a_n < alpha: data of
// Sigma(a_1, ..., a_{n-1}, alpha - a_n), already in convention, with
// central invariant n - e and last pair (alpha - a_n,
// b_n - beta + alpha - a_n).
SeifertInvariants cross_case(const SeifertInvariants& y);

// Boundary slope induced by the fibration on the last-slot fiber:
// -b_n^*/a_n with b_n^* the inverse of b_n mod a_n; 0 for a regular fiber.
Rat fiber_slope(const SeifertInvariants& y);

struct WitnessReport {
  long long m = 0;            // coefficient 1/m exhibiting infinite order
  Int central;                // central invariant of the witness manifold
  OrientedSeifert result;     // the witness manifold itself
  std::string justification;
  bool externally_justified = false;  // S^3 torus-knot case
};

// A surgery coefficient 1/m for which Y_{1/m}(K) has infinite order in
// the homology cobordism group: m = 0 when e > 1 (Y itself), otherwise
// m = q + 1, whose result has central invariant > 1. Throws when the
// fiber is the unknot in S^3.
WitnessReport infinite_order_witness(const SeifertInvariants& y);

struct DSurvey {
  std::vector<std::pair<long long, Int>> values;  // m -> d(Y_{1/m}(K))
  std::vector<Int> distinct;                      // sorted value set
};

// d of every 1/m surgery for m in [lo, hi]. The distinct set never has
// more than two elements; a violation is reported as an internal error.
DSurvey d_survey(const SeifertInvariants& y, long long lo, long long hi);

}  // namespace seifert
