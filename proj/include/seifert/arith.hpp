#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace seifert {

// All arithmetic in this library is exact. Int/Rat wrap GMP; a Rat is
// always in lowest terms with positive denominator.
using Int = mpz_class;
using Rat = mpq_class;

// Reduced fraction num/den with positive denominator. Throws on den = 0.
Rat make_rat(const Int& num, const Int& den);

// gmpxx has no long long constructor.
Int to_int(long long v);

// Remainder in [0, m) for m > 0 (floor division).
Int mod_floor(const Int& x, const Int& m);

// Ceiling of a/b for b > 0.
Int ceil_div(const Int& a, const Int& b);

struct Egcd {
  Int g;  // gcd(a, b) > 0
  Int u;  // a*u + b*v = g
  Int v;
};

// Extended gcd. Throws if both arguments are zero.
Egcd egcd(const Int& a, const Int& b);

// Inverse of b modulo a, in [1, a). Requires a >= 2 and gcd(a, b) = 1.
Int mod_inverse(const Int& b, const Int& a);

// Negative (Hirzebruch-Jung) continued fraction
//   a/b = x_1 - 1/(x_2 - 1/(... - 1/x_m)),   every x_i >= 2.
struct NegContFrac {
  std::vector<Int> entries;
};

// Expansion of a/b for a > b >= 1 with gcd(a, b) = 1, by the
// ceiling-division recursion x_1 = ceil(a/b). This is the unique
// expansion with all entries >= 2.
NegContFrac neg_cont_frac(const Int& a, const Int& b);

// Exact value of the nested fraction; numerator > denominator >= 1.
Rat eval_cont_frac(const NegContFrac& c);

// C(n, k); zero when k > n. Requires n, k >= 0.
Int binomial(const Int& n, const Int& k);

}  // namespace seifert
