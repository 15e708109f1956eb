#include "seifert/arith.hpp"

namespace seifert {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int to_int(long long v) {
  Int r;
  if (v >= 0) {
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  } else {
    unsigned long long mag = -static_cast<unsigned long long>(v);
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
    r = -r;
  }
  return r;
}

Int mod_floor(const Int& x, const Int& m) {
  if (m <= 0) throw std::invalid_argument("mod_floor: modulus must be positive");
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int ceil_div(const Int& a, const Int& b) {
  if (b <= 0) throw std::invalid_argument("ceil_div: divisor must be positive");
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Egcd egcd(const Int& a, const Int& b) {
  if (a == 0 && b == 0) throw std::invalid_argument("egcd: gcd(0, 0) is undefined");
  Egcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.u.get_mpz_t(), r.v.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

Int mod_inverse(const Int& b, const Int& a) {
  if (a < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
  Int inv;
  if (!mpz_invert(inv.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t()))
    throw std::invalid_argument("mod_inverse: arguments are not coprime");
  return inv;  // mpz_invert yields a value in [1, a) for a >= 2
}

NegContFrac neg_cont_frac(const Int& a, const Int& b) {
  if (b < 1 || a <= b)
    throw std::invalid_argument("neg_cont_frac: need a > b >= 1");
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (g != 1) throw std::invalid_argument("neg_cont_frac: a, b not coprime");

  NegContFrac out;
  Int num = a, den = b;
  while (den > 0) {
    Int x = ceil_div(num, den);
    out.entries.push_back(x);
    // num/den = x - 1 / (den / (x*den - num))
    Int next = x * den - num;
    num = den;
    den = next;
  }
  return out;
}

Rat eval_cont_frac(const NegContFrac& c) {
  if (c.entries.empty())
    throw std::invalid_argument("eval_cont_frac: empty expansion");
  for (const Int& x : c.entries)
    if (x < 2) throw std::invalid_argument("eval_cont_frac: entry < 2");

  Rat v(c.entries.back());
  for (auto it = c.entries.rbegin() + 1; it != c.entries.rend(); ++it)
    v = Rat(*it) - 1 / v;
  return v;
}

Int binomial(const Int& n, const Int& k) {
  if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
  if (k > n) return 0;
  if (!k.fits_ulong_p())
    throw std::invalid_argument("binomial: k too large");
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
  return r;
}

}  // namespace seifert
