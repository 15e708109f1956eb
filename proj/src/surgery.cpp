#include "seifert/surgery.hpp"

#include "seifert/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace seifert {

namespace {

std::string tuple_str(const SeifertInvariants& inv) {
  std::ostringstream os;
  os << "Sigma(";
  for (std::size_t j = 0; j < inv.pairs.size(); ++j)
    os << (j ? "," : "") << inv.pairs[j].first.get_str();
  os << ")";
  return os.str();
}

void require_canonical(const SeifertInvariants& y) {
  if (y.pairs.empty())
    throw std::invalid_argument("surgery: no fiber slot present");
  for (const auto& [a, b] : y.pairs) {
    bool ok = (a == 1) ? (b == 0) : (a >= 2 && b >= 1 && b < a);
    if (!ok) throw std::invalid_argument("surgery: non-canonical invariants");
  }
}

}  // namespace

SurgeryContext surgery_context(const SeifertInvariants& y, long long m) {
  require_canonical(y);
  SurgeryContext ctx;
  ctx.m = m;
  ctx.alpha = y.alpha();
  Int num = ctx.alpha * y.last_b() + 1;
  if (!mpz_divisible_p(num.get_mpz_t(), y.last_a().get_mpz_t()))
    throw std::logic_error("surgery_context: beta is not an integer");
  ctx.beta = num / y.last_a();
  if (ctx.alpha > 1) {
    mpz_fdiv_qr(ctx.q.get_mpz_t(), ctx.r.get_mpz_t(), y.last_a().get_mpz_t(),
                ctx.alpha.get_mpz_t());
    if (ctx.r == 0)
      throw std::logic_error("surgery_context: a_n divisible by alpha");
  } else {
    ctx.q = y.last_a();
    ctx.r = 0;
  }
  return ctx;
}

SurgeryResult surger_fiber(const SeifertInvariants& y, long long m) {
  SurgeryContext ctx = surgery_context(y, m);
  const Int& an = y.last_a();
  const Int& bn = y.last_b();

  if (m == 0) return {{+1, y}, an};

  Int t = an - to_int(m) * ctx.alpha;
  if (t == 0)
    throw std::invalid_argument(
        "surger_fiber: coefficient 1/" + std::to_string(m) +
        " degenerates on the unknot (a_n = m alpha); the result is S^3");

  std::vector<std::pair<Int, Int>> pairs;
  pairs.reserve(y.pairs.size());
  Int e_raw;
  int sign;
  if (t > 0) {
    sign = +1;
    e_raw = y.e;
    for (std::size_t j = 0; j + 1 < y.pairs.size(); ++j)
      pairs.push_back(y.pairs[j]);
    pairs.emplace_back(t, bn - to_int(m) * ctx.beta);
  } else {
    sign = -1;
    e_raw = Int(y.pairs.size()) - y.e;
    for (std::size_t j = 0; j + 1 < y.pairs.size(); ++j)
      pairs.emplace_back(y.pairs[j].first, y.pairs[j].first - y.pairs[j].second);
    pairs.emplace_back(-t, to_int(m) * (ctx.alpha - ctx.beta) + bn - an);
  }

  SeifertInvariants inv = canonicalize(e_raw, std::move(pairs));
  if (!verify_eq1(inv, -1))
    throw std::logic_error("surger_fiber: surgered data violates the -1 convention");
  return {{sign, std::move(inv)}, abs(t)};
}

OrientedSeifert surger_oriented(const OrientedSeifert& y, long long m) {
  SurgeryResult r = surger_fiber(y.inv, y.sign < 0 ? -m : m);
  return {y.sign * r.result.sign, std::move(r.result.inv)};
}

SeifertInvariants cross_case(const SeifertInvariants& y) {
  require_canonical(y);
  SurgeryContext ctx = surgery_context(y, 1);
  const Int& an = y.last_a();
  const Int& bn = y.last_b();
  if (an >= ctx.alpha)
    throw std::invalid_argument("cross_case: requires a_n < alpha");

  SeifertInvariants out;
  out.e = Int(y.pairs.size()) - y.e;
  for (std::size_t j = 0; j + 1 < y.pairs.size(); ++j)
    out.pairs.emplace_back(y.pairs[j].first,
                           y.pairs[j].first - y.pairs[j].second);
  Int a_new = ctx.alpha - an;
  Int b_new = bn - ctx.beta + a_new;
  out.pairs.emplace_back(a_new, b_new);

  if (a_new > 1) {
    if (!(b_new > 0 && b_new < a_new))
      throw std::logic_error("cross_case: last pair out of convention");
  } else if (b_new != 0) {
    throw std::logic_error("cross_case: expected b' = 0 for a' = 1");
  }
  if (!verify_eq1(out, -1))
    throw std::logic_error("cross_case: output violates the -1 convention");
  return out;
}

Rat fiber_slope(const SeifertInvariants& y) {
  require_canonical(y);
  const Int& an = y.last_a();
  if (an == 1) return Rat(0);
  return make_rat(-mod_inverse(y.last_b(), an), an);
}

WitnessReport infinite_order_witness(const SeifertInvariants& y) {
  require_canonical(y);
  const Int& an = y.last_a();
  int singular_other = 0;
  for (std::size_t j = 0; j + 1 < y.pairs.size(); ++j)
    if (y.pairs[j].first >= 2) ++singular_other;
  bool fiber_singular = an >= 2;
  int total_singular = singular_other + (fiber_singular ? 1 : 0);
  bool in_s3 = total_singular < 3;
  bool torus_knot = in_s3 && !fiber_singular && singular_other == 2;
  if (in_s3 && !torus_knot)
    throw std::invalid_argument(
        "infinite_order_witness: the chosen fiber is the unknot in S^3; "
        "every 1/m surgery yields S^3 and no obstruction exists");

  WitnessReport w;
  if (y.e > 1) {
    w.m = 0;
    w.central = y.e;
    w.result = {+1, y};
    w.justification = tuple_str(y) + " itself has central invariant " +
                      y.e.get_str() +
                      " > 1, hence infinite order in the homology cobordism "
                      "group (Neumann-Zagier).";
    return w;
  }

  SurgeryContext ctx = surgery_context(y, 0);
  Int m_big = ctx.q + 1;
  if (!m_big.fits_slong_p())
    throw std::invalid_argument("infinite_order_witness: coefficient too large");
  w.m = m_big.get_si();
  SurgeryResult res = surger_fiber(y, w.m);
  w.result = res.result;
  w.central = res.result.inv.e;
  if (w.central <= 1)
    throw std::logic_error("infinite_order_witness: expected central invariant > 1");

  std::ostringstream os;
  os << "1/" << w.m << " surgery on the order-" << an.get_str()
     << " fiber yields -" << tuple_str(res.result.inv)
     << " with central invariant " << w.central.get_str()
     << " > 1, hence infinite order (Neumann-Zagier).";
  if (torus_knot) {
    w.externally_justified = true;
    os << " The fiber is a torus knot in S^3; +1 surgery gives "
          "-Sigma(p,q,pq-1), a family known to be of infinite order "
          "(Furuta).";
  }
  w.justification = os.str();
  return w;
}

DSurvey d_survey(const SeifertInvariants& y, long long lo, long long hi) {
  if (lo > hi) throw std::invalid_argument("d_survey: empty range");
  DSurvey s;
  for (long long m = lo; m <= hi; ++m) {
    SurgeryResult r = surger_fiber(y, m);
    s.values.emplace_back(m, d_of_manifold(r.result));
  }
  for (const auto& [m, d] : s.values)
    if (std::find(s.distinct.begin(), s.distinct.end(), d) == s.distinct.end())
      s.distinct.push_back(d);
  std::sort(s.distinct.begin(), s.distinct.end());
  if (s.distinct.size() > 2)
    throw std::logic_error(
        "d_survey: more than two distinct values; this contradicts the "
        "two-value bound for fiber surgeries");
  return s;
}

}  // namespace seifert
