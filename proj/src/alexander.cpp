#include "seifert/alexander.hpp"

#include <algorithm>
#include <sstream>

namespace seifert {

namespace {

constexpr std::size_t kMaxTable = std::size_t(1) << 26;

std::size_t to_index(const Int& v, const char* what) {
  if (v < 0) throw std::invalid_argument(std::string(what) + ": negative value");
  if (!v.fits_ulong_p() || v.get_ui() > kMaxTable)
    throw std::invalid_argument(std::string(what) + ": value too large");
  return static_cast<std::size_t>(v.get_ui());
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<Int> generators) {
  if (generators.empty())
    throw std::invalid_argument("NumericalSemigroup: no generators");
  Int g = 0;
  for (const Int& x : generators) {
    if (x < 1)
      throw std::invalid_argument("NumericalSemigroup: generators must be positive");
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g != 1)
    throw std::invalid_argument("NumericalSemigroup: generators must have gcd 1");
  std::sort(generators.begin(), generators.end());
  gens_ = std::move(generators);
  for (const Int& x : gens_) g_.push_back(to_index(x, "NumericalSemigroup"));
}

NumericalSemigroup NumericalSemigroup::for_fiber(const Multiplicities& m) {
  if (m.size() < 2)
    throw std::invalid_argument("for_fiber: need at least two slots");
  Int alpha = m.alpha();
  std::vector<Int> gens;
  for (std::size_t j = 0; j + 1 < m.size(); ++j)
    gens.push_back(alpha / m.entries()[j]);
  return NumericalSemigroup(std::move(gens));
}

void NumericalSemigroup::ensure(std::size_t upto) const {
  if (counts_.size() > upto) return;
  counts_.assign(upto + 1, Int(0));
  counts_[0] = 1;
  for (std::size_t g : g_)
    for (std::size_t s = g; s <= upto; ++s)
      if (counts_[s - g] != 0) counts_[s] += counts_[s - g];
}

Int NumericalSemigroup::count_expressions(const Int& s) const {
  if (s < 0) return 0;
  std::size_t idx = to_index(s, "count_expressions");
  ensure(idx);
  return counts_[idx];
}

bool NumericalSemigroup::contains(const Int& s) const {
  if (s < 0) return false;
  return count_expressions(s) != 0;
}

Int NumericalSemigroup::frobenius() const {
  if (frobenius_ != -2) return frobenius_;
  std::size_t gmin = g_.front();
  if (gmin == 1) {
    frobenius_ = -1;
    return frobenius_;
  }
  // grow until gmin consecutive members appear; everything beyond the
  // run is then in the semigroup
  std::size_t bound = 2 * (g_.front() + g_.back());
  for (;;) {
    ensure(bound);
    std::size_t run = 0;
    Int last_gap = -1;
    for (std::size_t s = 0; s <= bound; ++s) {
      if (counts_[s] != 0) {
        if (++run >= gmin) {
          frobenius_ = last_gap;
          return frobenius_;
        }
      } else {
        run = 0;
        last_gap = s;
      }
    }
    bound *= 2;
    if (bound > kMaxTable)
      throw std::invalid_argument("frobenius: table bound exceeded");
  }
}

std::vector<Int> NumericalSemigroup::unique_expression_set(const Int& alpha) const {
  if (alpha < 1)
    throw std::invalid_argument("unique_expression_set: alpha must be positive");
  Int f = frobenius();
  std::size_t a = to_index(alpha, "unique_expression_set");
  std::size_t bound = to_index(f + alpha, "unique_expression_set");
  ensure(bound);
  std::vector<Int> out;
  for (std::size_t s = 0; s <= bound; ++s) {
    if (counts_[s] == 0) continue;
    if (s >= a && counts_[s - a] != 0) continue;  // s - alpha in S
    out.emplace_back(static_cast<unsigned long>(s));
  }
  return out;
}

IntegerPolynomial::IntegerPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntegerPolynomial IntegerPolynomial::one() {
  return IntegerPolynomial({Int(1)});
}

long long IntegerPolynomial::degree() const {
  return static_cast<long long>(c_.size()) - 1;
}

const Int& IntegerPolynomial::coeff(std::size_t k) const {
  static const Int zero = 0;
  return k < c_.size() ? c_[k] : zero;
}

Int IntegerPolynomial::eval_at_one() const {
  Int s = 0;
  for (const Int& c : c_) s += c;
  return s;
}

bool IntegerPolynomial::is_palindromic() const {
  for (std::size_t i = 0, j = c_.size(); i < j; ++i)
    if (c_[i] != c_[j - 1 - i]) return false;
  return true;
}

IntegerPolynomial IntegerPolynomial::operator*(const IntegerPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<Int> out(c_.size() + rhs.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j)
      if (rhs.c_[j] != 0) out[i + j] += c_[i] * rhs.c_[j];
  }
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial IntegerPolynomial::operator-(const IntegerPolynomial& rhs) const {
  std::vector<Int> out(std::max(c_.size(), rhs.c_.size()), Int(0));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - rhs.coeff(i);
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial IntegerPolynomial::divide_exact(const IntegerPolynomial& divisor) const {
  if (divisor.is_zero())
    throw std::invalid_argument("divide_exact: zero divisor");
  if (is_zero()) return {};
  if (c_.size() < divisor.c_.size())
    throw std::logic_error("divide_exact: nonzero remainder");

  const Int& lead = divisor.c_.back();
  if (lead != 1 && lead != -1)
    throw std::invalid_argument("divide_exact: leading coefficient must be a unit");
  // positions of the divisor's nonzero coefficients, highest first
  std::vector<std::size_t> support;
  for (std::size_t k = divisor.c_.size(); k-- > 0;)
    if (divisor.c_[k] != 0) support.push_back(k);

  std::vector<Int> rem = c_;
  std::vector<Int> quot(c_.size() - divisor.c_.size() + 1, Int(0));
  for (std::size_t top = rem.size(); top-- >= divisor.c_.size();) {
    if (rem[top] == 0) continue;
    std::size_t shift = top - (divisor.c_.size() - 1);
    Int factor = (lead == 1) ? rem[top] : Int(-rem[top]);
    quot[shift] = factor;
    for (std::size_t k : support) rem[shift + k] -= factor * divisor.c_[k];
  }
  for (const Int& r : rem)
    if (r != 0) throw std::logic_error("divide_exact: nonzero remainder");
  return IntegerPolynomial(std::move(quot));
}

std::string IntegerPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Int a = c_[k];
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    Int mag = abs(a);
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) {
      os << "t";
      if (k >= 2) os << "^" << k;
    }
  }
  return os.str();
}

namespace {

// 1 - t^k as a polynomial
IntegerPolynomial one_minus_power(std::size_t k) {
  std::vector<Int> c(k + 1, Int(0));
  c[0] = 1;
  c[k] = -1;
  return IntegerPolynomial(std::move(c));
}

}  // namespace

IntegerPolynomial alexander_fiber(const Multiplicities& m) {
  std::size_t n = m.size();
  if (n == 0)
    throw std::invalid_argument("alexander_fiber: no fiber slot present");
  if (n == 1) return IntegerPolynomial::one();

  std::size_t alpha = to_index(m.alpha(), "alexander_fiber");
  IntegerPolynomial num = one_minus_power(1);
  for (std::size_t k = 0; k + 2 < n; ++k) num = num * one_minus_power(alpha);
  IntegerPolynomial den = IntegerPolynomial::one();
  for (std::size_t j = 0; j + 1 < n; ++j)
    den = den * one_minus_power(to_index(m.alpha() / m.entries()[j],
                                         "alexander_fiber"));

  IntegerPolynomial delta = num.divide_exact(den);

  Int expected = Int(n - 2) * Int(static_cast<unsigned long>(alpha)) + 1;
  for (std::size_t j = 0; j + 1 < n; ++j) expected -= m.alpha() / m.entries()[j];
  if (delta.degree() != expected.get_si())
    throw std::logic_error("alexander_fiber: unexpected degree");
  if (delta.eval_at_one() != 1)
    throw std::logic_error("alexander_fiber: Delta(1) != 1");
  return delta;
}

IntegerPolynomial reconstruct_via_semigroup(const Multiplicities& m) {
  std::size_t n = m.size();
  if (n == 0)
    throw std::invalid_argument("reconstruct_via_semigroup: no fiber slot present");
  if (n == 1) return IntegerPolynomial::one();

  Int alpha_z = m.alpha();
  std::size_t alpha = to_index(alpha_z, "reconstruct_via_semigroup");
  NumericalSemigroup s = NumericalSemigroup::for_fiber(m);
  std::vector<Int> star = s.unique_expression_set(alpha_z);

  // B = sum over S_* of (t^s - t^{s+1})
  std::size_t bmax = static_cast<std::size_t>(star.back().get_ui()) + 1;
  std::vector<Int> B(bmax + 1, Int(0));
  for (const Int& e : star) {
    std::size_t idx = static_cast<std::size_t>(e.get_ui());
    B[idx] += 1;
    B[idx + 1] -= 1;
  }

  Int deg = Int(n - 2) * alpha_z + 1;
  for (std::size_t j = 0; j + 1 < n; ++j) deg -= alpha_z / m.entries()[j];
  std::size_t D = to_index(deg, "reconstruct_via_semigroup");

  // coefficient of t^j in B(t) * sum_k t^{k alpha}
  auto coeff_at = [&](std::size_t j) {
    Int c = 0;
    for (std::size_t k = 0; k * alpha <= j; ++k) {
      std::size_t r = j - k * alpha;
      if (r <= bmax) c += B[r];
    }
    return c;
  };

  std::vector<Int> out(D + 1);
  for (std::size_t j = 0; j <= D; ++j) out[j] = coeff_at(j);
  // the series must terminate at the expected degree
  for (std::size_t j = D + 1; j <= D + alpha; ++j)
    if (coeff_at(j) != 0)
      throw std::logic_error("reconstruct_via_semigroup: series does not terminate");
  return IntegerPolynomial(std::move(out));
}

SymmetricLaurent symmetrize(const IntegerPolynomial& p) {
  if (p.is_zero())
    throw std::invalid_argument("symmetrize: zero polynomial");
  if (p.degree() % 2 != 0)
    throw std::invalid_argument("symmetrize: odd degree");
  if (!p.is_palindromic())
    throw std::invalid_argument("symmetrize: polynomial is not palindromic");
  SymmetricLaurent out;
  out.half_degree = p.degree() / 2;
  out.coeffs = p.coeffs();
  return out;
}

bool verify_pm_one(const IntegerPolynomial& p) {
  for (const Int& c : p.coeffs())
    if (c < -1 || c > 1) return false;
  return true;
}

FoxMilnorResult fox_milnor_verdict(const IntegerPolynomial& p) {
  if (p.is_zero())
    throw std::invalid_argument("fox_milnor_verdict: zero polynomial");
  if (!verify_pm_one(p))
    throw std::logic_error(
        "fox_milnor_verdict: coefficients outside {-1,0,1}; fiber "
        "polynomials never do this");
  if (p.degree() == 0) {
    if (p.coeff(0) != 1)
      throw std::invalid_argument("fox_milnor_verdict: not a fiber polynomial");
    return {SliceVerdict::NoObstruction,
            "Alexander polynomial is 1; no Fox-Milnor obstruction (the "
            "fiber is the unknot in S^3)."};
  }
  return {SliceVerdict::Obstructed,
          "Delta is nonconstant with all nonzero coefficients +-1, so no "
          "factorization g(t)g(1/t) exists: the constant coefficient of the "
          "symmetrized product would be a sum of at least two positive "
          "squares. The fiber is not topologically slice in any homology "
          "ball (assuming the generalized Fox-Milnor condition for knots in "
          "homology spheres)."};
}

}  // namespace seifert
