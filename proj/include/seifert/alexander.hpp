#pragma once

#include "seifert/seifert_data.hpp"

#include <string>
#include <vector>

namespace seifert {

// Numerical semigroup generated by positive integers with gcd 1. Holds a
// lazily grown table of expression counts m(s) = #{x >= 0 : sum x_j g_j = s}.
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<Int> generators);
  // Generators alpha/a_1, ..., alpha/a_{n-1} for a tuple with the fiber
  // in the last slot; requires at least two slots.
  static NumericalSemigroup for_fiber(const Multiplicities& m);

  const std::vector<Int>& generators() const { return gens_; }
  Int count_expressions(const Int& s) const;  // m(s)
  bool contains(const Int& s) const;
  // Largest integer not in the semigroup; -1 when there is none.
  Int frobenius() const;
  // S_* = { s in S : s - alpha not in S }, the unique-expression set;
  // finite, scanned up to frobenius() + alpha.
  std::vector<Int> unique_expression_set(const Int& alpha) const;

 private:
  void ensure(std::size_t upto) const;
  std::vector<Int> gens_;
  std::vector<std::size_t> g_;
  mutable std::vector<Int> counts_;
  mutable Int frobenius_ = -2;  // -2: not yet computed
};

// Dense integer polynomial, constant term first; the zero polynomial has
// no coefficients.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<Int> coeffs);
  static IntegerPolynomial one();

  const std::vector<Int>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long long degree() const;  // -1 for the zero polynomial
  const Int& coeff(std::size_t k) const;
  Int eval_at_one() const;
  bool is_palindromic() const;

  IntegerPolynomial operator*(const IntegerPolynomial& rhs) const;
  IntegerPolynomial operator-(const IntegerPolynomial& rhs) const;
  // Exact division; throws std::logic_error on a nonzero remainder.
  IntegerPolynomial divide_exact(const IntegerPolynomial& divisor) const;

  bool operator==(const IntegerPolynomial&) const = default;

  // Human-readable form, e.g. "1 - t + t^2".
  std::string str() const;

 private:
  std::vector<Int> c_;
};

// t^{-m} ... t^{m} coefficients of a symmetric Laurent polynomial.
struct SymmetricLaurent {
  long long half_degree = 0;
  std::vector<Int> coeffs;  // exponent -half_degree first
};

// Alexander polynomial of the last-slot fiber:
//   (1 - t^alpha)^{n-2} (1 - t) / prod_{j<n} (1 - t^{alpha/a_j}),
// an exact division, independent of the last entry. Tuples with a single
// slot give 1 (an unknotted fiber).
IntegerPolynomial alexander_fiber(const Multiplicities& m);

// The same polynomial assembled from the unique-expression set:
// coefficient of t^j is sum_k B[j - k alpha] where B is the indicator
// sum of t^s - t^{s+1} over S_*.
IntegerPolynomial reconstruct_via_semigroup(const Multiplicities& m);

// Centers a palindromic polynomial of even degree 2m as t^{-m} ... t^m.
SymmetricLaurent symmetrize(const IntegerPolynomial& p);

enum class SliceVerdict { Obstructed, NoObstruction };

struct FoxMilnorResult {
  SliceVerdict verdict;
  std::string reason;
};

// Fox-Milnor test specialized to fiber polynomials (all nonzero
// coefficients +-1): any nonconstant such polynomial admits no
// factorization g(t) g(1/t), because the constant coefficient of the
// symmetrized product would be a sum of at least two positive squares.
FoxMilnorResult fox_milnor_verdict(const IntegerPolynomial& p);

// Every coefficient in {-1, 0, 1}.
bool verify_pm_one(const IntegerPolynomial& p);

}  // namespace seifert
