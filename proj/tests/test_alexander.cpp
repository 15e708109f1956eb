#include <doctest.h>

#include "seifert/alexander.hpp"
#include "oracles.hpp"

using namespace seifert;

namespace {

// brute-force expression count: iterate over all coefficient tuples
Int brute_count(const std::vector<Int>& gens, const Int& s) {
  if (s < 0) return 0;
  if (gens.empty()) return s == 0 ? 1 : 0;
  Int total = 0;
  std::vector<Int> rest(gens.begin() + 1, gens.end());
  for (Int used = 0; used <= s; used += gens.front())
    total += brute_count(rest, s - used);
  return total;
}

const IntegerPolynomial trefoil({1, -1, 1});

}  // namespace

TEST_CASE("count_expressions") {
  NumericalSemigroup s({2, 3});
  CHECK(s.count_expressions(6) == 2);  // 2+2+2 and 3+3
  CHECK(s.count_expressions(0) == 1);  // empty sum
  CHECK(s.count_expressions(1) == 0);

  NumericalSemigroup t({6, 10, 15});
  CHECK(t.count_expressions(30) == 3);

  // against the brute-force iterator
  for (Int v = 0; v <= 40; ++v) {
    CHECK(s.count_expressions(v) == brute_count({2, 3}, v));
    CHECK(t.count_expressions(v) == brute_count({6, 10, 15}, v));
  }

  CHECK_THROWS_AS(NumericalSemigroup({4, 6}), std::invalid_argument);
  CHECK_THROWS_AS(NumericalSemigroup({}), std::invalid_argument);
}

TEST_CASE("frobenius numbers") {
  CHECK(NumericalSemigroup({2, 3}).frobenius() == 1);
  CHECK(NumericalSemigroup({3, 5}).frobenius() == 7);
  CHECK(NumericalSemigroup({6, 10, 15}).frobenius() == 29);
  CHECK(NumericalSemigroup({1}).frobenius() == -1);
}

TEST_CASE("unique expression sets") {
  NumericalSemigroup s({2, 3});
  CHECK(s.unique_expression_set(6) ==
        std::vector<Int>{0, 2, 3, 4, 5, 7});  // not only the elements < 6

  // 0 always has the empty expression
  NumericalSemigroup t({6, 10, 15});
  auto star = t.unique_expression_set(30);
  CHECK(star.front() == 0);
  // every element of S_* has exactly one expression, and no two differ
  // by a multiple of alpha
  for (const Int& a : star) CHECK(t.count_expressions(a) == 1);
  for (const Int& a : star)
    for (const Int& b : star)
      if (a < b) CHECK((b - a) % 30 != 0);
}

TEST_CASE("alexander_fiber examples") {
  // any fiber over (2,3,.) is a trefoil
  for (long k : {1L, 5L, 7L, 11L, 25L}) {
    auto p = alexander_fiber(Multiplicities({2, 3, Int(k)}));
    CHECK(p == trefoil);
    CHECK(p.str() == "1 - t + t^2");
  }

  // unknotted fibers
  CHECK(alexander_fiber(Multiplicities({5, 1})) == IntegerPolynomial::one());
  CHECK(alexander_fiber(Multiplicities({7})) == IntegerPolynomial::one());
  CHECK(alexander_fiber(Multiplicities({2, 3})) == IntegerPolynomial::one());

  // regular fiber of Sigma(2,3,5): torus knot T(2,3) as well via a_4 = 1
  CHECK(alexander_fiber(Multiplicities({2, 3, 1})) == trefoil);

  auto q = alexander_fiber(Multiplicities({2, 3, 5, 7}));
  CHECK(q.degree() == 30);  // (n-2) alpha + 1 - sum alpha/a_j
  CHECK(verify_pm_one(q));
  CHECK(q.eval_at_one() == 1);
  CHECK(q.is_palindromic());
}

TEST_CASE("division and semigroup reconstruction agree") {
  std::mt19937_64 rng(61);
  std::vector<std::vector<Int>> tuples = {
      {2, 3, 5}, {2, 3, 7}, {3, 5, 7}, {2, 3, 5, 7}, {2, 5, 9}, {2, 3, 1}};
  for (int trial = 0; trial < 10; ++trial)
    tuples.push_back(testutil::random_tuple(rng, 3, 4, 12, true));
  for (const auto& t : tuples) {
    Multiplicities m(t);
    auto a = alexander_fiber(m);
    auto b = reconstruct_via_semigroup(m);
    CHECK(a == b);
    CHECK(verify_pm_one(a));
    CHECK(a.eval_at_one() == 1);
    CHECK(a.is_palindromic());
    CHECK(a.degree() % 2 == 0);
  }
}

TEST_CASE("m(k alpha) counts ordered partitions") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 20; ++trial) {
    auto t = testutil::random_tuple(rng, 3, 5, 12, true);
    Multiplicities m(t);
    auto s = NumericalSemigroup::for_fiber(m);
    Int alpha = m.alpha();
    Int n = static_cast<long>(m.size());
    for (Int k = 1; k <= 4; ++k)
      CHECK(s.count_expressions(k * alpha) == binomial(k + n - 2, n - 2));
  }
}

TEST_CASE("alexander polynomial ignores the fiber order") {
  auto base = alexander_fiber(Multiplicities({3, 5, 7}));
  for (long k : {1L, 2L, 4L, 8L, 11L, 22L})
    CHECK(alexander_fiber(Multiplicities({3, 5, Int(k)})) == base);
}

TEST_CASE("symmetrize") {
  auto s = symmetrize(trefoil);
  CHECK(s.half_degree == 1);
  CHECK(s.coeffs == std::vector<Int>{1, -1, 1});

  auto c = symmetrize(IntegerPolynomial::one());
  CHECK(c.half_degree == 0);
  CHECK(c.coeffs == std::vector<Int>{1});

  auto q = alexander_fiber(Multiplicities({2, 3, 5, 7}));
  auto sq = symmetrize(q);
  CHECK(sq.half_degree == 15);

  CHECK_THROWS_AS(symmetrize(IntegerPolynomial({1, -1})), std::invalid_argument);
  CHECK_THROWS_AS(symmetrize(IntegerPolynomial({1, 2, 2})), std::invalid_argument);
}

TEST_CASE("fox_milnor_verdict") {
  auto v = fox_milnor_verdict(trefoil);
  CHECK(v.verdict == SliceVerdict::Obstructed);

  v = fox_milnor_verdict(IntegerPolynomial::one());
  CHECK(v.verdict == SliceVerdict::NoObstruction);

  v = fox_milnor_verdict(alexander_fiber(Multiplicities({2, 3, 5, 7})));
  CHECK(v.verdict == SliceVerdict::Obstructed);

  CHECK_THROWS_AS(fox_milnor_verdict(IntegerPolynomial({-1, 2})),
                  std::logic_error);
  CHECK_THROWS_AS(fox_milnor_verdict(IntegerPolynomial({})),
                  std::invalid_argument);
}

TEST_CASE("verify_pm_one") {
  CHECK(verify_pm_one(trefoil));
  CHECK_FALSE(verify_pm_one(IntegerPolynomial({-1, 2})));
  CHECK(verify_pm_one(IntegerPolynomial({})));
}

TEST_CASE("obstruction exactly when Delta != 1") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 15; ++trial) {
    auto t = testutil::random_tuple(rng, 3, 4, 12, true);
    Multiplicities m(t);
    auto p = alexander_fiber(m);
    auto v = fox_milnor_verdict(p);
    CHECK((v.verdict == SliceVerdict::Obstructed) ==
          (p != IntegerPolynomial::one()));
  }
}

TEST_CASE("polynomial string forms") {
  CHECK(trefoil.str() == "1 - t + t^2");
  CHECK(IntegerPolynomial({0, 1}).str() == "t");
  CHECK(IntegerPolynomial({-2, 0, 3}).str() == "-2 + 3t^2");
  CHECK(IntegerPolynomial({}).str() == "0");
}
