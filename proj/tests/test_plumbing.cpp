#include <doctest.h>

#include "seifert/lattice.hpp"
#include "oracles.hpp"

#include <sstream>

using namespace seifert;

namespace {

SeifertInvariants inv_of(std::vector<Int> tuple) {
  return from_multiplicities(Multiplicities(std::move(tuple)));
}

GramLattice lattice_of(std::vector<Int> tuple) {
  return gram_matrix(plumbing_graph(inv_of(std::move(tuple))));
}

}  // namespace

TEST_CASE("plumbing graph shapes") {
  // Sigma(2,3,5): the E8 graph
  auto g = plumbing_graph(inv_of({2, 3, 5}));
  CHECK(g.central_weight == -2);
  REQUIRE(g.arms.size() == 3);
  CHECK(g.arms[0] == std::vector<Int>{-2});
  CHECK(g.arms[1] == std::vector<Int>{-2, -2});
  CHECK(g.arms[2] == std::vector<Int>{-2, -2, -2, -2});
  CHECK(g.rank() == 8);

  g = plumbing_graph(inv_of({2, 3, 7}));
  CHECK(g.central_weight == -1);
  REQUIRE(g.arms.size() == 3);
  CHECK(g.arms[0] == std::vector<Int>{-2});
  CHECK(g.arms[1] == std::vector<Int>{-3});
  CHECK(g.arms[2] == std::vector<Int>{-7});
  CHECK(g.rank() == 4);

  // b = (1,1,0): no arm for the order-1 slot
  g = plumbing_graph(inv_of({2, 3, 1}));
  CHECK(g.central_weight == -1);
  REQUIRE(g.arms.size() == 2);
  CHECK(g.arms[0] == std::vector<Int>{-2});
  CHECK(g.arms[1] == std::vector<Int>{-3});

  SeifertInvariants bad{1, {{2, 1}, {3, 2}}};  // rhs +1 data
  CHECK_THROWS_AS(plumbing_graph(bad), std::invalid_argument);
}

TEST_CASE("arm weights reproduce a_k/b_k") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    auto inv = inv_of(testutil::random_tuple(rng, 3, 5, 40));
    auto g = plumbing_graph(inv);
    std::size_t arm = 0;
    for (const auto& [a, b] : inv.pairs) {
      if (a == 1) continue;
      NegContFrac cf;
      for (const Int& w : g.arms[arm++]) cf.entries.push_back(-w);
      CHECK(eval_cont_frac(cf) == make_rat(a, b));
    }
    CHECK(arm == g.arms.size());
  }
}

TEST_CASE("gram matrices validate") {
  auto e8 = lattice_of({2, 3, 5});
  CHECK(e8.rank() == 8);
  CHECK(e8.det() == 1);

  auto single = GramLattice::from_matrix({{Int(-1)}});
  CHECK(single.det() == -1);

  CHECK(lattice_of({2, 3, 7}).det() == 1);   // rank 4: (-1)^4 |det|
  CHECK(lattice_of({2, 3, 1}).det() == -1);  // rank 3

  CHECK_THROWS_AS(GramLattice::from_matrix({{Int(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(GramLattice::from_matrix({{Int(-2), Int(0)}, {Int(0), Int(-2)}}),
                  std::invalid_argument);  // det 4
  CHECK_THROWS_AS(
      GramLattice::from_matrix({{Int(-1), Int(2)}, {Int(2), Int(-1)}}),
      std::invalid_argument);  // indefinite
  CHECK_THROWS_AS(
      GramLattice::from_matrix({{Int(-1), Int(2)}, {Int(1), Int(-1)}}),
      std::invalid_argument);  // not symmetric
}

TEST_CASE("d-invariant pinned values") {
  CHECK(d_invariant(lattice_of({2, 3, 5})) == 2);  // E8
  for (std::size_t n = 1; n <= 8; ++n)
    CHECK(d_invariant(GramLattice::diagonal(n)) == 0);
  CHECK(d_invariant(lattice_of({2, 3, 7})) == 0);
  CHECK(d_invariant(lattice_of({2, 3, 13})) == 0);
}

TEST_CASE("d of manifolds and orientation") {
  CHECK(d_of_manifold({+1, inv_of({5, 7, 11})}) == 2);
  CHECK(d_of_manifold({-1, inv_of({2, 3, 5})}) == -2);
  CHECK(d_of_manifold({+1, inv_of({2, 3, 1})}) == 0);  // S^3
  CHECK(d_of_manifold({+1, inv_of({5})}) == 0);        // S^3 again
}

TEST_CASE("direct sums and additivity") {
  auto e8 = lattice_of({2, 3, 5});
  auto z1 = GramLattice::diagonal(1);
  CHECK(d_invariant(direct_sum(e8, z1)) == 2);
  CHECK(d_invariant(direct_sum(z1, z1)) == 0);
  CHECK(d_invariant(direct_sum(e8, e8)) == 4);

  auto s = direct_sum(e8, lattice_of({2, 3, 7}));
  CHECK(s.rank() == 12);
  CHECK(d_invariant(s) == d_invariant(e8) + d_invariant(lattice_of({2, 3, 7})));
}

TEST_CASE("optimizer agrees with the naive wide-box oracle") {
  std::mt19937_64 rng(31);
  int done = 0;
  while (done < 20) {
    auto tuple = testutil::random_tuple(rng, 3, 4, 13);
    auto inv = inv_of(tuple);
    auto g = plumbing_graph(inv);
    if (g.rank() > 6) continue;
    auto L = gram_matrix(g);
    Int d = d_invariant(L);
    CHECK(d == testutil::naive_d(L, 1));
    CHECK(d == testutil::naive_d(L, 3));  // widening cannot increase the max
    ++done;
  }
}

TEST_CASE("d is stable under a_n -> a_n + alpha") {
  auto pairs = {std::vector<Int>{2, 3, 5}, {2, 3, 7}, {3, 5, 7}, {2, 3, 5, 7}};
  for (const auto& tuple : pairs) {
    Multiplicities m(tuple);
    Int alpha = m.alpha();
    std::vector<Int> shifted = tuple;
    shifted.back() += alpha;
    CHECK(d_of_manifold({+1, inv_of(tuple)}) ==
          d_of_manifold({+1, inv_of(shifted)}));
  }
}

TEST_CASE("d is an even integer on random lattices") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    auto L = lattice_of(testutil::random_tuple(rng, 3, 4, 15));
    Int d = d_invariant(L);
    CHECK(d % 2 == 0);
    CHECK(d >= 0);  // never negative for a definite unimodular lattice
  }
}

TEST_CASE("export_dot") {
  auto g = plumbing_graph(inv_of({2, 3, 5}));
  std::string dot = export_dot(g);
  CHECK(dot.find("graph plumbing {") == 0);
  std::size_t nodes = 0, edges = 0, pos = 0;
  while ((pos = dot.find("label=", pos)) != std::string::npos) ++nodes, ++pos;
  pos = 0;
  while ((pos = dot.find(" -- ", pos)) != std::string::npos) ++edges, ++pos;
  CHECK(nodes == 8);
  CHECK(edges == 7);

  auto single = plumbing_graph(inv_of({5}));
  std::string d1 = export_dot(single);
  CHECK(d1.find("v0") != std::string::npos);

  auto star = plumbing_graph(inv_of({2, 3, 7}));
  std::string d2 = export_dot(star);
  std::size_t e2 = 0;
  pos = 0;
  while ((pos = d2.find(" -- ", pos)) != std::string::npos) ++e2, ++pos;
  CHECK(e2 == 3);  // 4-vertex star
}
