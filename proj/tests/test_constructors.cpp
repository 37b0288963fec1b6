#include <doctest.h>

#include "oracles.hpp"
#include "resichain/constructors.hpp"
#include "resichain/error.hpp"

using namespace resichain;

TEST_CASE("go") {
  CHECK(go(0).size() == 1);
  auto const g2 = go(2);
  CHECK(g2.mult(*g2.find_label("c1"), *g2.find_label("c2")) == *g2.find_label("c2"));
  auto const g3 = go(3);
  CHECK(g3.left_residual(*g3.find_label("c1"), *g3.find_label("c3")) == *g3.find_label("c3"));
  for (int n = 0; n <= 6; ++n) {
    auto const g = go(n);
    for (Element x = 0; x < g.size(); ++x)
      for (Element y = 0; y < g.size(); ++y) REQUIRE(g.mult(x, y) == std::min(x, y));
  }
}

TEST_CASE("com") {
  CHECK(com(0, 0).predicates() == ChainPredicateReport{true, true, true, true});
  auto const c10 = com(1, 0);
  CHECK(c10.mult(*c10.find_label("a0"), *c10.find_label("b1")) == *c10.find_label("b1"));
  auto const c11 = com(1, 1);
  CHECK(c11.mult(*c11.find_label("a1"), *c11.find_label("a0")) == *c11.find_label("a0"));
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      auto const c = com(m, n);
      REQUIRE(c.size() == m + n + 3);
      REQUIRE(c.is_commutative());
      REQUIRE(c.is_idempotent());
      REQUIRE(c.unit() == m + 1);
    }
}

TEST_CASE("nested sums") {
  auto const s = nested_sum(std::vector<FiniteChain>{com(0, 0), go(1)}).chain;
  REQUIRE(s.size() == 4);
  // b_0 < c_1 < e < a_0
  CHECK(s.label(0).rfind("b0", 0) == 0);
  CHECK(s.label(1).rfind("c1", 0) == 0);
  CHECK(s.unit() == 2);
  CHECK(s.label(3).rfind("a0", 0) == 0);
  CHECK(s.mult(3, 1) == 3);

  try {
    nested_sum(std::vector<FiniteChain>{go(1), com(0, 0)});
    FAIL("expected NotAdmissible");
  } catch (const Error& e) {
    CHECK(e.code() == "NotAdmissible");
    CHECK(e.witness() == std::vector<long long>{0});
  }
  CHECK(nested_sum(std::vector<FiniteChain>{}).chain.size() == 1);
}

TEST_CASE("nested sums of star-involutive chains stay star-involutive") {
  std::vector<FiniteChain> cur;
  for (int k = 1; k <= 5; ++k) {
    cur.push_back(com(0, 0));
    auto const s = nested_sum(cur).chain;
    REQUIRE(s.size() == 2 * k + 1);
    REQUIRE(s.predicates().star_involutive);
    REQUIRE(s.is_idempotent());
  }
}

TEST_CASE("nested sum is associative up to isomorphism") {
  std::vector<FiniteChain> const pieces{com(1, 0), com(0, 1), go(2)};
  auto const flat = nested_sum(pieces).chain;
  auto const inner = nested_sum(std::vector<FiniteChain>{pieces[1], pieces[2]}).chain;
  auto const grouped = nested_sum(std::vector<FiniteChain>{pieces[0], inner}).chain;
  CHECK(iso_equal(flat, grouped));
}

TEST_CASE("nested sum products come from the outer summand") {
  auto const ns = nested_sum(std::vector<FiniteChain>{com(1, 1), com(0, 0), go(2)});
  auto const& d = ns.descriptor;
  REQUIRE(d.size() == 3);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      for (Element x : d.placement[i])
        for (Element y : d.placement[j]) {
          if (x == ns.chain.unit() || y == ns.chain.unit()) continue;
          REQUIRE(ns.chain.mult(x, y) == x);
          REQUIRE(ns.chain.mult(y, x) == x);
        }
}

TEST_CASE("make_from_spec") {
  CHECK(iso_equal(make_from_spec("go:3"), go(3)));
  CHECK(iso_equal(make_from_spec("com:1,2"), com(1, 2)));
  CHECK(iso_equal(make_from_spec("sum:com:1,1+go:2"), make_from_spec("com:1,1+go:2")));
  CHECK_THROWS_AS(make_from_spec("go:x"), Error);
  CHECK_THROWS_AS(make_from_spec("cube:3"), Error);
}
