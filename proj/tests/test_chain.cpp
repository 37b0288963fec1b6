#include <doctest.h>

#include "oracles.hpp"
#include "resichain/constructors.hpp"
#include "resichain/error.hpp"

using namespace resichain;

namespace {

std::vector<ViolationKind> kinds(const ValidationResult& r) {
  std::vector<ViolationKind> out;
  if (auto* v = std::get_if<std::vector<Violation>>(&r))
    for (auto const& x : *v) out.push_back(x.kind);
  return out;
}

bool has(const std::vector<ViolationKind>& ks, ViolationKind k) { return std::find(ks.begin(), ks.end(), k) != ks.end(); }

std::vector<FiniteChain> pool(int max, EnumerationFilter f) {
  std::vector<FiniteChain> out;
  for (int n = 1; n <= max; ++n)
    for (auto& c : enumerate_chains(n, f)) out.push_back(c);
  return out;
}

}  // namespace

TEST_CASE("validate accepts Go_2 given as pointwise minimum") {
  auto r = FiniteChain::validate(3, 2, {0, 0, 0, 0, 1, 1, 0, 1, 2});
  REQUIRE(std::holds_alternative<FiniteChain>(r));
  CHECK(iso_equal(std::get<FiniteChain>(r), go(2)));
}

TEST_CASE("validate rejects broken tables") {
  auto const monotone = kinds(FiniteChain::validate(2, 1, {1, 0, 0, 1}));
  CHECK(has(monotone, ViolationKind::NotMonotone));
  auto const absorb = kinds(FiniteChain::validate(2, 1, {0, 1, 1, 1}));
  CHECK(has(absorb, ViolationKind::NotResiduated));
  CHECK(has(kinds(FiniteChain::validate(2, 5, {0, 0, 0, 1})), ViolationKind::UnitOutOfRange));
  CHECK(has(kinds(FiniteChain::validate(2, 1, {0, 0, 0})), ViolationKind::MalformedTable));
  CHECK_THROWS_AS(FiniteChain::make(2, 1, {1, 0, 0, 1}), Error);
}

TEST_CASE("residuals against brute force") {
  auto const g2 = go(2);
  CHECK(g2.left_residual(*g2.find_label("c1"), *g2.find_label("c2")) == *g2.find_label("c2"));
  auto const c11 = com(1, 1);
  CHECK(c11.left_residual(*c11.find_label("a1"), *c11.find_label("b1")) == *c11.find_label("b1"));
  for (auto const& c : pool(5, {})) {
    for (Element x = 0; x < c.size(); ++x) {
      CHECK(c.left_residual(c.unit(), x) == x);
      for (Element y = 0; y < c.size(); ++y) {
        REQUIRE(c.left_residual(x, y) == oracle::ldiv(c, x, y));
        REQUIRE(c.right_residual(y, x) == oracle::rdiv(c, y, x));
        for (Element z = 0; z < c.size(); ++z) {
          bool const lhs = c.mult(x, y) <= z;
          REQUIRE(lhs == (y <= residual(c, x, z, Side::Left)));
          REQUIRE(lhs == (x <= residual(c, y, z, Side::Right)));
        }
      }
    }
  }
}

TEST_CASE("idempotent products and the bounds xy in [x meet y, x join y]") {
  for (auto const& c : pool(6, {false, true, false})) {
    for (Element x = 0; x < c.size(); ++x)
      for (Element y = 0; y < c.size(); ++y) {
        auto const p = c.mult(x, y);
        REQUIRE((p == x || p == y));
        if (p <= c.unit()) REQUIRE(p == std::min(x, y));
        if (p >= c.unit()) REQUIRE(p == std::max(x, y));
      }
  }
}

TEST_CASE("derived operations") {
  auto const c11 = com(1, 1);
  auto L = [&](const char* s) { return *c11.find_label(s); };
  CHECK(c11.star(L("a1")) == L("b0"));
  CHECK(c11.star(L("b1")) == L("a0"));
  CHECK(derived(c11, L("e"), Derived::Star) == L("e"));
  auto const g3 = go(3);
  for (Element x = 0; x < g3.size(); ++x) CHECK(g3.star(x) == g3.unit());
}

TEST_CASE("predicates") {
  CHECK(go(2).predicates() == ChainPredicateReport{true, true, false, false});
  CHECK(com(1, 1).predicates() == ChainPredicateReport{true, true, false, true});
  CHECK(com(0, 0).predicates() == ChainPredicateReport{true, true, true, true});
}

TEST_CASE("generated subalgebras") {
  auto const c22 = com(2, 2);
  std::vector<Element> seed{*c22.find_label("a2")};
  auto const got = subalgebra_generated(c22, seed);
  std::vector<Element> want{*c22.find_label("b0"), c22.unit(), *c22.find_label("a2"), *c22.find_label("a0")};
  std::sort(want.begin(), want.end());
  CHECK(got == want);
  auto const g3 = go(3);
  std::vector<Element> s2{*g3.find_label("c2")};
  CHECK(subalgebra_generated(g3, s2) == std::vector<Element>{*g3.find_label("c2"), g3.unit()});
  std::vector<Element> unit{g3.unit()};
  CHECK(subalgebra_generated(g3, unit) == unit);
  for (auto const& c : pool(5, {}))
    for (Element x = 0; x < c.size(); ++x) {
      std::vector<Element> sx{x};
      REQUIRE(is_subuniverse(c, subalgebra_generated(c, sx)));
    }
}

TEST_CASE("subuniverses are exactly the closed subsets") {
  for (auto const& c : pool(5, {})) {
    std::size_t brute = 0;
    for (unsigned mask = 0; mask < (1u << c.size()); ++mask) {
      std::vector<Element> u;
      for (Element x = 0; x < c.size(); ++x)
        if (mask >> x & 1) u.push_back(x);
      if (std::find(u.begin(), u.end(), c.unit()) == u.end()) continue;
      bool closed = true;
      for (Element x : u)
        for (Element y : u)
          for (Element v : {c.mult(x, y), oracle::ldiv(c, x, y), oracle::rdiv(c, x, y)})
            closed = closed && std::find(u.begin(), u.end(), v) != u.end();
      brute += closed;
    }
    REQUIRE(subuniverses(c).size() == brute);
  }
}

TEST_CASE("canonical signatures") {
  CHECK(iso_equal(go(2), go(2)));
  CHECK_FALSE(iso_equal(go(2), com(0, 0)));
  CHECK_FALSE(iso_equal(com(1, 0), com(0, 1)));
  CHECK(canonical_signature_hex(go(1)).size() == 2 * canonical_signature(go(1)).size());
}

TEST_CASE("enumeration") {
  CHECK(enumerate_chains(1, {}).size() == 1);
  auto const three = enumerate_chains(3, {true, true, false});
  REQUIRE(three.size() == 2);
  CHECK(std::any_of(three.begin(), three.end(), [](auto const& c) { return iso_equal(c, go(2)); }));
  CHECK(std::any_of(three.begin(), three.end(), [](auto const& c) { return iso_equal(c, com(0, 0)); }));
  CHECK(enumerate_chains(5, {true, true, false}).size() == 8);
  CHECK_THROWS_AS(enumerate_chains(9, {}, 7), Error);

  for (EnumerationFilter f : {EnumerationFilter{}, EnumerationFilter{true, false, false},
                              EnumerationFilter{false, true, false}, EnumerationFilter{true, true, true}}) {
    auto const cs = enumerate_chains(4, f);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      auto const& c = cs[i];
      REQUIRE(std::holds_alternative<FiniteChain>(FiniteChain::validate(c.size(), c.unit(), c.table())));
      if (f.commutative) REQUIRE(c.is_commutative());
      if (f.idempotent) REQUIRE(c.is_idempotent());
      if (f.star_involutive) REQUIRE(c.predicates().star_involutive);
      for (std::size_t j = 0; j < i; ++j) REQUIRE_FALSE(iso_equal(cs[i], cs[j]));
    }
  }
}

TEST_CASE("enumeration of all size-3 chains matches a raw table scan") {
  // Raw scan: every table on 3 elements with every unit, deduplicated.
  std::set<std::vector<std::uint8_t>> seen;
  std::vector<Element> m(9, 0);
  for (int code = 0; code < 19683; ++code) {
    int k = code;
    for (auto& v : m) {
      v = k % 3;
      k /= 3;
    }
    for (Element u = 0; u < 3; ++u) {
      auto r = FiniteChain::validate(3, u, m);
      if (auto* c = std::get_if<FiniteChain>(&r)) seen.insert(canonical_signature(*c));
    }
  }
  CHECK(enumerate_chains(3, {}).size() == seen.size());
}

TEST_CASE("parallel enumeration is identical") {
  auto const a = enumerate_chains(6, {true, true, false}, std::nullopt, 1);
  auto const b = enumerate_chains(6, {true, true, false}, std::nullopt, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}
