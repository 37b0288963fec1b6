#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "resichain/error.hpp"
#include "resichain/galatos.hpp"

using namespace resichain;

namespace {

using X = ASElement;

SetSpec with_zero() { return SetSpec::parse("per:1"); }
SetSpec without_zero() { return SetSpec::parse("per:0"); }

}  // namespace

TEST_CASE("element syntax") {
  CHECK(X::parse("a:3") == X::a(3));
  CHECK(X::parse("b:-2") == X::b(-2));
  CHECK(X::parse("e") == X::e());
  CHECK(X::b(-2).to_string() == "b:-2");
  CHECK_THROWS_AS(X::parse("c:1"), Error);
}

TEST_CASE("order") {
  CHECK(as_less(X::b(-1), X::b(5)));
  CHECK(as_less(X::a(5), X::a(-1)));
  CHECK(as_compare(X::e(), X::e()) == std::strong_ordering::equal);
  oracle::ASWindow const w(with_zero(), 4);
  for (auto const& x : w.elements())
    for (auto const& y : w.elements()) REQUIRE(as_less(x, y) == (w.pos(x) < w.pos(y)));
}

TEST_CASE("products") {
  CHECK(as_mult(with_zero(), X::a(0), X::b(0)) == X::a(0));
  CHECK(as_mult(without_zero(), X::a(0), X::b(0)) == X::b(0));
  CHECK(as_mult(with_zero(), X::a(1), X::b(0)) == X::b(0));
  CHECK(as_mult(without_zero(), X::a(3), X::a(-2)) == X::a(-2));
  for (auto const& s : {with_zero(), without_zero(), SetSpec::parse("per:011@1"), SetSpec::parse("fin:{0,2}")}) {
    oracle::ASWindow const w(s, 4);
    for (auto const& x : w.elements())
      for (auto const& y : w.elements()) REQUIRE(as_mult(s, x, y) == w.mult(x, y));
  }
}

TEST_CASE("unary table") {
  CHECK(as_unary(with_zero(), X::a(0), Derived::Ell) == X::b(0));
  CHECK(as_unary(without_zero(), X::a(0), Derived::Ell) == X::b(-1));
  CHECK(as_unary(with_zero(), X::e(), Derived::Star) == X::e());
  CHECK(as_unary(without_zero(), X::e(), Derived::Star) == X::e());
}

TEST_CASE("residuals") {
  CHECK(as_residual(with_zero(), X::e(), X::a(0), Side::Left) == X::a(0));
  CHECK(as_residual(with_zero(), X::a(0), X::b(5), Side::Left) == X::b(-1));
  CHECK(as_residual(without_zero(), X::b(0), X::e(), Side::Left) == X::a(1));
}

TEST_CASE("residuals and unary operations against the window oracle") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> period(1, 5), bit(0, 1), phase(-3, 3);
  for (int t = 0; t < 40; ++t) {
    std::string bits;
    for (int k = period(rng); k > 0; --k) bits += bit(rng) ? '1' : '0';
    auto const s = SetSpec::periodic(bits, phase(rng));
    oracle::ASWindow const w(s, 10);
    std::vector<X> inner;
    for (int i = -6; i <= 6; ++i) {
      inner.push_back(X::a(i));
      inner.push_back(X::b(i));
    }
    inner.push_back(X::e());
    for (auto const& x : inner) {
      if (x.tag != X::Tag::E) {
        REQUIRE(as_unary(s, x, Derived::R) == *w.ldiv(x, X::e()));
        REQUIRE(as_unary(s, x, Derived::Ell) == *w.rdiv(X::e(), x));
      }
      for (auto const& y : inner) {
        auto const l = w.ldiv(x, y);
        auto const r = w.rdiv(y, x);
        if (l) REQUIRE(as_residual(s, x, y, Side::Left) == *l);
        if (r) REQUIRE(as_residual(s, x, y, Side::Right) == *r);
        for (auto const& z : inner) {
          bool const lhs = !as_less(y, as_mult(s, x, z));
          REQUIRE(lhs == !as_less(as_residual(s, x, y, Side::Left), z));
        }
      }
    }
  }
}

TEST_CASE("star is an involution and never hits e") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> period(1, 8), bit(0, 1), tag(0, 1);
  std::uniform_int_distribution<long long> idx(-1000000, 1000000);
  for (int t = 0; t < 2000; ++t) {
    std::string bits;
    for (int k = period(rng); k > 0; --k) bits += bit(rng) ? '1' : '0';
    auto const s = SetSpec::periodic(bits, idx(rng));
    auto const x = tag(rng) ? X::a(idx(rng)) : X::b(idx(rng));
    auto const once = as_unary(s, x, Derived::Star);
    REQUIRE(once.tag != X::Tag::E);
    REQUIRE(as_unary(s, once, Derived::Star) == x);
    REQUIRE(as_unary(s, x, Derived::Ell).tag != X::Tag::E);
    REQUIRE(as_unary(s, x, Derived::R).tag != X::Tag::E);
  }
}

TEST_CASE("huge indices") {
  Index const big = Index(1) << 200;
  auto const s = SetSpec::parse("per:01");
  auto const x = X::a(big);
  CHECK(as_unary(s, as_unary(s, x, Derived::Star), Derived::Star) == x);
}

TEST_CASE("generated reach") {
  auto const s = SetSpec::parse("per:01");
  auto const one = generated_reach(s, X::a(0), 1);
  CHECK(one.elements.size() == 3);
  CHECK(std::find(one.elements.begin(), one.elements.end(), X::b(0)) != one.elements.end());
  CHECK(std::find(one.elements.begin(), one.elements.end(), X::b(-1)) != one.elements.end());
  CHECK(generated_reach(s, X::a(0), 0).elements == std::vector<X>{X::a(0)});
  CHECK_THROWS_AS(generated_reach(s, X::e(), 3), Error);

  // Depth 8 reaches [-4,4] on the a side and [-4,3] on the b side; depth 9
  // covers [-4,4] on both.
  auto const d8 = generated_reach(s, X::a(0), 8);
  REQUIRE(d8.a_range);
  REQUIRE(d8.b_range);
  CHECK(d8.a_range->first <= -4);
  CHECK(d8.a_range->second >= 4);
  auto const d9 = generated_reach(s, X::a(0), 9);
  CHECK(d9.b_range->first <= -4);
  CHECK(d9.b_range->second >= 4);

  std::size_t prev_width = 0;
  for (int d = 1; d <= 10; ++d) {
    auto const lo = generated_reach(s, X::a(0), d - 1), hi = generated_reach(s, X::a(0), d);
    for (auto const& x : lo.elements) REQUIRE(std::find(hi.elements.begin(), hi.elements.end(), x) != hi.elements.end());
    REQUIRE(hi.elements.size() > prev_width);
    prev_width = hi.elements.size();
    CHECK(hi.a_contiguous);
    CHECK(hi.b_contiguous);
  }
}
