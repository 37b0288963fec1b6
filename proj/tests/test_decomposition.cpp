#include <doctest.h>

#include <map>

#include "resichain/constructors.hpp"
#include "resichain/decomposition.hpp"
#include "resichain/error.hpp"

using namespace resichain;

namespace {

std::vector<std::string> labels(const FiniteChain& c, const std::vector<Element>& xs) {
  std::vector<std::string> out;
  for (Element x : xs) out.push_back(c.label(x));
  return out;
}

// Compositions of n - 1 into parts of size >= 2 plus a free Go tail, counted
// by brute force over all part sequences.
std::uint64_t brute_count(int n) {
  std::uint64_t total = 0;
  std::function<void(int)> rec = [&](int left) {
    total += 1;  // the rest is the Go tail
    for (int w = 2; w <= left; ++w)
      for (int m = 0; m <= w - 2; ++m) rec(left - w);
  };
  rec(n - 1);
  return total;
}

}  // namespace

TEST_CASE("skeleton") {
  auto const c12 = com(1, 2);
  CHECK(labels(c12, sugihara_skeleton(c12)) == std::vector<std::string>{"b0", "e", "a0"});
  auto const g3 = go(3);
  CHECK(sugihara_skeleton(g3) == std::vector<Element>{g3.unit()});
  auto const two = nested_sum(std::vector<FiniteChain>{com(0, 0), com(0, 0)}).chain;
  CHECK(sugihara_skeleton(two).size() == 5);
}

TEST_CASE("decompose") {
  auto const s1 = decompose(nested_sum(std::vector<FiniteChain>{com(0, 0), go(1)}).chain);
  CHECK(s1.pairs == std::vector<std::pair<int, int>>{{0, 0}});
  CHECK(s1.p == 1);
  auto const s2 = decompose(go(3));
  CHECK(s2.pairs.empty());
  CHECK(s2.p == 3);
  auto const s3 = decompose(nested_sum(std::vector<FiniteChain>{com(0, 0), com(0, 0)}).chain);
  CHECK(s3.pairs == std::vector<std::pair<int, int>>{{0, 0}, {0, 0}});
  CHECK(s3.p == 0);
  CHECK(s3.to_string() == "C(0,0) ⊞ C(0,0)");
  CHECK(decompose(make_from_spec("com:1,1+com:0,2+go:3")).to_string() == "C(1,1) ⊞ C(0,2) ⊞ Go_3");
}

TEST_CASE("decompose rejects non-commutative or non-idempotent chains") {
  bool non_comm = false, non_idem = false;
  for (int n = 2; n <= 4; ++n)
    for (auto const& c : enumerate_chains(n, {})) {
      if (!c.is_commutative() && !non_comm) {
        non_comm = true;
        CHECK_THROWS_AS(decompose(c), Error);
      }
      if (c.is_commutative() && !c.is_idempotent() && !non_idem) {
        non_idem = true;
        CHECK_THROWS_AS(decompose(c), Error);
      }
    }
  CHECK(non_comm);
  CHECK(non_idem);
}

TEST_CASE("round trip and uniqueness up to size 7") {
  std::map<DecompositionSignature, FiniteChain> seen;
  for (int n = 1; n <= 7; ++n)
    for (auto const& c : enumerate_chains(n, {true, true, false})) {
      auto const sig = decompose(c);
      REQUIRE(sig.size() == n);
      REQUIRE(canonical_signature(recompose(sig).chain) == canonical_signature(c));
      REQUIRE(seen.emplace(sig, c).second);
    }
}

TEST_CASE("counts") {
  CHECK(count_chains(1) == 1);
  CHECK(count_chains(3) == 2);
  CHECK(count_chains(5) == 8);
  for (int n = 1; n <= 12; ++n) {
    REQUIRE(count_chains(n) == brute_count(n));
    REQUIRE(all_signatures(n).size() == count_chains(n));
  }
  for (int n = 1; n <= 7; ++n) REQUIRE(enumerate_chains(n, {true, true, false}).size() == count_chains(n));
}

TEST_CASE("all_signatures is sorted and sized") {
  auto const sigs = all_signatures(8);
  CHECK(std::is_sorted(sigs.begin(), sigs.end()));
  for (auto const& s : sigs) CHECK(s.size() == 8);
}
