#include "resichain/verify.hpp"

#include <functional>
#include <map>
#include <random>

#include "resichain/classification.hpp"
#include "resichain/decomposition.hpp"
#include "resichain/error.hpp"
#include "resichain/galatos.hpp"
#include "resichain/morphisms.hpp"
#include "resichain/pointed.hpp"

namespace resichain {

namespace {

class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& what) {
    if (ok) {
      ++result_.pass;
      return;
    }
    ++result_.fail;
    if (result_.failures.size() < 10) result_.failures.push_back(what());
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::vector<FiniteChain> chains_up_to(int max_size, EnumerationFilter filter) {
  std::vector<FiniteChain> out;
  for (int n = 1; n <= max_size; ++n)
    for (auto& c : enumerate_chains(n, filter, std::max(max_size, configured_max_size()))) out.push_back(std::move(c));
  return out;
}

// All strictly increasing maps from [0, n) into [0, m).
void for_each_increasing(int n, int m, const std::function<void(const std::vector<Element>&)>& visit) {
  std::vector<Element> image(static_cast<std::size_t>(n));
  std::function<void(int, Element)> rec = [&](int i, Element lo) {
    if (i == n) {
      visit(image);
      return;
    }
    for (Element v = lo; v <= m - (n - i); ++v) {
      image[static_cast<std::size_t>(i)] = v;
      rec(i + 1, v + 1);
    }
  };
  rec(0, 0);
}

std::string describe(const FiniteChain& c) { return canonical_signature_hex(c); }

SuiteResult embedding_criterion(int max_size) {
  Tally t("embedding-criterion");
  auto const chains = chains_up_to(max_size, {false, true, false});
  for (auto const& a : chains)
    for (auto const& b : chains)
      for_each_increasing(a.size(), b.size(), [&](const std::vector<Element>& image) {
        ChainMap const map{a, b, image};
        t.check(is_embedding_by_criterion(map) == is_embedding_definitional(map),
                [&] { return describe(a) + " -> " + describe(b); });
      });
  return t.take();
}

SuiteResult residual_closed_form(int max_size) {
  Tally t("residual-closed-form");
  for (auto const& c : chains_up_to(max_size, {false, true, false})) {
    for (Element x = 0; x < c.size(); ++x) {
      for (Element y = 0; y < c.size(); ++y) {
        Element const l = x <= y ? std::max(c.r(x), y) : std::min(c.r(x), y);
        Element const r = x <= y ? std::max(c.ell(x), y) : std::min(c.ell(x), y);
        t.check(c.left_residual(x, y) == l && c.right_residual(y, x) == r, [&] { return describe(c); });
      }
    }
  }
  return t.take();
}

SuiteResult subcover_injectivity_suite(int max_size) {
  Tally t("subcover-injectivity");
  auto const chains = chains_up_to(max_size, {true, true, false});
  for (auto const& a : chains) {
    if (a.size() < 2) continue;
    for (auto const& b : chains)
      for (auto const& h : enumerate_homomorphisms(a, b))
        t.check(subcover_injectivity(h) == is_injective(h), [&] { return describe(a) + " -> " + describe(b); });
  }
  return t.take();
}

SuiteResult congruence_correspondence(int max_size) {
  Tally t("congruence-correspondence");
  for (auto const& c : chains_up_to(max_size, {})) {
    std::size_t normal = 0;
    for (Element lo = 0; lo <= c.unit(); ++lo)
      for (Element hi = c.unit(); hi < c.size(); ++hi)
        if (is_convex_normal_subuniverse(c, lo, hi)) ++normal;
    auto const thetas = congruences(c);
    t.check(thetas.size() == normal, [&] { return describe(c) + " count"; });
    for (auto const& theta : thetas) {
      auto const q = quotient(c, theta);
      t.check(is_homomorphism(q.projection) && kernel(q.projection) == theta, [&] { return describe(c); });
    }
  }
  return t.take();
}

SuiteResult quotient_subalgebra(int max_size) {
  Tally t("quotient-subalgebra");
  for (auto const& c : chains_up_to(max_size, {false, true, true})) {
    for (auto const& theta : congruences(c)) {
      auto const q = quotient(c, theta).chain;
      t.check(count_embeddings(q, c) > 0, [&] { return describe(c); });
    }
  }
  return t.take();
}

SuiteResult decomposition_roundtrip(int max_size) {
  Tally t("decomposition-roundtrip");
  std::map<DecompositionSignature, std::string> seen;
  for (auto const& c : chains_up_to(max_size, {true, true, false})) {
    auto const sig = decompose(c);
    t.check(recompose(sig).chain == c, [&] { return describe(c); });
    t.check(seen.emplace(sig, describe(c)).second, [&] { return "duplicate " + sig.to_string(); });
  }
  return t.take();
}

SuiteResult count_chains_suite(int max_size) {
  Tally t("count-chains");
  for (int n = 1; n <= max_size; ++n)
    t.check(enumerate_chains(n, {true, true, false}, std::max(max_size, configured_max_size())).size() ==
                count_chains(n),
            [&] { return "n = " + std::to_string(n); });
  return t.take();
}

SuiteResult skeleton_contraction(int max_size) {
  Tally t("skeleton-contraction");
  for (int m = 0; m <= max_size; ++m) {
    for (int n = 0; n <= max_size; ++n) {
      auto const c = com(m, n);
      auto const q = quotient(c, congruence_from_kernel(c, m, m + n + 2)).chain;
      t.check(iso_equal(q, go(m)), [&] { return "C(" + std::to_string(m) + "," + std::to_string(n) + ")"; });
    }
  }
  return t.take();
}

SuiteResult star_involution(std::uint64_t seed) {
  Tally t("star-involution");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> period(1, 8), bit(0, 1), tag(0, 2);
  std::uniform_int_distribution<long long> index(-1000000, 1000000);
  for (int trial = 0; trial < 10000; ++trial) {
    std::string bits;
    for (int k = period(rng); k > 0; --k) bits += bit(rng) ? '1' : '0';
    auto const s = SetSpec::periodic(bits, index(rng));
    auto const i = Index(index(rng));
    auto const x = tag(rng) == 0 ? ASElement::e() : tag(rng) == 1 ? ASElement::a(i) : ASElement::b(i);
    auto const once = as_unary(s, x, Derived::Star);
    t.check(as_unary(s, once, Derived::Star) == x && (x.tag == ASElement::Tag::E) == (once.tag == ASElement::Tag::E),
            [&] { return s.to_string() + " " + x.to_string(); });
  }
  return t.take();
}

SuiteResult hs_closure_suite(int max_size) {
  Tally t("hs-closure");
  for (auto const& cls : all_sixty()) {
    ChainClass const k(cls.members_up_to(max_size));
    t.check(!hs_closure_defect(k), [&] { return cls.to_string(); });
  }
  return t.take();
}

SuiteResult ap_closure(int max_size) {
  Tally t("ap-closure");
  for (auto const& cls : all_sixty()) {
    auto const members = cls.signatures_up_to(max_size);
    auto const v = ap_closure_violations([&](const DecompositionSignature& s) { return cls.contains(s); }, members,
                                         max_size);
    t.check(v.empty(), [&] { return cls.to_string() + " rule " + v.front().rule; });
  }
  return t.take();
}

SuiteResult pointed_partition(int max_size) {
  Tally t("pointed-partition");
  auto const pool = all_pointed_chains(max_size);
  for (auto const& a : pool) {
    auto const cond = condition_of(a);
    auto const seed = seed_algebra(cond);
    auto const gen = generated_by_f(a);
    t.check(iso_equal(gen.base, seed.base) && gen.f == seed.f,
            [&] { return describe(a.base) + " f=" + std::to_string(a.f); });
  }
  t.check(cross_condition_embeddings(pool) == 0, [] { return std::string("cross-condition embedding"); });
  return t.take();
}

using Runner = std::function<SuiteResult(int, std::uint64_t)>;

const std::map<std::string, Runner>& registry() {
  static const std::map<std::string, Runner> suites{
      {"embedding-criterion", [](int n, std::uint64_t) { return embedding_criterion(n); }},
      {"residual-closed-form", [](int n, std::uint64_t) { return residual_closed_form(n); }},
      {"subcover-injectivity", [](int n, std::uint64_t) { return subcover_injectivity_suite(n); }},
      {"congruence-correspondence", [](int n, std::uint64_t) { return congruence_correspondence(n); }},
      {"quotient-subalgebra", [](int n, std::uint64_t) { return quotient_subalgebra(n); }},
      {"decomposition-roundtrip", [](int n, std::uint64_t) { return decomposition_roundtrip(n); }},
      {"count-chains", [](int n, std::uint64_t) { return count_chains_suite(n); }},
      {"skeleton-contraction", [](int n, std::uint64_t) { return skeleton_contraction(n); }},
      {"star-involution", [](int, std::uint64_t seed) { return star_involution(seed); }},
      {"hs-closure", [](int n, std::uint64_t) { return hs_closure_suite(n); }},
      {"ap-closure", [](int n, std::uint64_t) { return ap_closure(n); }},
      {"pointed-partition", [](int n, std::uint64_t) { return pointed_partition(n); }},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (auto const& [name, run] : registry()) out.push_back(name);
  return out;
}

SuiteResult run_suite(const std::string& name, int max_size, std::uint64_t seed) {
  auto key = name.rfind("lemma:", 0) == 0 ? name.substr(6) : name;
  auto it = registry().find(key);
  if (it == registry().end()) throw Error("UnknownSuite", "no suite named '" + key + "'");
  return it->second(max_size, seed);
}

}  // namespace resichain
