// One line per acceptance criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "oracles.hpp"
#include "resichain/amalgamation.hpp"
#include "resichain/classification.hpp"
#include "resichain/constructors.hpp"
#include "resichain/decomposition.hpp"
#include "resichain/error.hpp"
#include "resichain/galatos.hpp"
#include "resichain/morphisms.hpp"
#include "resichain/pointed.hpp"
#include "resichain/verify.hpp"

using namespace resichain;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

Outcome sixty_classes() {
  auto const all = all_sixty();
  if (all.size() != 60) return {false, std::to_string(all.size()) + " classes"};
  std::vector<std::vector<DecompositionSignature>> probes(10);
  for (int n = 1; n <= 9; ++n) probes[static_cast<std::size_t>(n)] = all_signatures(n);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      bool separated = false;
      for (int n = 1; n <= 9 && !separated; ++n)
        for (auto const& sig : probes[static_cast<std::size_t>(n)])
          if (all[i].contains(sig) != all[j].contains(sig)) {
            separated = true;
            break;
          }
      if (!separated) return {false, all[i].to_string() + " and " + all[j].to_string() + " agree up to size 9"};
      ++pairs;
    }
  }
  return {true, std::to_string(pairs) + " pairs separated by probes of size <= 9"};
}

Outcome ap_positive() {
  std::size_t spans = 0, constructive = 0, constructive_minimal = 0;
  for (auto const& cls : all_sixty()) {
    auto const membership = cls.membership();
    auto const members = cls.members_up_to(6);
    for (auto const& a : members) {
      for (auto const& b : members) {
        if (b.size() < a.size()) continue;
        auto const ibs = enumerate_embeddings(a, b);
        if (ibs.empty()) continue;
        for (auto const& c : members) {
          if (c.size() < a.size()) continue;
          auto const ics = enumerate_embeddings(a, c);
          for (auto const& ib : ibs) {
            for (auto const& ic : ics) {
              Span const span{a, b, c, ib, ic};
              ++spans;
              int const bound = b.size() + c.size();
              auto const r = find_amalgam(span, membership, bound, true, jobs());
              if (r.outcome != SearchOutcome::Found || !verify_amalgam(span, *r.amalgam) ||
                  !membership.contains(r.amalgam->d))
                return {false, cls.to_string() + ": no one-sided amalgam for " + canonical_signature_hex(a) + " -> " +
                                   canonical_signature_hex(b) + ", " + canonical_signature_hex(c)};
              std::optional<AmalgamResult> built;
              try {
                built = amalgamate_components(span);
              } catch (const Error& e) {
                if (e.code() != "ShapeMismatch") throw;
              }
              if (!built) continue;
              ++constructive;
              if (!verify_amalgam(span, *built) || built->one_sided)
                return {false, cls.to_string() + ": constructive amalgam fails verification"};
              if (!membership.contains(built->d))
                return {false, cls.to_string() + ": constructive amalgam leaves the class"};
              // Compared with the two-sided minimum: a one-sided amalgam may
              // collapse C and be far smaller.
              auto const two = find_amalgam(span, membership, bound, false, jobs());
              if (two.outcome != SearchOutcome::Found || built->d.size() > two.amalgam->d.size() + 1)
                return {false, cls.to_string() + ": constructive amalgam larger than search minimum + 1"};
              if (built->d.size() == two.amalgam->d.size()) ++constructive_minimal;
            }
          }
        }
      }
    }
  }
  return {true, std::to_string(spans) + " spans amalgamated, " + std::to_string(constructive) +
                    " also built constructively (" +
                    std::to_string(constructive_minimal) + " of minimal two-sided size)"};
}

Outcome ap_negative() {
  auto const go2 = hs_closure({go(2)});
  if (go2.members().size() != 3) return {false, "hs_closure(Go_2) has " + std::to_string(go2.members().size())};
  auto const v = ap_verdict(go2);
  if (v.has_ap || !v.witness || !v.refuted_complete) return {false, "Go_2 case not refuted completely"};
  auto const& w = *v.witness;
  if (!iso_equal(w.a, go(1)) || !iso_equal(w.b, go(2)) || !iso_equal(w.c, go(2)) ||
      w.ib.image != std::vector<Element>{0, 2} || w.ic.image != std::vector<Element>{1, 2})
    return {false, "unexpected witness span"};
  auto const c02 = ap_verdict(hs_closure({com(0, 2)}));
  if (c02.has_ap) return {false, "C(0,2) case reported AP"};
  bool rule_iv = false;
  for (auto const& r : c02.audit) rule_iv = rule_iv || r.rule == "iv";
  if (!rule_iv) return {false, "C(0,2) audit does not cite rule iv"};
  return {true, "both NoAP; Go_2 witness refuted over 3 members"};
}

Outcome classifier() {
  auto const c00 = classify(hs_closure({com(0, 0)}));
  auto const c11 = classify(hs_closure({com(1, 1)}));
  auto const g2 = classify(hs_closure({go(2)}));
  bool const ok = c00 && *c00 == CanonicalClass::fin(Param::Zero, Param::Zero, Param::Zero) && c11 &&
                  *c11 == CanonicalClass::fin_union_e(Param::One, Param::One, Param::One) && !g2;
  return {ok, "C(0,0) -> " + (c00 ? c00->display() : "none") + ", C(1,1) -> " + (c11 ? c11->display() : "none") +
                  ", Go_2 -> " + (g2 ? g2->display() : "none")};
}

Outcome enumeration() {
  std::string counts;
  for (int n = 1; n <= 7; ++n) {
    auto const table = enumerate_chains(n, {true, true, false}, 7, jobs()).size();
    auto const sigs = count_chains(n);
    if (table != sigs)
      return {false, "n = " + std::to_string(n) + ": " + std::to_string(table) + " vs " + std::to_string(sigs)};
    if (table != (n == 1 ? 1u : 1u << (n - 2)))
      return {false, "n = " + std::to_string(n) + " differs from the listed value"};
    counts += (n > 1 ? "," : "") + std::to_string(table);
  }
  return {true, "counts " + counts};
}

Outcome embedding_criterion() {
  std::vector<FiniteChain> chains;
  for (int n = 1; n <= 5; ++n)
    for (auto& c : enumerate_chains(n, {false, true, false})) chains.push_back(c);
  std::size_t checked = 0, wrong = 0;
  for (auto const& a : chains)
    for (auto const& b : chains)
      oracle::all_maps(a.size(), b.size(), [&](const std::vector<Element>& f) {
        if (!oracle::injective(f) || !std::is_sorted(f.begin(), f.end())) return;
        ++checked;
        wrong += is_embedding_by_criterion({a, b, f}) != oracle::is_embedding(a, b, f);
      });
  auto const suite = run_suite("embedding-criterion", 5, 1);
  bool const ok = wrong == 0 && suite.fail == 0;
  return {ok, std::to_string(checked) + " increasing injections checked against brute force"};
}

Outcome as_suite() {
  auto const star = run_suite("star-involution", 0, 20261015);
  if (star.fail) return {false, "star involution: " + star.failures.front()};
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> period(1, 6), bit(0, 1), phase(-5, 5);
  std::size_t checked = 0;
  for (int t = 0; t < 100; ++t) {
    std::string bits;
    for (int k = period(rng); k > 0; --k) bits += bit(rng) ? '1' : '0';
    auto const s = SetSpec::periodic(bits, phase(rng));
    oracle::ASWindow const w(s, 10);
    for (int i = -6; i <= 6; ++i) {
      for (auto const& x : {ASElement::a(i), ASElement::b(i)}) {
        auto const r = w.ldiv(x, ASElement::e());
        auto const l = w.rdiv(ASElement::e(), x);
        if (!r || !l || as_unary(s, x, Derived::R) != *r || as_unary(s, x, Derived::Ell) != *l)
          return {false, s.to_string() + " at " + x.to_string()};
        ++checked;
      }
    }
  }
  return {true, std::to_string(star.pass) + " involution trials, " + std::to_string(checked) +
                    " unary values match the window oracle"};
}

Outcome decomposition() {
  std::vector<FiniteChain> chains;
  for (int n = 1; n <= 7; ++n)
    for (auto& c : enumerate_chains(n, {true, true, false})) chains.push_back(c);
  std::vector<DecompositionSignature> sigs;
  for (auto const& c : chains) {
    sigs.push_back(decompose(c));
    if (canonical_signature(recompose(sigs.back()).chain) != canonical_signature(c))
      return {false, "round trip fails for " + sigs.back().to_string()};
  }
  for (std::size_t i = 0; i < chains.size(); ++i)
    for (std::size_t j = 0; j < chains.size(); ++j)
      if ((sigs[i] == sigs[j]) != iso_equal(chains[i], chains[j])) return {false, "uniqueness fails"};
  return {true, std::to_string(chains.size()) + " chains round-trip, signatures unique"};
}

Outcome skeleton() {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      auto const c = com(m, n);
      auto const b0 = *c.find_label("b0"), a0 = *c.find_label("a0");
      if (!iso_equal(quotient(c, congruence_from_kernel(c, b0, a0)).chain, go(m)))
        return {false, "C(" + std::to_string(m) + "," + std::to_string(n) + ")"};
    }
  return {true, "16 quotients isomorphic to Go_m"};
}

Outcome pointed() {
  auto const pool = all_pointed_chains(5);
  auto const conditions = all_conditions();
  for (auto const& a : pool) {
    auto const gen = generated_by_f(a);
    int matches = 0;
    for (auto c : conditions) {
      auto const seed = seed_algebra(c);
      matches += iso_equal(seed.base, gen.base) && seed.f == gen.f;
    }
    if (matches != 1) return {false, "generated subalgebra matches " + std::to_string(matches) + " seeds"};
    auto const seed = seed_algebra(condition_of(a));
    if (!iso_equal(seed.base, gen.base) || seed.f != gen.f) return {false, "condition disagrees with its seed"};
  }
  std::size_t total = 0;
  for (auto const& [c, members] : partition(pool)) total += members.size();
  if (total != pool.size()) return {false, "partition loses chains"};
  auto const cross = cross_condition_embeddings(pool);
  if (cross) return {false, std::to_string(cross) + " cross-condition embeddings"};
  return {true, std::to_string(pool.size()) + " pointed chains, no cross-condition embeddings"};
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> const criteria{
      {"sixty classes", sixty_classes},
      {"AP-positive spans", ap_positive},
      {"AP-negative witnesses", ap_negative},
      {"classifier fixed points", classifier},
      {"enumeration vs signature count", enumeration},
      {"embedding criterion", embedding_criterion},
      {"A_S suite", as_suite},
      {"decomposition round trip", decomposition},
      {"skeleton contraction", skeleton},
      {"pointed partition", pointed},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto const start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu %s  %-32s %8.2fs  %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                secs, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
