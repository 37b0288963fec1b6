#include "resichain/pointed.hpp"

#include "resichain/decomposition.hpp"
#include "resichain/error.hpp"

namespace resichain {

PointedChain PointedChain::make(FiniteChain base, Element f) {
  if (f < 0 || f >= base.size()) throw Error("InvalidPointedChain", "f is out of range", {f});
  return {std::move(base), f};
}

const char* to_string(PointedCondition c) {
  switch (c) {
    case PointedCondition::OneA:
      return "1a";
    case PointedCondition::OneB:
      return "1b";
    case PointedCondition::OneC:
      return "1c";
    case PointedCondition::TwoA:
      return "2a";
    case PointedCondition::TwoB:
      return "2b";
    case PointedCondition::TwoC:
      return "2c";
  }
  return "?";
}

PointedCondition parse_condition(const std::string& text) {
  for (auto c : all_conditions())
    if (text == to_string(c)) return c;
  throw Error("ParseError", "unknown condition '" + text + "'");
}

std::vector<PointedCondition> all_conditions() {
  return {PointedCondition::OneA, PointedCondition::OneB, PointedCondition::OneC,
          PointedCondition::TwoA, PointedCondition::TwoB, PointedCondition::TwoC};
}

PointedCondition condition_of(const PointedChain& a) {
  auto const skeleton = sugihara_skeleton(a.base);
  Element const e = a.base.unit(), f = a.f;
  if (std::binary_search(skeleton.begin(), skeleton.end(), f)) {
    if (f == e) return PointedCondition::OneA;
    return f < e ? PointedCondition::OneB : PointedCondition::OneC;
  }
  if (f > e) return PointedCondition::TwoC;
  return a.base.star(f) == e ? PointedCondition::TwoA : PointedCondition::TwoB;
}

PointedChain seed_algebra(PointedCondition c) {
  switch (c) {
    case PointedCondition::OneA:
      return {FiniteChain::trivial(), 0};
    case PointedCondition::OneB:
      return {com(0, 0), 0};  // b0
    case PointedCondition::OneC:
      return {com(0, 0), 2};  // a0
    case PointedCondition::TwoA:
      return {go(1), 0};  // c1
    case PointedCondition::TwoB:
      return {com(1, 0), 0};  // b1
    case PointedCondition::TwoC:
      return {com(0, 1), 2};  // a1
  }
  return {FiniteChain::trivial(), 0};
}

std::vector<ChainMap> pointed_embeddings(const PointedChain& a, const PointedChain& b) {
  std::vector<std::optional<Element>> fixed(static_cast<std::size_t>(a.base.size()));
  fixed[static_cast<std::size_t>(a.f)] = b.f;
  std::vector<ChainMap> out;
  for_each_embedding(a.base, b.base, fixed, [&](const std::vector<Element>& image) {
    out.push_back({a.base, b.base, image});
    return true;
  });
  return out;
}

bool pointed_embeds(const PointedChain& a, const PointedChain& b) {
  std::vector<std::optional<Element>> fixed(static_cast<std::size_t>(a.base.size()));
  fixed[static_cast<std::size_t>(a.f)] = b.f;
  bool found = false;
  for_each_embedding(a.base, b.base, fixed, [&](const std::vector<Element>&) {
    found = true;
    return false;
  });
  return found;
}

PointedChain generated_by_f(const PointedChain& a) {
  std::vector<Element> const seed{a.f};
  auto const u = subalgebra_generated(a.base, seed);
  auto const pos = std::lower_bound(u.begin(), u.end(), a.f) - u.begin();
  return {induced_subchain(a.base, u), static_cast<Element>(pos)};
}

std::map<PointedCondition, std::vector<PointedChain>> partition(const std::vector<PointedChain>& pool) {
  std::map<PointedCondition, std::vector<PointedChain>> out;
  for (auto c : all_conditions()) out[c];
  for (auto const& a : pool) out[condition_of(a)].push_back(a);
  return out;
}

std::size_t cross_condition_embeddings(const std::vector<PointedChain>& pool) {
  std::vector<PointedCondition> conds;
  for (auto const& a : pool) conds.push_back(condition_of(a));
  std::size_t count = 0;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j)
      if (conds[i] != conds[j] && pointed_embeds(pool[i], pool[j])) ++count;
  return count;
}

std::vector<PointedChain> all_pointed_chains(int max_size) {
  std::vector<PointedChain> out;
  for (int n = 1; n <= max_size; ++n) {
    std::vector<FiniteChain> bases;
    for (auto const& sig : all_signatures(n)) bases.push_back(recompose(sig).chain);
    std::sort(bases.begin(), bases.end(), signature_less);
    for (auto const& b : bases)
      for (Element f = 0; f < b.size(); ++f) out.push_back({b, f});
  }
  return out;
}

PointedDecomposition pointed_decompose(const PointedChain& a) {
  auto const cond = condition_of(a);
  if (cond == PointedCondition::OneA) throw Error("ConditionIsOneA", "f = e has no canonical split");
  auto const sum = recompose(decompose(a.base));
  // recompose reproduces the table of a.base, so placements index into it.
  auto const& desc = sum.descriptor;
  for (std::size_t i = 0; i < desc.size(); ++i) {
    auto const& place = desc.placement[i];
    auto const it = std::find(place.begin(), place.end(), a.f);
    if (it == place.end()) continue;
    std::vector<Summand> outer(desc.summands.begin(), desc.summands.begin() + static_cast<long>(i));
    std::vector<Summand> inner(desc.summands.begin() + static_cast<long>(i) + 1, desc.summands.end());
    PointedDecomposition out{nested_sum(outer), {desc.summands[i].chain, static_cast<Element>(it - place.begin())},
                             std::nullopt};
    if (i + 1 < desc.size()) out.inner = nested_sum(inner);
    return out;
  }
  throw Error("InternalError", "f lies in no summand");
}

PointedChain pointed_recompose(const PointedDecomposition& d) {
  std::vector<Summand> parts = d.outer.descriptor.summands;
  std::size_t const middle = parts.size();
  parts.push_back({"middle", d.middle.base});
  if (d.inner) parts.insert(parts.end(), d.inner->descriptor.summands.begin(), d.inner->descriptor.summands.end());
  auto const sum = nested_sum(parts);
  return {sum.chain, sum.descriptor.placement[middle][static_cast<std::size_t>(d.middle.f)]};
}

}  // namespace resichain
