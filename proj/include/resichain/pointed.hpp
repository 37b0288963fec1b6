#pragma once

// Chains with a designated constant f: the six conditions on the position of
// f, their seed algebras, the induced partition and the split of the normal
// form at the summand holding f.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "resichain/chain.hpp"
#include "resichain/constructors.hpp"
#include "resichain/morphisms.hpp"

namespace resichain {

struct PointedChain {
  FiniteChain base;
  Element f = 0;

  // Throws InvalidPointedChain when f is out of range.
  static PointedChain make(FiniteChain base, Element f);
  bool operator==(const PointedChain& other) const { return base == other.base && f == other.f; }
};

enum class PointedCondition { OneA, OneB, OneC, TwoA, TwoB, TwoC };

const char* to_string(PointedCondition c);
PointedCondition parse_condition(const std::string& text);
std::vector<PointedCondition> all_conditions();

// Throws NotCommutative / NotIdempotent.
PointedCondition condition_of(const PointedChain& a);

PointedChain seed_algebra(PointedCondition c);

// Embeddings of the base chains sending f to f.
std::vector<ChainMap> pointed_embeddings(const PointedChain& a, const PointedChain& b);
bool pointed_embeds(const PointedChain& a, const PointedChain& b);

// The subalgebra generated by f, with f carried along.
PointedChain generated_by_f(const PointedChain& a);

std::map<PointedCondition, std::vector<PointedChain>> partition(const std::vector<PointedChain>& pool);

// Ordered pairs from different buckets related by a pointed embedding.
std::size_t cross_condition_embeddings(const std::vector<PointedChain>& pool);

// Every pointed chain over the commutative idempotent chains of size <= n.
std::vector<PointedChain> all_pointed_chains(int max_size);

struct PointedDecomposition {
  // Summands outside the one holding f (A1), that summand with f (A2), and the
  // summands inside it (A3); A3 is absent when f lies in the Goedel tail.
  NestedSum outer;
  PointedChain middle;
  std::optional<NestedSum> inner;
};

// Throws ConditionIsOneA, NotCommutative, NotIdempotent.
PointedDecomposition pointed_decompose(const PointedChain& a);
PointedChain pointed_recompose(const PointedDecomposition& d);

}  // namespace resichain
