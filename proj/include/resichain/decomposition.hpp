#pragma once

// Sugihara skeleton and the nested-sum normal form
// C(m_1,n_1) + ... + C(m_k,n_k) + Go_p of finite commutative idempotent chains.

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "resichain/chain.hpp"
#include "resichain/constructors.hpp"

namespace resichain {

struct DecompositionSignature {
  // (m_i, n_i), outermost first.
  std::vector<std::pair<int, int>> pairs;
  int p = 0;

  int size() const noexcept;
  // e.g. "C(1,1) ⊞ C(0,2) ⊞ Go_3"; Go_p is omitted when p = 0 and pairs exist.
  std::string to_string() const;

  auto operator<=>(const DecompositionSignature&) const = default;
};

// Fixpoints of x -> x^**, ascending. Throws NotCommutative / NotIdempotent.
std::vector<Element> sugihara_skeleton(const FiniteChain& chain);

DecompositionSignature decompose(const FiniteChain& chain);

// Nested sum of com(m_i, n_i) followed by go(p) as the top summand.
NestedSum recompose(const DecompositionSignature& signature);

// Number of commutative idempotent chains of size n up to isomorphism,
// counted over signatures.
std::uint64_t count_chains(int n);

// Every signature of total size n, in lexicographic order.
std::vector<DecompositionSignature> all_signatures(int n);

}  // namespace resichain
