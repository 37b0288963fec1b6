#pragma once

// Maps between finite chains: homomorphism and embedding checks, embedding
// search, congruences, quotients and lifts across nested sums.

#include <functional>
#include <optional>
#include <vector>

#include "resichain/chain.hpp"
#include "resichain/constructors.hpp"

namespace resichain {

struct ChainMap {
  FiniteChain domain;
  FiniteChain codomain;
  std::vector<Element> image;

  Element operator()(Element x) const { return image[static_cast<std::size_t>(x)]; }
  bool operator==(const ChainMap&) const = default;
};

ChainMap identity_map(const FiniteChain& chain);
// g after f.
ChainMap compose(const ChainMap& g, const ChainMap& f);

bool is_order_preserving(const ChainMap& map);
bool is_injective(const ChainMap& map);

// Preserves e, the product, both residuals and the order.
bool is_homomorphism(const ChainMap& map);

// Injective, order-preserving, e to e, and commutes with x^l and x^r.
// Only meaningful when both chains are idempotent.
bool is_embedding_by_criterion(const ChainMap& map);
// Injective homomorphism.
bool is_embedding_definitional(const ChainMap& map);
// Criterion on idempotent chains, definitional otherwise.
bool is_embedding(const ChainMap& map);

// Calls visit(image) for every embedding A -> B in lexicographic order of
// images, stopping early when visit returns false. fixed[x], when set, pins
// the image of x.
using ImageVisitor = std::function<bool(const std::vector<Element>&)>;
void for_each_embedding(const FiniteChain& a, const FiniteChain& b,
                        const std::vector<std::optional<Element>>& fixed, const ImageVisitor& visit);
void for_each_embedding(const FiniteChain& a, const FiniteChain& b, const ImageVisitor& visit);

std::vector<ChainMap> enumerate_embeddings(const FiniteChain& a, const FiniteChain& b);
std::size_t count_embeddings(const FiniteChain& a, const FiniteChain& b);

struct Congruence {
  FiniteChain chain;
  // Convex blocks in ascending order.
  std::vector<std::vector<Element>> blocks;
  std::vector<int> block_of;
  // The block of e.
  std::vector<Element> kernel_class;

  bool is_identity() const noexcept { return blocks.size() == block_of.size(); }
  bool operator==(const Congruence& other) const { return block_of == other.block_of; }
};

// Convex subuniverse containing e, closed under (a\(xa)) & e and ((ax)/a) & e.
bool is_convex_normal_subuniverse(const FiniteChain& chain, Element lo, Element hi);

// The congruence with kernel class [lo, hi]; x ~ y iff (x\y) & (y\x) & e lies in it.
Congruence congruence_from_kernel(const FiniteChain& chain, Element lo, Element hi);

// All congruences, ordered by kernel class from smallest.
std::vector<Congruence> congruences(const FiniteChain& chain);

// Partition into blocks of equal image.
Congruence kernel(const ChainMap& map);

struct Quotient {
  FiniteChain chain;
  ChainMap projection;
};

Quotient quotient(const FiniteChain& chain, const Congruence& theta);

// Every homomorphism A -> B, as an embedding of a quotient of A.
void for_each_homomorphism(const FiniteChain& a, const FiniteChain& b, const ImageVisitor& visit);
std::vector<ChainMap> enumerate_homomorphisms(const FiniteChain& a, const FiniteChain& b);

// Glues component embeddings g[i]: A_i -> B_f(i) into an embedding of the
// nested sums. A non-admissible top summand of A must map to the top of B.
// Throws NotOrderEmbedding, TopNotPreserved or ComponentNotEmbedding (witness {i}).
ChainMap lift_nested_embedding(const std::vector<int>& f, const NestedSum& a, const NestedSum& b,
                               const std::vector<ChainMap>& g);

// For a homomorphism: injective iff the subcover of e stays below e.
// Throws NoSubcover on the trivial domain.
bool subcover_injectivity(const ChainMap& map);

}  // namespace resichain
