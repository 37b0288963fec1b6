#pragma once

// The canonical commutative idempotent chains and the nested sum operator.

#include <string>
#include <vector>

#include "resichain/chain.hpp"

namespace resichain {

// Relative Stone chain c_n < ... < c_1 < e with xy = min(x, y).
FiniteChain go(int n);

// b_m < ... < b_0 < e < a_n < ... < a_0, with a_i a_j = a_min(i,j),
// b_k b_l = b_max(k,l) and a_i b_k = b_k.
FiniteChain com(int m, int n);

struct Summand {
  std::string label;
  FiniteChain chain;
};

// Summands listed outermost first; the last one is the top position.
// placement[i][x] is the index in the sum of element x of summand i.
struct NestedSumDescriptor {
  std::vector<Summand> summands;
  std::vector<std::vector<Element>> placement;

  std::size_t size() const noexcept { return summands.size(); }
};

struct NestedSum {
  FiniteChain chain;
  NestedSumDescriptor descriptor;
};

// Glues the parts at the unit, placing later parts strictly inside earlier
// ones. Cross-summand products are taken from the outer summand: for x in
// part i and y in part j > i, xy = yx = x. Every part except the last must be
// admissible; otherwise throws Error("NotAdmissible", witness = {index}).
// An empty list yields the trivial chain.
NestedSum nested_sum(const std::vector<Summand>& parts);
NestedSum nested_sum(const std::vector<FiniteChain>& parts);

// Parses "go:N", "com:M,N" and "+"-joined sums such as "com:1,1+go:2".
FiniteChain make_from_spec(const std::string& spec);

}  // namespace resichain
