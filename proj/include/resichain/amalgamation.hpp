#pragma once

// Spans of embeddings, bounded amalgam search inside a class of chains, and
// the constructive amalgams for Goedel chains, C(m,n) chains and nested sums.

#include <functional>
#include <optional>
#include <vector>

#include "resichain/chain.hpp"
#include "resichain/constructors.hpp"
#include "resichain/morphisms.hpp"

namespace resichain {

struct Span {
  FiniteChain a, b, c;
  ChainMap ib, ic;
};

// Throws InvalidSpan unless ib: A -> B and ic: A -> C are embeddings.
void validate_span(const Span& span);

struct AmalgamResult {
  FiniteChain d;
  ChainMap jb, jc;
  // jc is only required to be a homomorphism.
  bool one_sided = false;
};

// Rechecks every invariant: jb an embedding, jc an embedding or (one-sided) a
// homomorphism, and jb . ib = jc . ic.
bool verify_amalgam(const Span& span, const AmalgamResult& result);

// A class of finite chains: a membership test plus a generator of its members
// of a given size in canonical order. max_member_size is set iff the class is
// finite.
struct ClassMembership {
  std::function<bool(const FiniteChain&)> contains;
  std::function<std::vector<FiniteChain>(int)> members_of_size;
  std::optional<int> max_member_size;
};

// Finite class given by its members.
ClassMembership membership_from_list(const std::vector<FiniteChain>& members);
// Predicate over enumerate_chains output with the given filter; treated as infinite.
ClassMembership membership_from_predicate(std::function<bool(const FiniteChain&)> contains,
                                          EnumerationFilter filter = {});

enum class SearchOutcome { Found, Refuted, BoundExhausted };
const char* to_string(SearchOutcome outcome);

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::BoundExhausted;
  std::optional<AmalgamResult> amalgam;
  // Refuted results are complete: every member of the class was examined.
  bool complete = false;
  std::size_t candidates_examined = 0;
};

// Searches candidates D of the class by increasing size, then canonical
// order, up to size_bound; the first certificate in that order is returned
// regardless of jobs. Throws InvalidSpan.
SearchResult find_amalgam(const Span& span, const ClassMembership& membership, int size_bound,
                          bool one_sided, int jobs = 1);

// Constructive amalgam when A, B, C are all Goedel chains or all of shape
// C(r,s): each gap between consecutive images of A receives as many elements
// as the larger of the two sides. Throws ShapeMismatch.
AmalgamResult amalgamate_components(const Span& span);

// Merges nested sums sharing summands by label. Shared labels must occur in
// the same relative order in B and C with identical components; between
// consecutive shared labels, B-only summands precede C-only ones. Throws
// SharedOrderConflict or ComponentMismatch.
NestedSum merge_nested_span(const NestedSumDescriptor& a, const NestedSumDescriptor& b,
                            const NestedSumDescriptor& c);

// Inclusion of a nested sum into a merged one by summand labels, lifted from
// identity maps on the components.
ChainMap nested_inclusion(const NestedSum& part, const NestedSum& merged);

}  // namespace resichain
