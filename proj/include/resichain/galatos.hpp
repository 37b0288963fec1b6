#pragma once

// The infinite idempotent chains A_S, handled symbolically.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "resichain/chain.hpp"
#include "resichain/words.hpp"

namespace resichain {

struct ASElement {
  enum class Tag { E, A, B };
  Tag tag = Tag::E;
  Index i = 0;

  static ASElement e() { return {}; }
  static ASElement a(Index i) { return {Tag::A, std::move(i)}; }
  static ASElement b(Index i) { return {Tag::B, std::move(i)}; }

  // "e", "a:3", "b:-2"
  static ASElement parse(const std::string& text);
  std::string to_string() const;

  bool operator==(const ASElement& other) const { return tag == other.tag && (tag == Tag::E || i == other.i); }
};

// b_i < b_j < e < a_j < a_i whenever i < j.
std::strong_ordering as_compare(const ASElement& x, const ASElement& y);
bool as_less(const ASElement& x, const ASElement& y);
const ASElement& as_min(const ASElement& x, const ASElement& y);
const ASElement& as_max(const ASElement& x, const ASElement& y);

ASElement as_mult(const SetSpec& s, const ASElement& x, const ASElement& y);
ASElement as_unary(const SetSpec& s, const ASElement& x, Derived which);
// Left: x\y. Right: y/x.
ASElement as_residual(const SetSpec& s, const ASElement& x, const ASElement& y, Side side);

struct ReachResult {
  // Sorted ascending in the chain order.
  std::vector<ASElement> elements;
  // Index ranges covered by each letter, if any element of it was reached.
  std::optional<std::pair<Index, Index>> a_range, b_range;
  // True when every index inside the range was reached.
  bool a_contiguous = true, b_contiguous = true;
};

// Closure of {start} under x^l and x^r, truncated at depth applications.
// Throws StartIsUnit.
ReachResult generated_reach(const SetSpec& s, const ASElement& start, int depth);

}  // namespace resichain
