#include "resichain/decomposition.hpp"

#include <map>

#include "resichain/error.hpp"

namespace resichain {

int DecompositionSignature::size() const noexcept {
  int total = p + 1;
  for (auto [m, n] : pairs) total += m + n + 2;
  return total;
}

std::string DecompositionSignature::to_string() const {
  std::string out;
  for (auto [m, n] : pairs) {
    if (!out.empty()) out += " ⊞ ";
    out += "C(" + std::to_string(m) + "," + std::to_string(n) + ")";
  }
  if (p > 0 || pairs.empty()) {
    if (!out.empty()) out += " ⊞ ";
    out += "Go_" + std::to_string(p);
  }
  return out;
}

namespace {

void require_commutative_idempotent(const FiniteChain& chain) {
  if (!chain.is_commutative()) throw Error("NotCommutative", "chain is not commutative");
  if (!chain.is_idempotent()) throw Error("NotIdempotent", "chain is not idempotent");
}

}  // namespace

std::vector<Element> sugihara_skeleton(const FiniteChain& chain) {
  require_commutative_idempotent(chain);
  std::vector<Element> out;
  for (Element x = 0; x < chain.size(); ++x)
    if (chain.star(chain.star(x)) == x) out.push_back(x);
  return out;
}

DecompositionSignature decompose(const FiniteChain& chain) {
  auto const skeleton = sugihara_skeleton(chain);
  Element const e = chain.unit();
  std::map<Element, int> block_size;
  for (Element x = 0; x < chain.size(); ++x) ++block_size[chain.star(chain.star(x))];

  std::vector<Element> below, above;
  for (Element s : skeleton) {
    if (s < e) below.push_back(s);
    if (s > e) above.push_back(s);
  }
  if (below.size() != above.size())
    throw Error("InternalError", "skeleton is not symmetric around e");
  std::reverse(above.begin(), above.end());

  DecompositionSignature sig;
  for (std::size_t i = 0; i < below.size(); ++i)
    sig.pairs.emplace_back(block_size[below[i]] - 1, block_size[above[i]] - 1);
  sig.p = block_size[e] - 1;
  return sig;
}

NestedSum recompose(const DecompositionSignature& signature) {
  std::vector<Summand> parts;
  for (auto [m, n] : signature.pairs)
    parts.push_back({"C(" + std::to_string(m) + "," + std::to_string(n) + ")", com(m, n)});
  parts.push_back({"Go_" + std::to_string(signature.p), go(signature.p)});
  return nested_sum(parts);
}

std::uint64_t count_chains(int n) {
  if (n < 1) return 0;
  // t[s]: ways to fill weight s with pairs (weight m+n+2, w-1 shapes each)
  // followed by a Goedel tail taking the rest.
  std::vector<std::uint64_t> t(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    std::uint64_t ways = 1;
    for (int w = 2; w <= s; ++w) ways += static_cast<std::uint64_t>(w - 1) * t[static_cast<std::size_t>(s - w)];
    t[static_cast<std::size_t>(s)] = ways;
  }
  return t[static_cast<std::size_t>(n - 1)];
}

namespace {

void extend(int remaining, DecompositionSignature& current, std::vector<DecompositionSignature>& out) {
  for (int m = 0; m + 2 <= remaining; ++m) {
    for (int n = 0; m + n + 2 <= remaining; ++n) {
      current.pairs.emplace_back(m, n);
      extend(remaining - m - n - 2, current, out);
      current.pairs.pop_back();
    }
  }
  current.p = remaining;
  out.push_back(current);
  current.p = 0;
}

}  // namespace

std::vector<DecompositionSignature> all_signatures(int n) {
  std::vector<DecompositionSignature> out;
  if (n < 1) return out;
  DecompositionSignature current;
  extend(n - 1, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace resichain
