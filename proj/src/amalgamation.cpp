#include "resichain/amalgamation.hpp"

#include <atomic>
#include <map>
#include <thread>

#include "resichain/decomposition.hpp"
#include "resichain/error.hpp"

namespace resichain {

void validate_span(const Span& span) {
  auto check = [](const ChainMap& map, const FiniteChain& dom, const FiniteChain& cod, const char* name) {
    if (!(map.domain == dom) || !(map.codomain == cod))
      throw Error("InvalidSpan", std::string(name) + " has the wrong domain or codomain");
    if (!is_embedding(map)) throw Error("InvalidSpan", std::string(name) + " is not an embedding");
  };
  check(span.ib, span.a, span.b, "iB");
  check(span.ic, span.a, span.c, "iC");
}

bool verify_amalgam(const Span& span, const AmalgamResult& result) {
  auto const& jb = result.jb;
  auto const& jc = result.jc;
  if (!(jb.domain == span.b) || !(jb.codomain == result.d)) return false;
  if (!(jc.domain == span.c) || !(jc.codomain == result.d)) return false;
  if (jb.image.size() != static_cast<std::size_t>(span.b.size())) return false;
  if (jc.image.size() != static_cast<std::size_t>(span.c.size())) return false;
  if (!is_embedding_definitional(jb)) return false;
  if (result.one_sided ? !is_homomorphism(jc) : !is_embedding_definitional(jc)) return false;
  for (Element x = 0; x < span.a.size(); ++x)
    if (jb(span.ib(x)) != jc(span.ic(x))) return false;
  return true;
}

ClassMembership membership_from_list(const std::vector<FiniteChain>& members) {
  auto by_size = std::make_shared<std::map<int, std::vector<FiniteChain>>>();
  int max_size = 0;
  for (auto const& m : members) {
    auto& bucket = (*by_size)[m.size()];
    if (std::none_of(bucket.begin(), bucket.end(), [&](auto const& x) { return iso_equal(x, m); }))
      bucket.push_back(m);
    max_size = std::max(max_size, m.size());
  }
  for (auto& [size, bucket] : *by_size) std::sort(bucket.begin(), bucket.end(), signature_less);
  ClassMembership out;
  out.contains = [by_size](const FiniteChain& chain) {
    auto it = by_size->find(chain.size());
    return it != by_size->end() &&
           std::any_of(it->second.begin(), it->second.end(), [&](auto const& x) { return iso_equal(x, chain); });
  };
  out.members_of_size = [by_size](int n) {
    auto it = by_size->find(n);
    return it == by_size->end() ? std::vector<FiniteChain>{} : it->second;
  };
  out.max_member_size = max_size;
  return out;
}

ClassMembership membership_from_predicate(std::function<bool(const FiniteChain&)> contains,
                                          EnumerationFilter filter) {
  ClassMembership out;
  out.contains = contains;
  out.members_of_size = [contains, filter](int n) {
    std::vector<FiniteChain> keep;
    for (auto& chain : enumerate_chains(n, filter))
      if (contains(chain)) keep.push_back(std::move(chain));
    return keep;
  };
  return out;
}

const char* to_string(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::Found:
      return "Found";
    case SearchOutcome::Refuted:
      return "Refuted";
    case SearchOutcome::BoundExhausted:
      return "BoundExhausted";
  }
  return "?";
}

namespace {

class CandidateTester {
 public:
  CandidateTester(const Span& span, bool one_sided) : span_(span), one_sided_(one_sided) {
    if (!one_sided) {
      quotients_.push_back({span.c, identity_map(span.c)});
      return;
    }
    // jc . ic = jb . ib is injective, so the kernel of jc must separate ic(A).
    for (auto const& theta : congruences(span.c)) {
      bool separates = true;
      for (Element x = 1; x < span.a.size() && separates; ++x)
        separates = theta.block_of[static_cast<std::size_t>(span.ic(x - 1))] !=
                    theta.block_of[static_cast<std::size_t>(span.ic(x))];
      if (separates) quotients_.push_back(quotient(span.c, theta));
    }
  }

  std::optional<AmalgamResult> test(const FiniteChain& d) const {
    std::optional<AmalgamResult> found;
    for_each_embedding(span_.b, d, [&](const std::vector<Element>& jb) {
      for (auto const& q : quotients_) {
        std::vector<std::optional<Element>> fixed(static_cast<std::size_t>(q.chain.size()));
        for (Element x = 0; x < span_.a.size(); ++x)
          fixed[static_cast<std::size_t>(q.projection(span_.ic(x)))] = jb[static_cast<std::size_t>(span_.ib(x))];
        for_each_embedding(q.chain, d, fixed, [&](const std::vector<Element>& emb) {
          std::vector<Element> jc;
          jc.reserve(q.projection.image.size());
          for (Element v : q.projection.image) jc.push_back(emb[static_cast<std::size_t>(v)]);
          found = AmalgamResult{d, {span_.b, d, jb}, {span_.c, d, std::move(jc)}, one_sided_};
          return false;
        });
        if (found) return false;
      }
      return true;
    });
    return found;
  }

 private:
  const Span& span_;
  bool one_sided_;
  std::vector<Quotient> quotients_;
};

}  // namespace

SearchResult find_amalgam(const Span& span, const ClassMembership& membership, int size_bound, bool one_sided,
                          int jobs) {
  validate_span(span);
  CandidateTester const tester(span, one_sided);
  SearchResult result;
  int const lo = one_sided ? span.b.size() : std::max(span.b.size(), span.c.size());

  for (int n = lo; n <= size_bound; ++n) {
    if (membership.max_member_size && n > *membership.max_member_size) break;
    auto const candidates = membership.members_of_size(n);
    std::vector<std::optional<AmalgamResult>> found(candidates.size());
    if (jobs <= 1 || candidates.size() < 2) {
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        ++result.candidates_examined;
        found[i] = tester.test(candidates[i]);
        if (found[i]) break;
      }
    } else {
      std::atomic<std::size_t> next{0}, best{candidates.size()}, examined{0};
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < candidates.size() && i < best.load(); i = next++) {
            ++examined;
            found[i] = tester.test(candidates[i]);
            if (!found[i]) continue;
            auto cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
          }
        });
      }
      for (auto& th : pool) th.join();
      result.candidates_examined += examined.load();
    }
    for (auto& f : found) {
      if (f) {
        result.outcome = SearchOutcome::Found;
        result.amalgam = std::move(f);
        result.complete = true;
        return result;
      }
    }
  }
  if (membership.max_member_size && *membership.max_member_size <= size_bound) {
    result.outcome = SearchOutcome::Refuted;
    result.complete = true;
  } else {
    result.outcome = SearchOutcome::BoundExhausted;
  }
  return result;
}

namespace {

struct SegmentMerge {
  int size = 0;
  std::vector<int> from_b, from_c;
};

// Merges two segments of sizes nb and nc that share the marked positions
// ab[k] ~ ac[k]. Each gap gets max(gap in B, gap in C) slots, filled from the
// bottom by both sides.
SegmentMerge merge_segments(int nb, const std::vector<int>& ab, int nc, const std::vector<int>& ac) {
  SegmentMerge out;
  out.from_b.assign(static_cast<std::size_t>(nb), -1);
  out.from_c.assign(static_cast<std::size_t>(nc), -1);
  int pos = 0, prev_b = -1, prev_c = -1;
  for (std::size_t g = 0; g <= ab.size(); ++g) {
    int const end_b = g < ab.size() ? ab[g] : nb;
    int const end_c = g < ac.size() ? ac[g] : nc;
    int const kb = end_b - prev_b - 1, kc = end_c - prev_c - 1;
    for (int t = 0; t < kb; ++t) out.from_b[static_cast<std::size_t>(prev_b + 1 + t)] = pos + t;
    for (int t = 0; t < kc; ++t) out.from_c[static_cast<std::size_t>(prev_c + 1 + t)] = pos + t;
    pos += std::max(kb, kc);
    if (g < ab.size()) {
      out.from_b[static_cast<std::size_t>(end_b)] = pos;
      out.from_c[static_cast<std::size_t>(end_c)] = pos;
      ++pos;
    }
    prev_b = end_b;
    prev_c = end_c;
  }
  out.size = pos;
  return out;
}

enum class Shape { Goedel, Sugihara, Other };

Shape shape_of(const FiniteChain& chain) {
  if (!chain.is_commutative() || !chain.is_idempotent()) return Shape::Other;
  auto const sig = decompose(chain);
  if (sig.pairs.empty()) return Shape::Goedel;
  if (sig.pairs.size() == 1 && sig.p == 0) return Shape::Sugihara;
  return Shape::Other;
}

// Marked positions of A inside the part of X strictly below (upper = false)
// or strictly above (upper = true) the unit, relative to that part.
std::vector<int> marks(const Span& span, const ChainMap& i, bool upper) {
  std::vector<int> out;
  Element const ua = span.a.unit(), ux = i.codomain.unit();
  for (Element x = 0; x < span.a.size(); ++x) {
    if (!upper && x < ua) out.push_back(i(x));
    if (upper && x > ua) out.push_back(i(x) - ux - 1);
  }
  return out;
}

}  // namespace

AmalgamResult amalgamate_components(const Span& span) {
  validate_span(span);
  auto const sa = shape_of(span.a), sb = shape_of(span.b), sc = shape_of(span.c);
  if (sa == Shape::Other || sa != sb || sa != sc)
    throw Error("ShapeMismatch", "A, B and C must all be Goedel chains or all of shape C(r,s)");

  auto const& b = span.b;
  auto const& c = span.c;
  auto const lower = merge_segments(b.unit(), marks(span, span.ib, false), c.unit(), marks(span, span.ic, false));
  SegmentMerge upper;
  if (sa == Shape::Sugihara)
    upper = merge_segments(b.size() - b.unit() - 1, marks(span, span.ib, true), c.size() - c.unit() - 1,
                           marks(span, span.ic, true));

  auto const d = sa == Shape::Goedel ? go(lower.size) : com(lower.size - 1, upper.size - 1);
  auto build = [&](const FiniteChain& x, const std::vector<int>& low, const std::vector<int>& up) {
    std::vector<Element> image(static_cast<std::size_t>(x.size()));
    for (Element v = 0; v < x.size(); ++v) {
      if (v < x.unit())
        image[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)];
      else if (v == x.unit())
        image[static_cast<std::size_t>(v)] = d.unit();
      else
        image[static_cast<std::size_t>(v)] = d.unit() + 1 + up[static_cast<std::size_t>(v - x.unit() - 1)];
    }
    return ChainMap{x, d, std::move(image)};
  };
  return {d, build(b, lower.from_b, upper.from_b), build(c, lower.from_c, upper.from_c), false};
}

namespace {

int find_summand(const NestedSumDescriptor& desc, const std::string& label) {
  for (std::size_t i = 0; i < desc.summands.size(); ++i)
    if (desc.summands[i].label == label) return static_cast<int>(i);
  return -1;
}

}  // namespace

NestedSum merge_nested_span(const NestedSumDescriptor& a, const NestedSumDescriptor& b,
                            const NestedSumDescriptor& c) {
  auto shared = [&](const std::string& label) { return find_summand(b, label) >= 0 && find_summand(c, label) >= 0; };

  // A's summands must be shared, in the same order, with identical components.
  int last_b = -1, last_c = -1;
  for (auto const& s : a.summands) {
    int const ib = find_summand(b, s.label), ic = find_summand(c, s.label);
    if (ib < 0 || ic < 0) throw Error("SharedOrderConflict", "summand " + s.label + " of A is missing in B or C");
    if (ib <= last_b || ic <= last_c)
      throw Error("SharedOrderConflict", "summand " + s.label + " is out of order", {ib, ic});
    last_b = ib;
    last_c = ic;
  }

  std::vector<Summand> merged;
  std::size_t i = 0, j = 0;
  auto const& bs = b.summands;
  auto const& cs = c.summands;
  while (i < bs.size() || j < cs.size()) {
    if (i < bs.size() && !shared(bs[i].label)) {
      merged.push_back(bs[i++]);
    } else if (j < cs.size() && !shared(cs[j].label)) {
      merged.push_back(cs[j++]);
    } else if (i < bs.size() && j < cs.size() && bs[i].label == cs[j].label) {
      if (!(bs[i].chain == cs[j].chain))
        throw Error("ComponentMismatch", "shared summand " + bs[i].label + " differs between B and C",
                    {static_cast<long long>(i), static_cast<long long>(j)});
      merged.push_back(bs[i]);
      ++i;
      ++j;
    } else {
      throw Error("SharedOrderConflict", "shared summands occur in different orders in B and C",
                  {static_cast<long long>(i), static_cast<long long>(j)});
    }
  }
  return nested_sum(merged);
}

ChainMap nested_inclusion(const NestedSum& part, const NestedSum& merged) {
  std::vector<int> f;
  std::vector<ChainMap> g;
  for (auto const& s : part.descriptor.summands) {
    int const k = find_summand(merged.descriptor, s.label);
    if (k < 0) throw Error("SharedOrderConflict", "summand " + s.label + " is missing from the merged sum");
    f.push_back(k);
    auto const& target = merged.descriptor.summands[static_cast<std::size_t>(k)].chain;
    auto id = identity_map(s.chain);
    g.push_back({s.chain, target, id.image});
  }
  return lift_nested_embedding(f, part, merged, g);
}

}  // namespace resichain
