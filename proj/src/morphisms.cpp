#include "resichain/morphisms.hpp"

#include "resichain/error.hpp"

namespace resichain {

ChainMap identity_map(const FiniteChain& chain) {
  std::vector<Element> image(static_cast<std::size_t>(chain.size()));
  for (Element x = 0; x < chain.size(); ++x) image[static_cast<std::size_t>(x)] = x;
  return {chain, chain, std::move(image)};
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  std::vector<Element> image;
  image.reserve(f.image.size());
  for (Element v : f.image) image.push_back(g(v));
  return {f.domain, g.codomain, std::move(image)};
}

bool is_order_preserving(const ChainMap& map) {
  for (std::size_t i = 1; i < map.image.size(); ++i)
    if (map.image[i - 1] > map.image[i]) return false;
  return true;
}

bool is_injective(const ChainMap& map) {
  auto sorted = map.image;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

namespace {

bool well_formed(const ChainMap& map) {
  if (static_cast<int>(map.image.size()) != map.domain.size()) return false;
  for (Element v : map.image)
    if (v < 0 || v >= map.codomain.size()) return false;
  return true;
}

}  // namespace

bool is_homomorphism(const ChainMap& map) {
  if (!well_formed(map)) return false;
  auto const& a = map.domain;
  auto const& b = map.codomain;
  if (map(a.unit()) != b.unit() || !is_order_preserving(map)) return false;
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      Element const hx = map(x), hy = map(y);
      if (map(a.mult(x, y)) != b.mult(hx, hy)) return false;
      if (map(a.left_residual(x, y)) != b.left_residual(hx, hy)) return false;
      if (map(a.right_residual(y, x)) != b.right_residual(hy, hx)) return false;
    }
  }
  return true;
}

bool is_embedding_by_criterion(const ChainMap& map) {
  if (!well_formed(map)) return false;
  auto const& a = map.domain;
  auto const& b = map.codomain;
  if (map(a.unit()) != b.unit()) return false;
  for (std::size_t i = 1; i < map.image.size(); ++i)
    if (map.image[i - 1] >= map.image[i]) return false;
  for (Element x = 0; x < a.size(); ++x) {
    if (map(a.ell(x)) != b.ell(map(x))) return false;
    if (map(a.r(x)) != b.r(map(x))) return false;
  }
  return true;
}

bool is_embedding_definitional(const ChainMap& map) {
  return well_formed(map) && is_injective(map) && is_homomorphism(map);
}

bool is_embedding(const ChainMap& map) {
  if (map.domain.is_idempotent() && map.codomain.is_idempotent()) return is_embedding_by_criterion(map);
  return is_embedding_definitional(map);
}

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const FiniteChain& a, const FiniteChain& b, const std::vector<std::optional<Element>>& fixed,
                  const ImageVisitor& visit)
      : a_(a), b_(b), fixed_(fixed), visit_(visit), idempotent_(a.is_idempotent() && b.is_idempotent()) {
    auto const n = static_cast<std::size_t>(a.size());
    image_.assign(n, -1);
    ell_pre_.resize(n);
    r_pre_.resize(n);
    for (Element x = 0; x < a.size(); ++x) {
      ell_pre_[static_cast<std::size_t>(a.ell(x))].push_back(x);
      r_pre_[static_cast<std::size_t>(a.r(x))].push_back(x);
    }
  }

  void run() {
    if (a_.size() > b_.size()) return;
    if (a_.size() == 1) {
      // The trivial chain maps onto e.
      image_[0] = b_.unit();
      if (admissible_fixed(0, b_.unit())) visit_(image_);
      return;
    }
    dfs(0, 0);
  }

 private:
  bool admissible_fixed(Element x, Element v) const {
    auto const& f = fixed_.size() > static_cast<std::size_t>(x) ? fixed_[static_cast<std::size_t>(x)]
                                                                 : std::optional<Element>{};
    return !f || *f == v;
  }

  // Checks x^l and x^r against every already assigned element.
  bool consistent(Element x) const {
    auto img = [&](Element y) { return image_[static_cast<std::size_t>(y)]; };
    Element const hx = img(x);
    if (Element l = a_.ell(x); l <= x && img(l) != b_.ell(hx)) return false;
    if (Element r = a_.r(x); r <= x && img(r) != b_.r(hx)) return false;
    for (Element y : ell_pre_[static_cast<std::size_t>(x)])
      if (y < x && b_.ell(img(y)) != hx) return false;
    for (Element y : r_pre_[static_cast<std::size_t>(x)])
      if (y < x && b_.r(img(y)) != hx) return false;
    return true;
  }

  void dfs(Element x, Element lo) {
    if (stop_) return;
    if (x == a_.size()) {
      if (!idempotent_ && !is_homomorphism({a_, b_, image_})) return;
      if (!visit_(image_)) stop_ = true;
      return;
    }
    Element const ua = a_.unit(), ub = b_.unit();
    Element hi;
    if (x < ua) {
      hi = ub - (ua - x);
    } else if (x == ua) {
      lo = std::max(lo, ub);
      hi = ub;
    } else {
      hi = b_.size() - (a_.size() - x);
    }
    for (Element v = lo; v <= hi && !stop_; ++v) {
      if (!admissible_fixed(x, v)) continue;
      image_[static_cast<std::size_t>(x)] = v;
      if (idempotent_ && !consistent(x)) continue;
      dfs(x + 1, v + 1);
    }
    image_[static_cast<std::size_t>(x)] = -1;
  }

  const FiniteChain& a_;
  const FiniteChain& b_;
  const std::vector<std::optional<Element>>& fixed_;
  const ImageVisitor& visit_;
  bool idempotent_;
  bool stop_ = false;
  std::vector<Element> image_;
  std::vector<std::vector<Element>> ell_pre_, r_pre_;
};

}  // namespace

void for_each_embedding(const FiniteChain& a, const FiniteChain& b,
                        const std::vector<std::optional<Element>>& fixed, const ImageVisitor& visit) {
  EmbeddingSearch(a, b, fixed, visit).run();
}

void for_each_embedding(const FiniteChain& a, const FiniteChain& b, const ImageVisitor& visit) {
  std::vector<std::optional<Element>> const none;
  for_each_embedding(a, b, none, visit);
}

std::vector<ChainMap> enumerate_embeddings(const FiniteChain& a, const FiniteChain& b) {
  std::vector<ChainMap> out;
  for_each_embedding(a, b, [&](const std::vector<Element>& image) {
    out.push_back({a, b, image});
    return true;
  });
  return out;
}

std::size_t count_embeddings(const FiniteChain& a, const FiniteChain& b) {
  std::size_t count = 0;
  for_each_embedding(a, b, [&](const std::vector<Element>&) {
    ++count;
    return true;
  });
  return count;
}

bool is_convex_normal_subuniverse(const FiniteChain& chain, Element lo, Element hi) {
  Element const e = chain.unit();
  if (lo > e || hi < e || lo < 0 || hi >= chain.size()) return false;
  std::vector<Element> universe;
  for (Element x = lo; x <= hi; ++x) universe.push_back(x);
  if (!is_subuniverse(chain, universe)) return false;
  if (chain.is_commutative()) return true;
  auto inside = [&](Element z) { return lo <= z && z <= hi; };
  for (Element a = 0; a < chain.size(); ++a) {
    for (Element x = lo; x <= hi; ++x) {
      if (!inside(std::min(chain.left_residual(a, chain.mult(x, a)), e))) return false;
      if (!inside(std::min(chain.right_residual(chain.mult(a, x), a), e))) return false;
    }
  }
  return true;
}

namespace {

Congruence from_block_ids(const FiniteChain& chain, std::vector<int> block_of) {
  Congruence theta{chain, {}, std::move(block_of), {}};
  for (Element x = 0; x < chain.size(); ++x) {
    auto const b = static_cast<std::size_t>(theta.block_of[static_cast<std::size_t>(x)]);
    if (b >= theta.blocks.size()) theta.blocks.resize(b + 1);
    theta.blocks[b].push_back(x);
  }
  theta.kernel_class = theta.blocks[static_cast<std::size_t>(theta.block_of[static_cast<std::size_t>(chain.unit())])];
  return theta;
}

}  // namespace

Congruence congruence_from_kernel(const FiniteChain& chain, Element lo, Element hi) {
  Element const e = chain.unit();
  auto related = [&](Element x, Element y) {
    Element const v = std::min({chain.left_residual(x, y), chain.left_residual(y, x), e});
    return lo <= v && v <= hi;
  };
  std::vector<int> block_of(static_cast<std::size_t>(chain.size()), 0);
  for (Element x = 1; x < chain.size(); ++x)
    block_of[static_cast<std::size_t>(x)] = block_of[static_cast<std::size_t>(x - 1)] + (related(x - 1, x) ? 0 : 1);
  return from_block_ids(chain, std::move(block_of));
}

std::vector<Congruence> congruences(const FiniteChain& chain) {
  Element const e = chain.unit();
  std::vector<std::pair<Element, Element>> kernels;
  for (Element lo = e; lo >= 0; --lo)
    for (Element hi = e; hi < chain.size(); ++hi)
      if (is_convex_normal_subuniverse(chain, lo, hi)) kernels.emplace_back(lo, hi);
  std::sort(kernels.begin(), kernels.end(), [](auto const& p, auto const& q) {
    auto const sp = p.second - p.first, sq = q.second - q.first;
    return sp != sq ? sp < sq : p < q;
  });
  std::vector<Congruence> out;
  for (auto [lo, hi] : kernels) out.push_back(congruence_from_kernel(chain, lo, hi));
  return out;
}

Congruence kernel(const ChainMap& map) {
  std::vector<int> block_of(map.image.size(), 0);
  for (std::size_t x = 1; x < map.image.size(); ++x)
    block_of[x] = block_of[x - 1] + (map.image[x] == map.image[x - 1] ? 0 : 1);
  return from_block_ids(map.domain, std::move(block_of));
}

Quotient quotient(const FiniteChain& chain, const Congruence& theta) {
  int const k = static_cast<int>(theta.blocks.size());
  std::vector<Element> mult(static_cast<std::size_t>(k * k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      Element const x = theta.blocks[static_cast<std::size_t>(i)].front();
      Element const y = theta.blocks[static_cast<std::size_t>(j)].front();
      mult[static_cast<std::size_t>(i * k + j)] = theta.block_of[static_cast<std::size_t>(chain.mult(x, y))];
    }
  }
  std::vector<std::string> labels;
  for (auto const& block : theta.blocks) {
    if (block.size() == 1)
      labels.push_back(chain.label(block.front()));
    else
      labels.push_back("[" + chain.label(block.front()) + ".." + chain.label(block.back()) + "]");
  }
  auto q = FiniteChain::make(k, theta.block_of[static_cast<std::size_t>(chain.unit())], std::move(mult),
                             std::move(labels));
  std::vector<Element> projection(theta.block_of.begin(), theta.block_of.end());
  return {q, {chain, q, std::move(projection)}};
}

void for_each_homomorphism(const FiniteChain& a, const FiniteChain& b, const ImageVisitor& visit) {
  bool stop = false;
  for (auto const& theta : congruences(a)) {
    auto const q = quotient(a, theta);
    for_each_embedding(q.chain, b, [&](const std::vector<Element>& image) {
      std::vector<Element> composed;
      composed.reserve(q.projection.image.size());
      for (Element v : q.projection.image) composed.push_back(image[static_cast<std::size_t>(v)]);
      if (!visit(composed)) stop = true;
      return !stop;
    });
    if (stop) return;
  }
}

std::vector<ChainMap> enumerate_homomorphisms(const FiniteChain& a, const FiniteChain& b) {
  std::vector<ChainMap> out;
  for_each_homomorphism(a, b, [&](const std::vector<Element>& image) {
    out.push_back({a, b, image});
    return true;
  });
  std::sort(out.begin(), out.end(), [](auto const& p, auto const& q) { return p.image < q.image; });
  return out;
}

ChainMap lift_nested_embedding(const std::vector<int>& f, const NestedSum& a, const NestedSum& b,
                               const std::vector<ChainMap>& g) {
  auto const ka = static_cast<int>(a.descriptor.size());
  auto const kb = static_cast<int>(b.descriptor.size());
  if (static_cast<int>(f.size()) != ka || static_cast<int>(g.size()) != ka)
    throw Error("InvalidArgument", "index map and component list must cover every summand of the domain");
  for (int i = 0; i < ka; ++i) {
    auto const fi = f[static_cast<std::size_t>(i)];
    if (fi < 0 || fi >= kb || (i > 0 && f[static_cast<std::size_t>(i - 1)] >= fi))
      throw Error("NotOrderEmbedding", "index map is not strictly increasing", {i});
  }
  // An admissible top summand may sit anywhere; otherwise it must stay on top.
  if (ka > 0 && f.back() != kb - 1 && !a.descriptor.summands.back().chain.predicates().admissible)
    throw Error("TopNotPreserved", "the top summand must map to the top summand",
                {static_cast<long long>(ka - 1), static_cast<long long>(f.back())});
  for (int i = 0; i < ka; ++i) {
    auto const& gi = g[static_cast<std::size_t>(i)];
    auto const& src = a.descriptor.summands[static_cast<std::size_t>(i)].chain;
    auto const& dst = b.descriptor.summands[static_cast<std::size_t>(f[static_cast<std::size_t>(i)])].chain;
    if (!(gi.domain == src) || !(gi.codomain == dst) || !is_embedding(gi))
      throw Error("ComponentNotEmbedding", "component " + std::to_string(i) + " is not an embedding", {i});
  }

  std::vector<Element> image(static_cast<std::size_t>(a.chain.size()), b.chain.unit());
  for (int i = 0; i < ka; ++i) {
    auto const& gi = g[static_cast<std::size_t>(i)];
    auto const& place_a = a.descriptor.placement[static_cast<std::size_t>(i)];
    auto const& place_b = b.descriptor.placement[static_cast<std::size_t>(f[static_cast<std::size_t>(i)])];
    for (std::size_t x = 0; x < place_a.size(); ++x)
      image[static_cast<std::size_t>(place_a[x])] = place_b[static_cast<std::size_t>(gi.image[x])];
  }
  return {a.chain, b.chain, std::move(image)};
}

bool subcover_injectivity(const ChainMap& map) {
  Element const e = map.domain.unit();
  if (e == 0) throw Error("NoSubcover", "e has no subcover in the domain");
  return map(e - 1) < map(e);
}

}  // namespace resichain
