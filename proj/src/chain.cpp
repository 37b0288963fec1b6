#include "resichain/chain.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <string_view>
#include <thread>

#include "resichain/error.hpp"

namespace resichain {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::MalformedTable:
      return "MalformedTable";
    case ViolationKind::UnitOutOfRange:
      return "UnitOutOfRange";
    case ViolationKind::NotAMonoid:
      return "NotAMonoid";
    case ViolationKind::NotMonotone:
      return "NotMonotone";
    case ViolationKind::NotResiduated:
      return "NotResiduated";
  }
  return "?";
}

namespace {

std::vector<Violation> check_table(int n, Element u, const std::vector<Element>& m) {
  std::vector<Violation> out;
  if (n < 1) {
    out.push_back({ViolationKind::MalformedTable, {}, "size must be positive"});
    return out;
  }
  auto const nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (m.size() != nn) {
    out.push_back({ViolationKind::MalformedTable, {}, "table must have size*size entries"});
    return out;
  }
  for (std::size_t i = 0; i < nn; ++i) {
    if (m[i] < 0 || m[i] >= n) {
      out.push_back({ViolationKind::MalformedTable,
                     {static_cast<Element>(i) / n, static_cast<Element>(i) % n},
                     "entry out of range"});
      return out;
    }
  }
  if (u < 0 || u >= n) {
    out.push_back({ViolationKind::UnitOutOfRange, {u}, "unit index out of range"});
    return out;
  }
  auto at = [&](Element x, Element y) { return m[static_cast<std::size_t>(x * n + y)]; };

  // A missing unit law and a failed associativity check are both monoid failures;
  // report the first of each.
  for (Element x = 0; x < n; ++x) {
    if (at(u, x) != x || at(x, u) != x) {
      out.push_back({ViolationKind::NotAMonoid, {u, x}, "unit law fails"});
      break;
    }
  }
  [&] {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z)
          if (at(at(x, y), z) != at(x, at(y, z))) {
            out.push_back({ViolationKind::NotAMonoid, {x, y, z}, "associativity fails"});
            return;
          }
  }();
  [&] {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y + 1 < n; ++y) {
        if (at(x, y) > at(x, y + 1)) {
          out.push_back({ViolationKind::NotMonotone, {x, y, y + 1},
                         "row " + std::to_string(x) + " decreases"});
          return;
        }
        if (at(y, x) > at(y + 1, x)) {
          out.push_back({ViolationKind::NotMonotone, {y, y + 1, x},
                         "column " + std::to_string(x) + " decreases"});
          return;
        }
      }
  }();
  for (Element x = 0; x < n; ++x) {
    if (at(x, 0) != 0 || at(0, x) != 0) {
      out.push_back({ViolationKind::NotResiduated, {x, 0}, "bottom is not absorbing"});
      break;
    }
  }
  return out;
}

}  // namespace

ValidationResult FiniteChain::validate(int size, Element unit, std::vector<Element> mult,
                                       std::vector<std::string> labels) {
  auto violations = check_table(size, unit, mult);
  if (!labels.empty() && static_cast<int>(labels.size()) != size) {
    violations.push_back({ViolationKind::MalformedTable, {}, "labels must match size"});
  }
  if (!violations.empty()) {
    auto rank = [](ViolationKind k) {
      switch (k) {
        case ViolationKind::MalformedTable: return 0;
        case ViolationKind::UnitOutOfRange: return 1;
        case ViolationKind::NotMonotone: return 2;
        case ViolationKind::NotResiduated: return 3;
        default: return 4;
      }
    };
    std::stable_sort(violations.begin(), violations.end(),
                     [&](const Violation& a, const Violation& b) { return rank(a.kind) < rank(b.kind); });
    return violations;
  }

  auto d = std::make_shared<Data>();
  int const n = size;
  d->size = n;
  d->unit = unit;
  d->mult = std::move(mult);
  d->labels = std::move(labels);
  auto const nn = static_cast<std::size_t>(n * n);
  d->ldiv.assign(nn, 0);
  d->rdiv.assign(nn, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element best_l = 0, best_r = 0;
      for (Element z = n - 1; z >= 0; --z) {
        if (d->mult[static_cast<std::size_t>(x * n + z)] <= y) {
          best_l = z;
          break;
        }
      }
      for (Element z = n - 1; z >= 0; --z) {
        if (d->mult[static_cast<std::size_t>(z * n + x)] <= y) {
          best_r = z;
          break;
        }
      }
      d->ldiv[static_cast<std::size_t>(x * n + y)] = best_l;
      d->rdiv[static_cast<std::size_t>(y * n + x)] = best_r;
    }
  }
  d->ell.resize(static_cast<std::size_t>(n));
  d->r.resize(static_cast<std::size_t>(n));
  for (Element x = 0; x < n; ++x) {
    d->r[static_cast<std::size_t>(x)] = d->ldiv[static_cast<std::size_t>(x * n + unit)];
    d->ell[static_cast<std::size_t>(x)] = d->rdiv[static_cast<std::size_t>(unit * n + x)];
  }

  auto& rep = d->report;
  rep.commutative = rep.idempotent = rep.star_involutive = rep.admissible = true;
  for (Element x = 0; x < n; ++x) {
    if (d->mult[static_cast<std::size_t>(x * n + x)] != x) rep.idempotent = false;
    for (Element y = x + 1; y < n; ++y)
      if (d->mult[static_cast<std::size_t>(x * n + y)] != d->mult[static_cast<std::size_t>(y * n + x)])
        rep.commutative = false;
    auto star = [&](Element a) {
      return std::min(d->ell[static_cast<std::size_t>(a)], d->r[static_cast<std::size_t>(a)]);
    };
    if (star(star(x)) != x) rep.star_involutive = false;
    if (x != unit && (d->r[static_cast<std::size_t>(x)] == unit || d->ell[static_cast<std::size_t>(x)] == unit))
      rep.admissible = false;
  }
  return FiniteChain(std::move(d));
}

FiniteChain FiniteChain::make(int size, Element unit, std::vector<Element> mult,
                              std::vector<std::string> labels) {
  auto result = validate(size, unit, std::move(mult), std::move(labels));
  if (auto* v = std::get_if<std::vector<Violation>>(&result)) {
    auto const& first = v->front();
    std::vector<long long> w(first.witness.begin(), first.witness.end());
    throw Error("InvalidChain", std::string(to_string(first.kind)) + " (" + first.detail + ")", w);
  }
  return std::get<FiniteChain>(std::move(result));
}

FiniteChain FiniteChain::trivial() { return make(1, 0, {0}, {"e"}); }

std::string FiniteChain::label(Element x) const {
  if (data_->labels.empty()) return std::to_string(x);
  return data_->labels[static_cast<std::size_t>(x)];
}

std::optional<Element> FiniteChain::find_label(const std::string& label) const {
  for (Element x = 0; x < size(); ++x)
    if (this->label(x) == label) return x;
  return std::nullopt;
}

FiniteChain FiniteChain::with_labels(std::vector<std::string> labels) const {
  return make(size(), unit(), table(), std::move(labels));
}

bool FiniteChain::operator==(const FiniteChain& other) const noexcept {
  return size() == other.size() && unit() == other.unit() && table() == other.table();
}

Element residual(const FiniteChain& chain, Element x, Element y, Side side) {
  return side == Side::Left ? chain.left_residual(x, y) : chain.right_residual(y, x);
}

Element derived(const FiniteChain& chain, Element x, Derived which) {
  switch (which) {
    case Derived::Ell:
      return chain.ell(x);
    case Derived::R:
      return chain.r(x);
    case Derived::Star:
      return chain.star(x);
  }
  return x;
}

ChainPredicateReport predicates(const FiniteChain& chain) { return chain.predicates(); }

std::vector<Element> subalgebra_generated(const FiniteChain& chain, std::span<const Element> seed) {
  int const n = chain.size();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  std::vector<Element> work;
  auto add = [&](Element x) {
    if (!in[static_cast<std::size_t>(x)]) {
      in[static_cast<std::size_t>(x)] = 1;
      work.push_back(x);
    }
  };
  add(chain.unit());
  for (Element s : seed) add(s);

  if (chain.is_idempotent()) {
    // Closure under x^l and x^r is enough for idempotent chains.
    while (!work.empty()) {
      Element x = work.back();
      work.pop_back();
      add(chain.ell(x));
      add(chain.r(x));
    }
  } else {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Element> cur;
      for (Element x = 0; x < n; ++x)
        if (in[static_cast<std::size_t>(x)]) cur.push_back(x);
      for (Element x : cur)
        for (Element y : cur) {
          for (Element z : {chain.mult(x, y), chain.left_residual(x, y), chain.right_residual(x, y)}) {
            if (!in[static_cast<std::size_t>(z)]) {
              in[static_cast<std::size_t>(z)] = 1;
              grew = true;
            }
          }
        }
    }
  }
  std::vector<Element> out;
  for (Element x = 0; x < n; ++x)
    if (in[static_cast<std::size_t>(x)]) out.push_back(x);
  return out;
}

bool is_subuniverse(const FiniteChain& chain, std::span<const Element> universe) {
  std::vector<char> in(static_cast<std::size_t>(chain.size()), 0);
  for (Element x : universe) in[static_cast<std::size_t>(x)] = 1;
  if (!in[static_cast<std::size_t>(chain.unit())]) return false;
  auto has = [&](Element x) { return in[static_cast<std::size_t>(x)] != 0; };
  for (Element x : universe)
    for (Element y : universe)
      if (!has(chain.mult(x, y)) || !has(chain.left_residual(x, y)) || !has(chain.right_residual(x, y)))
        return false;
  return true;
}

FiniteChain induced_subchain(const FiniteChain& chain, std::span<const Element> universe) {
  int const k = static_cast<int>(universe.size());
  std::vector<int> pos(static_cast<std::size_t>(chain.size()), -1);
  for (int i = 0; i < k; ++i) pos[static_cast<std::size_t>(universe[static_cast<std::size_t>(i)])] = i;
  std::vector<Element> mult(static_cast<std::size_t>(k * k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Element p = chain.mult(universe[static_cast<std::size_t>(i)], universe[static_cast<std::size_t>(j)]);
      if (pos[static_cast<std::size_t>(p)] < 0) throw Error("NotSubuniverse", "product leaves the subset");
      mult[static_cast<std::size_t>(i * k + j)] = pos[static_cast<std::size_t>(p)];
    }
  std::vector<std::string> labels;
  if (!chain.labels().empty())
    for (Element x : universe) labels.push_back(chain.label(x));
  if (pos[static_cast<std::size_t>(chain.unit())] < 0) throw Error("NotSubuniverse", "unit missing");
  return FiniteChain::make(k, pos[static_cast<std::size_t>(chain.unit())], std::move(mult), std::move(labels));
}

std::vector<std::vector<Element>> subuniverses(const FiniteChain& chain) {
  int const n = chain.size();
  std::vector<Element> others;
  for (Element x = 0; x < n; ++x)
    if (x != chain.unit()) others.push_back(x);
  std::vector<std::vector<Element>> out;
  auto const count = std::size_t{1} << others.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<Element> set;
    for (std::size_t i = 0; i < others.size(); ++i)
      if (mask & (std::size_t{1} << i)) set.push_back(others[i]);
    set.push_back(chain.unit());
    std::sort(set.begin(), set.end());
    bool closed = true;
    if (chain.is_idempotent()) {
      std::vector<char> in(static_cast<std::size_t>(n), 0);
      for (Element x : set) in[static_cast<std::size_t>(x)] = 1;
      for (Element x : set)
        if (!in[static_cast<std::size_t>(chain.ell(x))] || !in[static_cast<std::size_t>(chain.r(x))]) {
          closed = false;
          break;
        }
    } else {
      closed = is_subuniverse(chain, set);
    }
    if (closed) out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint8_t> canonical_signature(const FiniteChain& chain) {
  std::vector<std::uint8_t> bytes;
  bytes.reserve(chain.table().size() + 1);
  bytes.push_back(static_cast<std::uint8_t>(chain.unit()));
  for (Element v : chain.table()) bytes.push_back(static_cast<std::uint8_t>(v));
  return bytes;
}

std::string canonical_signature_hex(const FiniteChain& chain) {
  static constexpr std::string_view digits = "0123456789abcdef";
  std::string out;
  for (auto b : canonical_signature(chain)) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

bool iso_equal(const FiniteChain& a, const FiniteChain& b) { return a == b; }

bool signature_less(const FiniteChain& a, const FiniteChain& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.unit() != b.unit()) return a.unit() < b.unit();
  return a.table() < b.table();
}

int configured_max_size() {
  if (const char* env = std::getenv("RESICHAIN_MAX_SIZE")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 64) return static_cast<int>(v);
  }
  return 7;
}

namespace {

// Depth-first search over the free cells of a Cayley table with a fixed unit.
class TableSearch {
 public:
  TableSearch(int n, Element unit, EnumerationFilter filter)
      : n_(n), unit_(unit), filter_(filter), m_(static_cast<std::size_t>(n * n), -1) {}

  void run(std::vector<FiniteChain>& out) {
    for (Element x = 0; x < n_; ++x) {
      set(unit_, x, x);
      set(x, unit_, x);
    }
    for (Element x = 0; x < n_; ++x) {
      if (!consistent_set(0, x, 0) || !consistent_set(x, 0, 0)) return;
    }
    if (filter_.idempotent)
      for (Element x = 0; x < n_; ++x)
        if (!consistent_set(x, x, x)) return;
    for (Element x = 1; x < n_; ++x) {
      if (x == unit_) continue;
      for (Element y = 1; y < n_; ++y) {
        if (y == unit_ || at(x, y) >= 0) continue;
        if (filter_.commutative && y < x) continue;
        cells_.emplace_back(x, y);
      }
    }
    dfs(0, out);
  }

 private:
  Element at(Element x, Element y) const { return m_[static_cast<std::size_t>(x * n_ + y)]; }
  void set(Element x, Element y, Element v) { m_[static_cast<std::size_t>(x * n_ + y)] = v; }

  bool consistent_set(Element x, Element y, Element v) {
    Element cur = at(x, y);
    if (cur >= 0) return cur == v;
    set(x, y, v);
    return true;
  }

  // True unless the triple is fully assigned and non-associative.
  bool triple_ok(Element x, Element y, Element z) const {
    Element xy = at(x, y), yz = at(y, z);
    if (xy < 0 || yz < 0) return true;
    Element l = at(xy, z), r = at(x, yz);
    return l < 0 || r < 0 || l == r;
  }

  bool monotone_ok(Element x, Element y) const {
    Element v = at(x, y);
    if (y > 0 && at(x, y - 1) >= 0 && at(x, y - 1) > v) return false;
    if (y + 1 < n_ && at(x, y + 1) >= 0 && at(x, y + 1) < v) return false;
    if (x > 0 && at(x - 1, y) >= 0 && at(x - 1, y) > v) return false;
    if (x + 1 < n_ && at(x + 1, y) >= 0 && at(x + 1, y) < v) return false;
    return true;
  }

  bool assoc_ok(Element x, Element y) const {
    for (Element t = 0; t < n_; ++t) {
      if (!triple_ok(x, y, t) || !triple_ok(t, x, y)) return false;
      for (Element s = 0; s < n_; ++s) {
        if (at(t, s) == x && !triple_ok(t, s, y)) return false;
        if (at(t, s) == y && !triple_ok(x, t, s)) return false;
      }
    }
    return true;
  }

  void dfs(std::size_t i, std::vector<FiniteChain>& out) {
    if (i == cells_.size()) {
      auto result = FiniteChain::validate(n_, unit_, m_);
      if (auto* c = std::get_if<FiniteChain>(&result)) {
        if (filter_.star_involutive && !c->predicates().star_involutive) return;
        if (filter_.commutative && !c->is_commutative()) return;
        if (filter_.idempotent && !c->is_idempotent()) return;
        out.push_back(*c);
      }
      return;
    }
    auto [x, y] = cells_[i];
    auto try_value = [&](Element v) {
      set(x, y, v);
      if (filter_.commutative) set(y, x, v);
      bool ok = monotone_ok(x, y) && (!filter_.commutative || monotone_ok(y, x)) && assoc_ok(x, y) &&
                (!filter_.commutative || assoc_ok(y, x));
      if (ok) dfs(i + 1, out);
      set(x, y, -1);
      if (filter_.commutative) set(y, x, -1);
    };
    if (filter_.idempotent) {
      try_value(std::min(x, y));
      try_value(std::max(x, y));
    } else {
      for (Element v = 0; v < n_; ++v) try_value(v);
    }
  }

  int n_;
  Element unit_;
  EnumerationFilter filter_;
  std::vector<Element> m_;
  std::vector<std::pair<Element, Element>> cells_;
};

}  // namespace

std::vector<FiniteChain> enumerate_chains(int n, EnumerationFilter filter, std::optional<int> max_size,
                                          int jobs) {
  int const bound = max_size.value_or(configured_max_size());
  if (n < 1) throw Error("InvalidArgument", "size must be at least 1");
  if (n > bound)
    throw Error("SizeTooLarge", "size " + std::to_string(n) + " exceeds bound " + std::to_string(bound),
                {n, bound});
  if (n == 1) return {FiniteChain::trivial()};

  // The unit cannot be the bottom of a nontrivial chain: bottom absorption
  // would contradict the unit law.
  std::vector<std::vector<FiniteChain>> per_unit(static_cast<std::size_t>(n));
  auto work = [&](Element u) { TableSearch(n, u, filter).run(per_unit[static_cast<std::size_t>(u)]); };
  if (jobs <= 1) {
    for (Element u = 1; u < n; ++u) work(u);
  } else {
    std::vector<std::thread> pool;
    std::atomic_int next{1};
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (Element u = next++; u < n; u = next++) work(u);
      });
    for (auto& th : pool) th.join();
  }
  std::vector<FiniteChain> out;
  for (auto& v : per_unit)
    for (auto& c : v) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(), signature_less);
  return out;
}

}  // namespace resichain
