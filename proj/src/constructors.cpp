#include "resichain/constructors.hpp"

#include <algorithm>
#include <charconv>

#include "resichain/error.hpp"

namespace resichain {

FiniteChain go(int n) {
  if (n < 0) throw Error("InvalidArgument", "go(n) needs n >= 0");
  int const size = n + 1;
  std::vector<Element> mult(static_cast<std::size_t>(size * size));
  for (Element x = 0; x < size; ++x)
    for (Element y = 0; y < size; ++y) mult[static_cast<std::size_t>(x * size + y)] = std::min(x, y);
  std::vector<std::string> labels;
  for (int i = n; i >= 1; --i) labels.push_back("c" + std::to_string(i));
  labels.emplace_back("e");
  return FiniteChain::make(size, n, std::move(mult), std::move(labels));
}

FiniteChain com(int m, int n) {
  if (m < 0 || n < 0) throw Error("InvalidArgument", "com(m, n) needs m, n >= 0");
  int const size = m + n + 3;
  Element const e = m + 1;
  std::vector<Element> mult(static_cast<std::size_t>(size * size));
  for (Element x = 0; x < size; ++x) {
    for (Element y = 0; y < size; ++y) {
      Element v;
      if (x == e) {
        v = y;
      } else if (y == e) {
        v = x;
      } else if (x < e && y < e) {
        v = std::min(x, y);  // b_k b_l = b_max(k,l)
      } else if (x > e && y > e) {
        v = std::max(x, y);  // a_i a_j = a_min(i,j)
      } else {
        v = std::min(x, y);  // a_i b_k = b_k
      }
      mult[static_cast<std::size_t>(x * size + y)] = v;
    }
  }
  std::vector<std::string> labels;
  for (int i = m; i >= 0; --i) labels.push_back("b" + std::to_string(i));
  labels.emplace_back("e");
  for (int i = n; i >= 0; --i) labels.push_back("a" + std::to_string(i));
  return FiniteChain::make(size, e, std::move(mult), std::move(labels));
}

NestedSum nested_sum(const std::vector<Summand>& parts) {
  if (parts.empty()) {
    return {FiniteChain::trivial(), {}};
  }
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    if (!parts[i].chain.predicates().admissible)
      throw Error("NotAdmissible", "summand " + std::to_string(i) + " is not admissible",
                  {static_cast<long long>(i)});
  }

  int const k = static_cast<int>(parts.size());
  NestedSumDescriptor desc;
  desc.summands = parts;
  desc.placement.resize(parts.size());

  // Lower halves outermost first, then e, then upper halves innermost first.
  int next = 0;
  for (int i = 0; i < k; ++i) {
    auto const& c = parts[static_cast<std::size_t>(i)].chain;
    desc.placement[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(c.size()), -1);
    for (Element x = 0; x < c.unit(); ++x) desc.placement[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)] = next++;
  }
  Element const unit = next++;
  for (int i = k - 1; i >= 0; --i) {
    auto const& c = parts[static_cast<std::size_t>(i)].chain;
    desc.placement[static_cast<std::size_t>(i)][static_cast<std::size_t>(c.unit())] = unit;
    for (Element x = c.unit() + 1; x < c.size(); ++x)
      desc.placement[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)] = next++;
  }
  int const size = next;

  // owner[z] = (summand, local element) for every non-unit z
  std::vector<std::pair<int, Element>> owner(static_cast<std::size_t>(size), {-1, -1});
  for (int i = 0; i < k; ++i) {
    auto const& c = parts[static_cast<std::size_t>(i)].chain;
    for (Element x = 0; x < c.size(); ++x)
      if (x != c.unit())
        owner[static_cast<std::size_t>(desc.placement[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)])] = {i, x};
  }

  std::vector<Element> mult(static_cast<std::size_t>(size * size));
  for (Element x = 0; x < size; ++x) {
    for (Element y = 0; y < size; ++y) {
      Element v;
      if (x == unit) {
        v = y;
      } else if (y == unit) {
        v = x;
      } else {
        auto [i, lx] = owner[static_cast<std::size_t>(x)];
        auto [j, ly] = owner[static_cast<std::size_t>(y)];
        if (i == j) {
          auto const& c = parts[static_cast<std::size_t>(i)].chain;
          v = desc.placement[static_cast<std::size_t>(i)][static_cast<std::size_t>(c.mult(lx, ly))];
        } else {
          v = i < j ? x : y;
        }
      }
      mult[static_cast<std::size_t>(x * size + y)] = v;
    }
  }

  std::vector<std::string> labels(static_cast<std::size_t>(size));
  labels[static_cast<std::size_t>(unit)] = "e";
  // trivial parts add no elements and do not count toward the suffix
  auto const visible = std::count_if(parts.begin(), parts.end(), [](auto const& p) { return p.chain.size() > 1; });
  for (int i = 0; i < k; ++i) {
    auto const& c = parts[static_cast<std::size_t>(i)].chain;
    for (Element x = 0; x < c.size(); ++x) {
      if (x == c.unit()) continue;
      auto name = c.label(x);
      if (visible > 1) name += "^" + std::to_string(i + 1);
      labels[static_cast<std::size_t>(desc.placement[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)])] = name;
    }
  }
  return {FiniteChain::make(size, unit, std::move(mult), std::move(labels)), std::move(desc)};
}

NestedSum nested_sum(const std::vector<FiniteChain>& parts) {
  std::vector<Summand> summands;
  for (std::size_t i = 0; i < parts.size(); ++i) summands.push_back({std::to_string(i), parts[i]});
  return nested_sum(summands);
}

namespace {

std::string trim(std::string s) {
  auto const first = s.find_first_not_of(" \t\n");
  if (first == std::string::npos) return {};
  auto const last = s.find_last_not_of(" \t\n");
  return s.substr(first, last - first + 1);
}

int parse_nat(const std::string& s, const std::string& context) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 0)
    throw Error("ParseError", "expected a natural number in '" + context + "'");
  return v;
}

FiniteChain parse_atom(const std::string& token) {
  auto const t = trim(token);
  if (t.rfind("go:", 0) == 0) return go(parse_nat(t.substr(3), t));
  if (t.rfind("com:", 0) == 0) {
    auto rest = t.substr(4);
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw Error("ParseError", "com needs two parameters: '" + t + "'");
    return com(parse_nat(trim(rest.substr(0, comma)), t), parse_nat(trim(rest.substr(comma + 1)), t));
  }
  throw Error("ParseError", "unknown constructor '" + t + "'");
}

}  // namespace

FiniteChain make_from_spec(const std::string& spec) {
  auto s = trim(spec);
  if (s.rfind("sum:", 0) == 0) s = s.substr(4);
  std::vector<FiniteChain> parts;
  std::size_t start = 0;
  while (true) {
    auto plus = s.find('+', start);
    parts.push_back(parse_atom(s.substr(start, plus == std::string::npos ? std::string::npos : plus - start)));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  if (parts.size() == 1) return parts.front();
  return nested_sum(parts).chain;
}

}  // namespace resichain
