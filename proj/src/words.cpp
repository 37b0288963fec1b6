#include "resichain/words.hpp"

#include <algorithm>

#include "resichain/error.hpp"

namespace resichain {

namespace {

bool valid_bits(const std::string& bits) {
  return !bits.empty() && std::all_of(bits.begin(), bits.end(), [](char c) { return c == '0' || c == '1'; });
}

std::size_t mod(const Index& i, std::size_t p) {
  Index r = i % p;
  if (r < 0) r += p;
  return static_cast<std::size_t>(r);
}

std::string trim(const std::string& s) {
  auto const first = s.find_first_not_of(" \t\n");
  if (first == std::string::npos) return {};
  auto const last = s.find_last_not_of(" \t\n");
  return s.substr(first, last - first + 1);
}

Index parse_index(const std::string& text) {
  auto const t = trim(text);
  auto digits = t;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits = digits.substr(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw Error("ParseError", "expected an integer, got '" + t + "'");
  return t[0] == '+' ? Index(digits) : Index(t);
}

}  // namespace

FiniteWord::FiniteWord(std::string bits) : bits_(std::move(bits)) {
  if (!valid_bits(bits_)) throw Error("InvalidWord", "finite words are nonempty strings over {0,1}");
}

SetSpec::SetSpec(Periodic p) : value_(std::move(p)) {
  if (!valid_bits(std::get<Periodic>(value_).bits))
    throw Error("InvalidWord", "a period is a nonempty string over {0,1}");
}

SetSpec SetSpec::parse(const std::string& text) {
  auto const t = trim(text);
  if (t.rfind("per:", 0) == 0) {
    auto body = t.substr(4);
    auto at = body.find('@');
    if (at == std::string::npos) return periodic(body);
    return periodic(body.substr(0, at), parse_index(body.substr(at + 1)));
  }
  if (t.rfind("fin:", 0) == 0) {
    auto body = trim(t.substr(4));
    if (body.size() < 2 || body.front() != '{' || body.back() != '}')
      throw Error("ParseError", "finite support must be written as {i,j,...}");
    body = trim(body.substr(1, body.size() - 2));
    std::set<Index> support;
    std::size_t start = 0;
    while (!body.empty()) {
      auto comma = body.find(',', start);
      support.insert(parse_index(body.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return finite(std::move(support));
  }
  throw Error("ParseError", "unknown word syntax '" + t + "'");
}

std::string SetSpec::to_string() const {
  if (is_periodic()) {
    auto const& p = as_periodic();
    return "per:" + p.bits + "@" + p.phase.str();
  }
  std::string out = "fin:{";
  bool first = true;
  for (auto const& i : as_finite().support) {
    if (!first) out += ",";
    out += i.str();
    first = false;
  }
  return out + "}";
}

bool SetSpec::contains(const Index& i) const {
  if (is_periodic()) {
    auto const& p = as_periodic();
    return p.bits[mod(i - p.phase, p.bits.size())] == '1';
  }
  return as_finite().support.count(i) > 0;
}

bool SetSpec::is_zero() const {
  if (is_periodic()) return as_periodic().bits.find('1') == std::string::npos;
  return as_finite().support.empty();
}

std::string SetSpec::factor(const Index& start, std::size_t len) const {
  std::string out(len, '0');
  for (std::size_t k = 0; k < len; ++k)
    if (contains(start + k)) out[k] = '1';
  return out;
}

bool is_subword(const FiniteWord& v, const SetSpec& w) {
  if (w.is_periodic()) {
    auto const& p = w.as_periodic();
    for (std::size_t k = 0; k < p.bits.size(); ++k)
      if (w.factor(p.phase + k, v.size()) == v.bits()) return true;
    return false;
  }
  auto const first_one = v.bits().find('1');
  if (first_one == std::string::npos) return true;  // zero tails contain every 0^k
  // An occurrence at offset k puts v's first 1 on a support element.
  for (auto const& s : w.as_finite().support)
    if (w.factor(s - first_one, v.size()) == v.bits()) return true;
  return false;
}

bool periodic_factors_contained(const Periodic& w1, const Periodic& w2, std::size_t length) {
  SetSpec const left(w1), right(w2);
  for (std::size_t k = 0; k < w1.bits.size(); ++k)
    if (!is_subword(FiniteWord(left.factor(w1.phase + k, length)), right)) return false;
  return true;
}

bool preorder_leq(const SetSpec& w1, const SetSpec& w2) {
  if (w1.is_periodic() && w2.is_periodic()) {
    auto const& p1 = w1.as_periodic();
    auto const& p2 = w2.as_periodic();
    return periodic_factors_contained(p1, p2, p1.bits.size() + p2.bits.size());
  }
  if (w1.is_periodic()) return w1.is_zero();  // a periodic 1 recurs beyond any finite support
  if (w2.is_periodic()) return w1.is_zero() && w2.is_zero();  // w1 has arbitrarily long zero runs
  auto const& s1 = w1.as_finite().support;
  auto const& s2 = w2.as_finite().support;
  if (s1.empty()) return true;
  if (s1.size() != s2.size()) return false;
  Index const shift = *s2.begin() - *s1.begin();
  return std::equal(s1.begin(), s1.end(), s2.begin(), [&](const Index& a, const Index& b) { return a + shift == b; });
}

MinimalityCertificate is_minimal(const SetSpec& w) {
  if (w.is_periodic()) return {true, w.as_periodic().bits.size(), std::nullopt};
  if (w.is_zero()) return {true, 1, std::nullopt};
  return {false, std::nullopt, SetSpec::periodic("0")};
}

}  // namespace resichain
