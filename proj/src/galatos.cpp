#include "resichain/galatos.hpp"

#include <algorithm>

#include "resichain/error.hpp"

namespace resichain {

ASElement ASElement::parse(const std::string& text) {
  if (text == "e") return e();
  if (text.size() > 2 && text[1] == ':' && (text[0] == 'a' || text[0] == 'b')) {
    auto body = text.substr(2);
    auto digits = body[0] == '-' ? body.substr(1) : body;
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      return text[0] == 'a' ? a(Index(body)) : b(Index(body));
  }
  throw Error("ParseError", "expected e, a:I or b:I, got '" + text + "'");
}

std::string ASElement::to_string() const {
  switch (tag) {
    case Tag::E:
      return "e";
    case Tag::A:
      return "a:" + i.str();
    case Tag::B:
      return "b:" + i.str();
  }
  return {};
}

namespace {

int rank(ASElement::Tag t) {
  switch (t) {
    case ASElement::Tag::B:
      return 0;
    case ASElement::Tag::E:
      return 1;
    case ASElement::Tag::A:
      return 2;
  }
  return 1;
}

}  // namespace

std::strong_ordering as_compare(const ASElement& x, const ASElement& y) {
  if (x.tag != y.tag) return rank(x.tag) <=> rank(y.tag);
  if (x.tag == ASElement::Tag::E || x.i == y.i) return std::strong_ordering::equal;
  bool const lower_index = x.i < y.i;
  if (x.tag == ASElement::Tag::B) return lower_index ? std::strong_ordering::less : std::strong_ordering::greater;
  return lower_index ? std::strong_ordering::greater : std::strong_ordering::less;
}

bool as_less(const ASElement& x, const ASElement& y) { return as_compare(x, y) < 0; }
const ASElement& as_min(const ASElement& x, const ASElement& y) { return as_less(y, x) ? y : x; }
const ASElement& as_max(const ASElement& x, const ASElement& y) { return as_less(x, y) ? y : x; }

ASElement as_mult(const SetSpec& s, const ASElement& x, const ASElement& y) {
  using T = ASElement::Tag;
  if (x.tag == T::E) return y;
  if (y.tag == T::E) return x;
  if (x.tag == y.tag) return x.i < y.i ? x : y;  // a_min and b_min
  if (x.tag == T::A) {
    // x = a_i, y = b_j
    if (x.i < y.i || (x.i == y.i && s.contains(x.i))) return x;
    return y;
  }
  // x = b_j, y = a_i
  if (x.i < y.i || (x.i == y.i && s.contains(x.i))) return x;
  return y;
}

ASElement as_unary(const SetSpec& s, const ASElement& x, Derived which) {
  using T = ASElement::Tag;
  if (x.tag == T::E) return x;
  if (which == Derived::Star) return as_min(as_unary(s, x, Derived::Ell), as_unary(s, x, Derived::R));
  bool const in = s.contains(x.i);
  if (x.tag == T::A) {
    bool const same = which == Derived::Ell ? in : !in;
    return ASElement::b(same ? x.i : x.i - 1);
  }
  bool const same = which == Derived::Ell ? !in : in;
  return ASElement::a(same ? x.i : x.i + 1);
}

ASElement as_residual(const SetSpec& s, const ASElement& x, const ASElement& y, Side side) {
  // x\y = x^r v y if x <= y, else x^r ^ y; symmetrically y/x with x^l.
  auto const u = as_unary(s, x, side == Side::Left ? Derived::R : Derived::Ell);
  return as_less(y, x) ? as_min(u, y) : as_max(u, y);
}

ReachResult generated_reach(const SetSpec& s, const ASElement& start, int depth) {
  if (start.tag == ASElement::Tag::E) throw Error("StartIsUnit", "e generates only the trivial subalgebra");
  std::vector<ASElement> reached{start};
  std::vector<ASElement> frontier{start};
  auto seen = [&](const ASElement& x) { return std::find(reached.begin(), reached.end(), x) != reached.end(); };
  for (int d = 0; d < depth && !frontier.empty(); ++d) {
    std::vector<ASElement> next;
    for (auto const& x : frontier) {
      for (auto which : {Derived::Ell, Derived::R}) {
        auto y = as_unary(s, x, which);
        if (!seen(y)) {
          reached.push_back(y);
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(reached.begin(), reached.end(), as_less);

  ReachResult out;
  out.elements = reached;
  auto summarize = [&](ASElement::Tag tag, std::optional<std::pair<Index, Index>>& range, bool& contiguous) {
    std::vector<Index> idx;
    for (auto const& x : reached)
      if (x.tag == tag) idx.push_back(x.i);
    if (idx.empty()) return;
    std::sort(idx.begin(), idx.end());
    range = std::make_pair(idx.front(), idx.back());
    contiguous = Index(idx.size()) == idx.back() - idx.front() + 1;
  };
  summarize(ASElement::Tag::A, out.a_range, out.a_contiguous);
  summarize(ASElement::Tag::B, out.b_range, out.b_contiguous);
  return out;
}

}  // namespace resichain
