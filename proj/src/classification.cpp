#include "resichain/classification.hpp"

#include <climits>
#include <map>
#include <set>

#include "resichain/constructors.hpp"
#include "resichain/error.hpp"
#include "resichain/morphisms.hpp"

namespace resichain {

int bound_of(Param p) {
  switch (p) {
    case Param::Zero:
      return 0;
    case Param::One:
      return 1;
    case Param::Omega:
      return INT_MAX / 4;
  }
  return 0;
}

const char* to_string(Param p) {
  switch (p) {
    case Param::Zero:
      return "0";
    case Param::One:
      return "1";
    case Param::Omega:
      return "w";
  }
  return "?";
}

Param parse_param(const std::string& text) {
  if (text == "0") return Param::Zero;
  if (text == "1") return Param::One;
  if (text == "w" || text == "ω" || text == "omega") return Param::Omega;
  throw Error("ParseError", "class parameters are 0, 1 or w, got '" + text + "'");
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error("InvalidClass", what);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<Param> parse_params(const std::string& body, std::size_t count, const std::string& text) {
  auto parts = split(body, ',');
  if (parts.size() != count) throw Error("ParseError", "wrong number of class parameters in '" + text + "'");
  std::vector<Param> out;
  for (auto const& p : parts) out.push_back(parse_param(p));
  return out;
}

}  // namespace

CanonicalClass CanonicalClass::e(Param p) { return {Family::E, Param::Zero, p, Param::Zero}; }

CanonicalClass CanonicalClass::fin(Param m, Param p, Param n) {
  require(p >= m, "Fin(m,p,n) needs p >= m");
  return {Family::Fin, m, p, n};
}

CanonicalClass CanonicalClass::inf(Param m, Param p, Param n) {
  require(p >= m, "Inf(m,p,n) needs p >= m");
  return {Family::Inf, m, p, n};
}

CanonicalClass CanonicalClass::fin_union_e(Param m, Param n, Param p) {
  require(p != Param::Zero && p >= m, "Fin(m,0,n) ∪ E(p) needs p in {1,w} and p >= m");
  return {Family::FinUnionE, m, p, n};
}

CanonicalClass CanonicalClass::inf_union_e(Param n, Param p) {
  require(p != Param::Zero, "Inf(0,0,n) ∪ E(p) needs p in {1,w}");
  return {Family::InfUnionE, Param::Zero, p, n};
}

CanonicalClass CanonicalClass::parse(const std::string& text) {
  auto const plus = text.find('+');
  if (plus != std::string::npos) {
    auto const left = text.substr(0, plus), right = text.substr(plus + 1);
    if (right.rfind("e:", 0) != 0) throw Error("ParseError", "expected '+e:P' in '" + text + "'");
    Param const p = parse_param(right.substr(2));
    if (left.rfind("fin:", 0) == 0) {
      auto v = parse_params(left.substr(4), 3, text);
      require(v[1] == Param::Zero, "the Fin part of a union has p = 0");
      return fin_union_e(v[0], v[2], p);
    }
    if (left.rfind("inf:", 0) == 0) {
      auto v = parse_params(left.substr(4), 3, text);
      require(v[0] == Param::Zero && v[1] == Param::Zero, "the Inf part of a union has m = p = 0");
      return inf_union_e(v[2], p);
    }
    throw Error("ParseError", "unknown class '" + text + "'");
  }
  if (text.rfind("e:", 0) == 0) return e(parse_param(text.substr(2)));
  if (text.rfind("fin:", 0) == 0) {
    auto v = parse_params(text.substr(4), 3, text);
    return fin(v[0], v[1], v[2]);
  }
  if (text.rfind("inf:", 0) == 0) {
    auto v = parse_params(text.substr(4), 3, text);
    return inf(v[0], v[1], v[2]);
  }
  throw Error("ParseError", "unknown class '" + text + "'");
}

std::string CanonicalClass::to_string() const {
  auto s = [](Param q) { return std::string(resichain::to_string(q)); };
  switch (family) {
    case Family::E:
      return "e:" + s(p);
    case Family::Fin:
      return "fin:" + s(m) + "," + s(p) + "," + s(n);
    case Family::Inf:
      return "inf:" + s(m) + "," + s(p) + "," + s(n);
    case Family::FinUnionE:
      return "fin:" + s(m) + ",0," + s(n) + "+e:" + s(p);
    case Family::InfUnionE:
      return "inf:0,0," + s(n) + "+e:" + s(p);
  }
  return {};
}

std::string CanonicalClass::display() const {
  auto s = [](Param q) { return q == Param::Omega ? std::string("ω") : std::string(resichain::to_string(q)); };
  switch (family) {
    case Family::E:
      return "E(" + s(p) + ")";
    case Family::Fin:
      return "Fin(" + s(m) + "," + s(p) + "," + s(n) + ")";
    case Family::Inf:
      return "Inf(" + s(m) + "," + s(p) + "," + s(n) + ")";
    case Family::FinUnionE:
      return "Fin(" + s(m) + ",0," + s(n) + ") ∪ E(" + s(p) + ")";
    case Family::InfUnionE:
      return "Inf(0,0," + s(n) + ") ∪ E(" + s(p) + ")";
  }
  return {};
}

namespace {

bool in_e(const DecompositionSignature& sig, Param p) { return sig.pairs.empty() && sig.p <= bound_of(p); }

bool in_fin(const DecompositionSignature& sig, Param m, Param p, Param n) {
  if (sig.pairs.size() > 1 || sig.p > bound_of(p)) return false;
  return sig.pairs.empty() || (sig.pairs[0].first <= bound_of(m) && sig.pairs[0].second <= bound_of(n));
}

bool in_inf(const DecompositionSignature& sig, Param m, Param p, Param n) {
  if (sig.p > bound_of(p)) return false;
  return std::all_of(sig.pairs.begin(), sig.pairs.end(),
                     [&](auto const& mn) { return mn.first <= bound_of(m) && mn.second <= bound_of(n); });
}

}  // namespace

bool CanonicalClass::contains(const DecompositionSignature& sig) const {
  switch (family) {
    case Family::E:
      return in_e(sig, p);
    case Family::Fin:
      return in_fin(sig, m, p, n);
    case Family::Inf:
      return in_inf(sig, m, p, n);
    case Family::FinUnionE:
      return in_fin(sig, m, Param::Zero, n) || in_e(sig, p);
    case Family::InfUnionE:
      return in_inf(sig, Param::Zero, Param::Zero, n) || in_e(sig, p);
  }
  return false;
}

bool CanonicalClass::contains(const FiniteChain& chain) const { return contains(decompose(chain)); }

std::optional<int> CanonicalClass::max_member_size() const {
  auto fin_b = [](Param q) { return q == Param::Omega ? std::optional<int>{} : std::optional<int>{bound_of(q)}; };
  auto const bm = fin_b(m), bp = fin_b(p), bn = fin_b(n);
  switch (family) {
    case Family::E:
      if (!bp) return std::nullopt;
      return *bp + 1;
    case Family::Fin:
      if (!bm || !bp || !bn) return std::nullopt;
      return *bm + *bn + 2 + *bp + 1;
    case Family::Inf:
      return std::nullopt;
    case Family::FinUnionE:
      if (!bm || !bp || !bn) return std::nullopt;
      return std::max(*bm + *bn + 3, *bp + 1);
    case Family::InfUnionE:
      return std::nullopt;
  }
  return std::nullopt;
}

bool CanonicalClass::finite() const { return max_member_size().has_value(); }

std::vector<DecompositionSignature> CanonicalClass::signatures_up_to(int size) const {
  std::vector<DecompositionSignature> out;
  for (int k = 1; k <= size; ++k)
    for (auto& sig : all_signatures(k))
      if (contains(sig)) out.push_back(std::move(sig));
  return out;
}

std::vector<FiniteChain> CanonicalClass::members_up_to(int size) const {
  std::vector<FiniteChain> out;
  for (int k = 1; k <= size; ++k) {
    std::vector<FiniteChain> level;
    for (auto const& sig : all_signatures(k))
      if (contains(sig)) level.push_back(recompose(sig).chain);
    std::sort(level.begin(), level.end(), signature_less);
    for (auto& c : level) out.push_back(std::move(c));
  }
  return out;
}

ClassMembership CanonicalClass::membership() const {
  auto const self = *this;
  auto cache = std::make_shared<std::map<int, std::vector<FiniteChain>>>();
  ClassMembership out;
  out.contains = [self](const FiniteChain& chain) {
    return chain.is_commutative() && chain.is_idempotent() && self.contains(chain);
  };
  out.members_of_size = [self, cache](int k) {
    auto it = cache->find(k);
    if (it != cache->end()) return it->second;
    std::vector<FiniteChain> level;
    for (auto const& sig : all_signatures(k))
      if (self.contains(sig)) level.push_back(recompose(sig).chain);
    std::sort(level.begin(), level.end(), signature_less);
    (*cache)[k] = level;
    return level;
  };
  out.max_member_size = max_member_size();
  return out;
}

std::vector<CanonicalClass> all_sixty() {
  std::vector<CanonicalClass> out;
  std::vector<Param> const all{Param::Zero, Param::One, Param::Omega};
  std::vector<Param> const positive{Param::One, Param::Omega};
  for (auto p : all) out.push_back(CanonicalClass::e(p));
  for (auto m : all)
    for (auto p : all)
      for (auto n : all)
        if (p >= m) out.push_back(CanonicalClass::fin(m, p, n));
  for (auto m : all)
    for (auto p : all)
      for (auto n : all)
        if (p >= m) out.push_back(CanonicalClass::inf(m, p, n));
  for (auto m : all)
    for (auto n : all)
      for (auto p : positive)
        if (p >= m) out.push_back(CanonicalClass::fin_union_e(m, n, p));
  for (auto n : all)
    for (auto p : positive) out.push_back(CanonicalClass::inf_union_e(n, p));
  return out;
}

ChainClass::ChainClass(const std::vector<FiniteChain>& members) {
  for (auto const& c : members)
    if (std::none_of(members_.begin(), members_.end(), [&](auto const& x) { return iso_equal(x, c); }))
      members_.push_back(c);
  std::sort(members_.begin(), members_.end(), signature_less);
}

bool ChainClass::contains(const FiniteChain& chain) const {
  return std::any_of(members_.begin(), members_.end(), [&](auto const& x) { return iso_equal(x, chain); });
}

bool ChainClass::contains(const DecompositionSignature& sig) const { return contains(recompose(sig).chain); }

std::vector<DecompositionSignature> ChainClass::signatures() const {
  std::vector<DecompositionSignature> out;
  for (auto const& c : members_) out.push_back(decompose(c));
  std::sort(out.begin(), out.end());
  return out;
}

int ChainClass::max_size() const {
  int out = 0;
  for (auto const& c : members_) out = std::max(out, c.size());
  return out;
}

ClassMembership ChainClass::membership() const { return membership_from_list(members_); }

bool ChainClass::operator==(const ChainClass& other) const {
  if (members_.size() != other.members_.size()) return false;
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (!iso_equal(members_[i], other.members_[i])) return false;
  return true;
}

namespace {

// Subalgebras and homomorphic images of a chain, one step deep.
std::vector<FiniteChain> hs_neighbours(const FiniteChain& chain) {
  std::vector<FiniteChain> out;
  for (auto const& u : subuniverses(chain)) out.push_back(induced_subchain(chain, u));
  for (auto const& theta : congruences(chain)) out.push_back(quotient(chain, theta).chain);
  return out;
}

}  // namespace

ChainClass hs_closure(const std::vector<FiniteChain>& generators) {
  std::set<std::vector<std::uint8_t>> seen;
  std::vector<FiniteChain> members, work;
  auto add = [&](const FiniteChain& c) {
    if (seen.insert(canonical_signature(c)).second) {
      members.push_back(c);
      work.push_back(c);
    }
  };
  add(FiniteChain::trivial());
  for (auto const& g : generators) add(g);
  while (!work.empty()) {
    auto c = work.back();
    work.pop_back();
    for (auto const& x : hs_neighbours(c)) add(x);
  }
  return ChainClass(members);
}

std::optional<FiniteChain> hs_closure_defect(const ChainClass& k) {
  std::set<std::vector<std::uint8_t>> sigs;
  for (auto const& c : k.members()) sigs.insert(canonical_signature(c));
  for (auto const& c : k.members())
    for (auto const& x : hs_neighbours(c))
      if (!sigs.count(canonical_signature(x))) return c;
  return std::nullopt;
}

namespace {

void require_hs_closed(const ChainClass& k) {
  for (auto const& c : k.members())
    if (!c.is_commutative() || !c.is_idempotent())
      throw Error("NotCommutative", "classes consist of commutative idempotent chains");
  if (auto bad = hs_closure_defect(k))
    throw Error("NotHSClosed", "a subalgebra or quotient of a member is missing: " + decompose(*bad).to_string());
}

DecompositionSignature sig_of(std::vector<std::pair<int, int>> pairs, int p) { return {std::move(pairs), p}; }

}  // namespace

std::optional<CanonicalClass> decision_tree_candidate(const ChainClass& k) {
  auto in = [&](const DecompositionSignature& s) { return k.contains(s); };
  bool const c00 = in(sig_of({{0, 0}}, 0));
  bool const G1 = in(sig_of({}, 1)), G2 = in(sig_of({}, 2));
  using P = Param;
  if (!c00) return CanonicalClass::e(G2 ? P::Omega : G1 ? P::One : P::Zero);

  bool const c10 = in(sig_of({{1, 0}}, 0)), c20 = in(sig_of({{2, 0}}, 0));
  bool const g1 = in(sig_of({{0, 0}}, 1)), g2 = in(sig_of({{0, 0}}, 2));
  bool const cc = in(sig_of({{0, 0}, {0, 0}}, 0));
  P const n = in(sig_of({{0, 2}}, 0)) ? P::Omega : in(sig_of({{0, 1}}, 0)) ? P::One : P::Zero;

  if (!cc) {
    if (c20 && g1) return CanonicalClass::fin(P::Omega, P::Omega, n);
    if (!c20 && c10 && g2) return CanonicalClass::fin(P::One, P::Omega, n);
    if (!c10 && g2) return CanonicalClass::fin(P::Zero, P::Omega, n);
    if (!c20 && !G2 && c10 && g1) return CanonicalClass::fin(P::One, P::One, n);
    if (!c10 && !G2 && g1) return CanonicalClass::fin(P::Zero, P::One, n);
    if (!c10 && !G1) return CanonicalClass::fin(P::Zero, P::Zero, n);
    if (!g1 && c20) return CanonicalClass::fin_union_e(P::Omega, n, P::Omega);
    if (!g1 && !c20 && c10 && G2) return CanonicalClass::fin_union_e(P::One, n, P::Omega);
    if (!g1 && !c10 && G2) return CanonicalClass::fin_union_e(P::Zero, n, P::Omega);
    if (!g1 && !c20 && !G2 && c10) return CanonicalClass::fin_union_e(P::One, n, P::One);
    if (!g1 && !c10 && !G2 && G1) return CanonicalClass::fin_union_e(P::Zero, n, P::One);
    return std::nullopt;
  }
  if (c20) return CanonicalClass::inf(P::Omega, P::Omega, n);
  if (!c20 && c10 && G2) return CanonicalClass::inf(P::One, P::Omega, n);
  if (!c10 && g2) return CanonicalClass::inf(P::Zero, P::Omega, n);
  if (!c20 && !G2 && c10) return CanonicalClass::inf(P::One, P::One, n);
  if (!c10 && !G2 && g1) return CanonicalClass::inf(P::Zero, P::One, n);
  if (!c10 && !G1) return CanonicalClass::inf(P::Zero, P::Zero, n);
  if (!g1 && G2) return CanonicalClass::inf_union_e(n, P::Omega);
  if (!g1 && !G2 && G1) return CanonicalClass::inf_union_e(n, P::One);
  return std::nullopt;
}

std::optional<CanonicalClass> classify(const ChainClass& k) {
  require_hs_closed(k);
  auto const candidate = decision_tree_candidate(k);
  if (!candidate || !candidate->finite()) return std::nullopt;
  auto expected = candidate->signatures_up_to(*candidate->max_member_size());
  auto actual = k.signatures();
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  if (expected != actual) return std::nullopt;
  return candidate;
}

namespace {

// Embedding of recompose(a) into recompose(x) that sends summand i of a to
// summand f[i] of x through the component images comps[i].
ChainMap sum_map(const DecompositionSignature& a, const DecompositionSignature& x, const std::vector<int>& f,
                 const std::vector<std::vector<Element>>& comps) {
  auto const sa = recompose(a), sx = recompose(x);
  std::vector<ChainMap> g;
  for (std::size_t i = 0; i < f.size(); ++i)
    g.push_back({sa.descriptor.summands[i].chain, sx.descriptor.summands[static_cast<std::size_t>(f[i])].chain,
                 comps[i]});
  return lift_nested_embedding(f, sa, sx, g);
}

std::vector<Element> identity_image(int size) {
  std::vector<Element> out(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

// go(q) -> go(qp) with c_j -> c_{ks[j-1]}.
std::vector<Element> go_image(int q, int qp, const std::vector<int>& ks) {
  std::vector<Element> out(static_cast<std::size_t>(q + 1));
  for (int j = 1; j <= q; ++j) out[static_cast<std::size_t>(q - j)] = qp - ks[static_cast<std::size_t>(j - 1)];
  out[static_cast<std::size_t>(q)] = qp;
  return out;
}

// com(r,s) -> com(r2,s2) with b_i -> b_{bs[i]}, a_i -> a_{as[i]}.
std::vector<Element> com_image(int r, int s, int r2, int s2, const std::vector<int>& bs, const std::vector<int>& as) {
  std::vector<Element> out(static_cast<std::size_t>(r + s + 3));
  for (int i = 0; i <= r; ++i) out[static_cast<std::size_t>(r - i)] = r2 - bs[static_cast<std::size_t>(i)];
  out[static_cast<std::size_t>(r + 1)] = r2 + 1;
  for (int i = 0; i <= s; ++i) out[static_cast<std::size_t>(r + 2 + s - i)] = r2 + 2 + s2 - as[static_cast<std::size_t>(i)];
  return out;
}

std::vector<int> iota_vec(int count) {
  std::vector<int> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

Span make_span(const DecompositionSignature& a, const DecompositionSignature& b, const DecompositionSignature& c,
               const ChainMap& ib, const ChainMap& ic) {
  return {recompose(a).chain, recompose(b).chain, recompose(c).chain, ib, ic};
}

// Identity component images for every summand of sig.
std::vector<std::vector<Element>> identity_components(const DecompositionSignature& sig) {
  std::vector<std::vector<Element>> out;
  for (auto [m, n] : sig.pairs) out.push_back(identity_image(m + n + 3));
  out.push_back(identity_image(sig.p + 1));
  return out;
}

}  // namespace

std::vector<RuleViolation> ap_closure_violations(
    const std::function<bool(const DecompositionSignature&)>& contains,
    const std::vector<DecompositionSignature>& members, int bound) {
  std::vector<RuleViolation> out;
  std::set<std::pair<std::string, std::string>> reported;
  auto report = [&](const std::string& rule, const DecompositionSignature& premise,
                    const DecompositionSignature& missing, std::optional<Span> span) {
    if (reported.insert({rule, missing.to_string()}).second)
      out.push_back({rule, premise.to_string(), missing.to_string(), std::move(span)});
  };
  auto present = [&](const DecompositionSignature& s) { return contains(s); };
  auto fits = [&](const DecompositionSignature& s) { return s.size() <= bound; };
  auto guarded = [](auto&& build) -> std::optional<Span> {
    try {
      return build();
    } catch (const Error&) {
      return std::nullopt;
    }
  };

  for (auto const& x : members) {
    int const k = static_cast<int>(x.pairs.size());

    // (i) A + Go_2 in K gives A + Go_n for every n.
    if (x.p >= 2 && present(sig_of(x.pairs, 2))) {
      for (int n = 1; fits(sig_of(x.pairs, n)); ++n) {
        auto target = sig_of(x.pairs, n);
        if (present(target)) continue;
        std::optional<Span> span;
        if (n >= 3 && present(sig_of(x.pairs, 1))) {
          span = guarded([&] {
            auto a = sig_of(x.pairs, 1), b = sig_of(x.pairs, 2), c = sig_of(x.pairs, n - 1);
            auto f = iota_vec(k + 1);
            auto cb = identity_components(a), cc = identity_components(a);
            cb.back() = go_image(1, 2, {2});
            cc.back() = go_image(1, n - 1, {1});
            return make_span(a, b, c, sum_map(a, b, f, cb), sum_map(a, c, f, cc));
          });
        }
        report("i", sig_of(x.pairs, 2), target, span);
        break;
      }
    }

    // (ii) C00 + C00 + B in K gives C00^k + B for every k.
    if (k >= 2 && x.pairs[0] == std::pair{0, 0} && x.pairs[1] == std::pair{0, 0}) {
      std::vector<std::pair<int, int>> rest(x.pairs.begin() + 2, x.pairs.end());
      auto with_k = [&](int copies) {
        std::vector<std::pair<int, int>> pairs(static_cast<std::size_t>(copies), {0, 0});
        pairs.insert(pairs.end(), rest.begin(), rest.end());
        return sig_of(pairs, x.p);
      };
      for (int copies = 1; fits(with_k(copies)); ++copies) {
        auto target = with_k(copies);
        if (present(target)) continue;
        std::optional<Span> span;
        if (copies >= 3 && present(with_k(1))) {
          span = guarded([&] {
            auto a = with_k(1), b = with_k(2), c = with_k(copies - 1);
            int const parts = static_cast<int>(a.pairs.size()) + 1;
            std::vector<int> fb, fc;
            for (int i = 0; i < parts; ++i) {
              fb.push_back(i == 0 ? 0 : i + 1);
              fc.push_back(i + copies - 2);
            }
            auto comps = identity_components(a);
            return make_span(a, b, c, sum_map(a, b, fb, comps), sum_map(a, c, fc, comps));
          });
        }
        report("ii", x, target, span);
        break;
      }
    }

    if (k == 1 && x.p == 0) {
      auto [m, n] = x.pairs[0];
      // (iii) C(2,n) in K gives C(m,n) and Go_m for every m.
      if (m == 2) {
        for (int mm = 1; fits(sig_of({{mm, n}}, 0)); ++mm) {
          auto target = sig_of({{mm, n}}, 0);
          if (present(target)) continue;
          std::optional<Span> span;
          if (mm >= 3 && present(sig_of({{1, n}}, 0))) {
            span = guarded([&] {
              auto a = sig_of({{1, n}}, 0), b = sig_of({{2, n}}, 0), c = sig_of({{mm - 1, n}}, 0);
              auto as = iota_vec(n + 1);
              auto cb = identity_components(a), cc = identity_components(a);
              cb[0] = com_image(1, n, 2, n, {0, 1}, as);
              cc[0] = com_image(1, n, mm - 1, n, {0, mm - 1}, as);
              return make_span(a, b, c, sum_map(a, b, {0, 1}, cb), sum_map(a, c, {0, 1}, cc));
            });
          }
          report("iii", x, target, span);
          break;
        }
        for (int mm = 1; fits(sig_of({}, mm)); ++mm) {
          if (present(sig_of({}, mm))) continue;
          report("iii", x, sig_of({}, mm), std::nullopt);
          break;
        }
      }
      // (iv) C(m,2) in K gives C(m,n) for every n.
      if (n == 2) {
        for (int nn = 1; fits(sig_of({{m, nn}}, 0)); ++nn) {
          auto target = sig_of({{m, nn}}, 0);
          if (present(target)) continue;
          std::optional<Span> span;
          if (nn >= 3 && present(sig_of({{m, 1}}, 0))) {
            span = guarded([&] {
              auto a = sig_of({{m, 1}}, 0), b = sig_of({{m, 2}}, 0), c = sig_of({{m, nn - 1}}, 0);
              auto bs = iota_vec(m + 1);
              auto cb = identity_components(a), cc = identity_components(a);
              cb[0] = com_image(m, 1, m, 2, bs, {0, 1});
              cc[0] = com_image(m, 1, m, nn - 1, bs, {0, nn - 1});
              return make_span(a, b, c, sum_map(a, b, {0, 1}, cb), sum_map(a, c, {0, 1}, cc));
            });
          }
          report("iv", x, target, span);
          break;
        }
      }
      // (v) C(m,0) and C(0,n') in K give C(m,n').
      if (n == 0) {
        for (auto const& y : members) {
          if (y.pairs.size() != 1 || y.p != 0 || y.pairs[0].first != 0) continue;
          int const nn = y.pairs[0].second;
          auto target = sig_of({{m, nn}}, 0);
          if (!fits(target) || present(target)) continue;
          auto span = guarded([&] {
            auto a = sig_of({{0, 0}}, 0);
            auto cb = identity_components(a), cc = identity_components(a);
            cb[0] = com_image(0, 0, m, 0, {0}, {0});
            cc[0] = com_image(0, 0, 0, nn, {0}, {0});
            return make_span(a, x, y, sum_map(a, x, {0, 1}, cb), sum_map(a, y, {0, 1}, cc));
          });
          report("v", x, target, span);
        }
      }
    }

    // (vi) A + C00 + B in K and C(m,n) in K give A + C(m,n) + B.
    for (int i = 0; i < k; ++i) {
      if (x.pairs[static_cast<std::size_t>(i)] != std::pair{0, 0}) continue;
      for (auto const& y : members) {
        if (y.pairs.size() != 1 || y.p != 0) continue;
        auto target = x;
        target.pairs[static_cast<std::size_t>(i)] = y.pairs[0];
        if (!fits(target) || present(target)) continue;
        auto span = guarded([&] {
          auto a = sig_of({{0, 0}}, 0);
          auto cb = identity_components(a), cc = identity_components(a);
          cb[1] = go_image(0, x.p, {});
          cc[0] = com_image(0, 0, y.pairs[0].first, y.pairs[0].second, {0}, {0});
          return make_span(a, x, y, sum_map(a, x, {i, k}, cb), sum_map(a, y, {0, 1}, cc));
        });
        report("vi", x, target, span);
      }
    }

    // (vii) A + Go_1 in K and Go_p in K give A + Go_p.
    if (x.p == 1) {
      for (auto const& y : members) {
        if (!y.pairs.empty() || y.p < 2) continue;
        auto target = sig_of(x.pairs, y.p);
        if (!fits(target) || present(target)) continue;
        auto span = guarded([&] {
          auto a = sig_of({}, 1);
          auto cb = identity_components(a);
          cb[0] = go_image(1, y.p, {1});
          auto cc = identity_components(a);
          return make_span(a, y, x, sum_map(a, y, {0}, cb), sum_map(a, x, {k}, cc));
        });
        report("vii", x, target, span);
      }
    }
  }
  return out;
}

namespace {

// Every span over the members of k with A, B, C in k.
template <typename Visit>
bool for_each_span(const ChainClass& k, Visit&& visit) {
  auto const& ms = k.members();
  for (auto const& a : ms) {
    std::vector<ChainMap> into;
    for (auto const& b : ms)
      for (auto& m : enumerate_embeddings(a, b)) into.push_back(std::move(m));
    for (auto const& ib : into)
      for (auto const& ic : into)
        if (!visit(Span{a, ib.codomain, ic.codomain, ib, ic})) return false;
  }
  return true;
}

}  // namespace

APVerdict ap_verdict(const ChainClass& k, int jobs) {
  require_hs_closed(k);
  APVerdict verdict;
  verdict.cls = classify(k);
  if (verdict.cls) {
    verdict.has_ap = true;
    return verdict;
  }
  auto const members = k.signatures();
  auto const in_k = [&](const DecompositionSignature& s) { return std::binary_search(members.begin(), members.end(), s); };
  verdict.audit = ap_closure_violations(in_k, members, k.max_size() + 1);

  auto const membership = k.membership();
  int const bound = k.max_size();
  auto refutes = [&](const Span& span) {
    auto const r = find_amalgam(span, membership, std::max(bound, span.b.size()), true, jobs);
    return r.outcome == SearchOutcome::Refuted;
  };
  for (auto const& v : verdict.audit) {
    if (v.span && refutes(*v.span)) {
      verdict.witness = v.span;
      verdict.refuted_complete = true;
      return verdict;
    }
  }
  for_each_span(k, [&](const Span& span) {
    if (!refutes(span)) return true;
    verdict.witness = span;
    verdict.refuted_complete = true;
    return false;
  });
  return verdict;
}

}  // namespace resichain
