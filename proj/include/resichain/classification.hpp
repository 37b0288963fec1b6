#pragma once

// The sixty canonical classes of finite commutative idempotent chains whose
// varieties have the amalgamation property, finite HS-closure, the case
// analysis that identifies an HS-closed class, and the AP verdict.

#include <optional>
#include <string>
#include <vector>

#include "resichain/amalgamation.hpp"
#include "resichain/chain.hpp"
#include "resichain/decomposition.hpp"

namespace resichain {

enum class Param { Zero = 0, One = 1, Omega = 2 };

// 0, 1, or a large sentinel for omega.
int bound_of(Param p);
const char* to_string(Param p);
Param parse_param(const std::string& text);

enum class Family { E, Fin, Inf, FinUnionE, InfUnionE };

struct CanonicalClass {
  Family family = Family::E;
  // Unused parameters are Zero: E uses p; FinUnionE uses m, n, p; InfUnionE uses n, p.
  Param m = Param::Zero, p = Param::Zero, n = Param::Zero;

  static CanonicalClass e(Param p);
  static CanonicalClass fin(Param m, Param p, Param n);
  static CanonicalClass inf(Param m, Param p, Param n);
  static CanonicalClass fin_union_e(Param m, Param n, Param p);
  static CanonicalClass inf_union_e(Param n, Param p);

  // "e:P", "fin:M,P,N", "inf:M,P,N", "fin:M,0,N+e:P", "inf:0,0,N+e:P", with w for omega.
  static CanonicalClass parse(const std::string& text);
  std::string to_string() const;
  // e.g. "Fin(1,0,1) ∪ E(1)"
  std::string display() const;

  bool contains(const DecompositionSignature& sig) const;
  // Throws NotCommutative / NotIdempotent.
  bool contains(const FiniteChain& chain) const;
  bool finite() const;
  // Largest member size of a finite class.
  std::optional<int> max_member_size() const;
  std::vector<DecompositionSignature> signatures_up_to(int size) const;
  std::vector<FiniteChain> members_up_to(int size) const;
  ClassMembership membership() const;

  bool operator==(const CanonicalClass&) const = default;
};

// The 3 + 18 + 18 + 15 + 6 classes.
std::vector<CanonicalClass> all_sixty();

// Finite set of commutative idempotent chains, kept sorted by signature and
// free of duplicates.
class ChainClass {
 public:
  ChainClass() = default;
  explicit ChainClass(const std::vector<FiniteChain>& members);

  const std::vector<FiniteChain>& members() const noexcept { return members_; }
  bool contains(const FiniteChain& chain) const;
  bool contains(const DecompositionSignature& sig) const;
  std::vector<DecompositionSignature> signatures() const;
  int max_size() const;
  ClassMembership membership() const;

  bool operator==(const ChainClass& other) const;

 private:
  std::vector<FiniteChain> members_;
};

ChainClass hs_closure(const std::vector<FiniteChain>& generators);

// First member of K with a subalgebra or quotient outside K, if any.
std::optional<FiniteChain> hs_closure_defect(const ChainClass& k);

// Throws NotHSClosed.
std::optional<CanonicalClass> classify(const ChainClass& k);

// The class that the case analysis selects before equality is verified.
std::optional<CanonicalClass> decision_tree_candidate(const ChainClass& k);

struct RuleViolation {
  // "i" ... "vii"
  std::string rule;
  std::string premise;
  std::string missing;
  // The span from the rule's proof; a one-sided amalgam for it inside the
  // class would produce the missing member.
  std::optional<Span> span;
};

// Instances of the seven closure rules whose conclusion has size <= bound
// but lies outside the class. contains decides membership and members lists
// the class members of size <= bound.
std::vector<RuleViolation> ap_closure_violations(
    const std::function<bool(const DecompositionSignature&)>& contains,
    const std::vector<DecompositionSignature>& members, int bound);

struct APVerdict {
  bool has_ap = false;
  std::optional<CanonicalClass> cls;
  std::vector<RuleViolation> audit;
  std::optional<Span> witness;
  bool refuted_complete = false;
};

// Throws NotHSClosed.
APVerdict ap_verdict(const ChainClass& k, int jobs = 1);

}  // namespace resichain
