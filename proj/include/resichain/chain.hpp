#pragma once

// Finite residuated chains given by a Cayley table over 0..n-1, where the
// numeric order of the indices is the chain order (0 is the bottom).

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace resichain {

using Element = int;

enum class Side { Left, Right };

enum class ViolationKind {
  MalformedTable,
  UnitOutOfRange,
  NotAMonoid,
  NotMonotone,
  NotResiduated,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  // Offending elements, e.g. (x, y, z) for an associativity failure.
  std::vector<Element> witness;
  std::string detail;
};

struct ChainPredicateReport {
  bool commutative = false;
  bool idempotent = false;
  bool star_involutive = false;
  bool admissible = false;

  bool operator==(const ChainPredicateReport&) const = default;
};

class FiniteChain;

// Either a valid chain or the full list of violated invariants.
using ValidationResult = std::variant<FiniteChain, std::vector<Violation>>;

class FiniteChain {
 public:
  // Checks unit, associativity, monotonicity and bottom absorption. On a
  // finite chain the last two are equivalent to the existence of residuals.
  static ValidationResult validate(int size, Element unit, std::vector<Element> mult,
                                   std::vector<std::string> labels = {});

  // Like validate, but throws Error("InvalidChain") listing the first violation.
  static FiniteChain make(int size, Element unit, std::vector<Element> mult,
                          std::vector<std::string> labels = {});

  static FiniteChain trivial();

  int size() const noexcept { return data_->size; }
  Element unit() const noexcept { return data_->unit; }
  Element bottom() const noexcept { return 0; }
  Element top() const noexcept { return data_->size - 1; }

  Element mult(Element x, Element y) const noexcept {
    return data_->mult[static_cast<std::size_t>(x * data_->size + y)];
  }
  // x\y = max{z : xz <= y}
  Element left_residual(Element x, Element y) const noexcept {
    return data_->ldiv[static_cast<std::size_t>(x * data_->size + y)];
  }
  // y/x = max{z : zx <= y}
  Element right_residual(Element y, Element x) const noexcept {
    return data_->rdiv[static_cast<std::size_t>(y * data_->size + x)];
  }

  Element ell(Element x) const noexcept { return data_->ell[static_cast<std::size_t>(x)]; }
  Element r(Element x) const noexcept { return data_->r[static_cast<std::size_t>(x)]; }
  Element star(Element x) const noexcept { return std::min(ell(x), r(x)); }

  const std::vector<Element>& table() const noexcept { return data_->mult; }
  const std::vector<std::string>& labels() const noexcept { return data_->labels; }
  std::string label(Element x) const;
  // Element with the given label, if any.
  std::optional<Element> find_label(const std::string& label) const;
  FiniteChain with_labels(std::vector<std::string> labels) const;

  const ChainPredicateReport& predicates() const noexcept { return data_->report; }
  bool is_commutative() const noexcept { return data_->report.commutative; }
  bool is_idempotent() const noexcept { return data_->report.idempotent; }

  // Tables only; labels do not take part in equality.
  bool operator==(const FiniteChain& other) const noexcept;

 private:
  struct Data {
    int size = 0;
    Element unit = 0;
    std::vector<Element> mult, ldiv, rdiv, ell, r;
    std::vector<std::string> labels;
    ChainPredicateReport report;
  };

  explicit FiniteChain(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

// x\y for Side::Left and y/x for Side::Right.
Element residual(const FiniteChain& chain, Element x, Element y, Side side);

enum class Derived { Ell, R, Star };
Element derived(const FiniteChain& chain, Element x, Derived which);

ChainPredicateReport predicates(const FiniteChain& chain);

// Least subuniverse containing seed and the unit, sorted ascending.
std::vector<Element> subalgebra_generated(const FiniteChain& chain, std::span<const Element> seed);

// True if the sorted set contains the unit and is closed under every operation.
bool is_subuniverse(const FiniteChain& chain, std::span<const Element> universe);

// The chain induced on a subuniverse, with labels carried over. The i-th
// element of the result is universe[i].
FiniteChain induced_subchain(const FiniteChain& chain, std::span<const Element> universe);

// All subuniverses of the chain, each sorted, in lexicographic order.
std::vector<std::vector<Element>> subuniverses(const FiniteChain& chain);

// Unit index followed by the row-major table. Equal iff isomorphic, since the
// only order-isomorphism between chains of equal size is the identity.
std::vector<std::uint8_t> canonical_signature(const FiniteChain& chain);
std::string canonical_signature_hex(const FiniteChain& chain);
bool iso_equal(const FiniteChain& a, const FiniteChain& b);
bool signature_less(const FiniteChain& a, const FiniteChain& b);

struct EnumerationFilter {
  bool commutative = false;
  bool idempotent = false;
  bool star_involutive = false;
};

// Upper bound on enumeration size, read from RESICHAIN_MAX_SIZE (default 7).
int configured_max_size();

// All chains of size n passing the filter, one per isomorphism class, in
// canonical signature order. Throws Error("SizeTooLarge") above max_size.
// jobs > 1 splits the search by unit position across threads.
std::vector<FiniteChain> enumerate_chains(int n, EnumerationFilter filter,
                                          std::optional<int> max_size = std::nullopt,
                                          int jobs = 1);

}  // namespace resichain
