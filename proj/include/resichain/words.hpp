#pragma once

// Bi-infinite words over {0,1} given as periodic or finite-support sets of
// integers, with the subword relation and the factor preorder.

#include <optional>
#include <set>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace resichain {

using Index = boost::multiprecision::cpp_int;

// Nonempty string of '0' and '1'.
class FiniteWord {
 public:
  explicit FiniteWord(std::string bits);
  const std::string& bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return bits_.size(); }
  char operator[](std::size_t i) const { return bits_[i]; }
  bool operator==(const FiniteWord&) const = default;

 private:
  std::string bits_;
};

// w(i) = bits[(i - phase) mod |bits|].
struct Periodic {
  std::string bits;
  Index phase = 0;
  bool operator==(const Periodic&) const = default;
};

struct FiniteSupport {
  std::set<Index> support;
  bool operator==(const FiniteSupport&) const = default;
};

class SetSpec {
 public:
  SetSpec(Periodic p);
  SetSpec(FiniteSupport f) : value_(std::move(f)) {}

  static SetSpec periodic(std::string bits, Index phase = 0) { return Periodic{std::move(bits), std::move(phase)}; }
  static SetSpec finite(std::set<Index> support) { return FiniteSupport{std::move(support)}; }

  // Syntax: "per:001@0", "per:01" (phase 0), "fin:{-1,3}", "fin:{}".
  static SetSpec parse(const std::string& text);
  std::string to_string() const;

  bool contains(const Index& i) const;
  bool is_periodic() const noexcept { return std::holds_alternative<Periodic>(value_); }
  const Periodic& as_periodic() const { return std::get<Periodic>(value_); }
  const FiniteSupport& as_finite() const { return std::get<FiniteSupport>(value_); }
  // True when the word has no 1 at all.
  bool is_zero() const;
  // Factor of length len starting at position start.
  std::string factor(const Index& start, std::size_t len) const;

  bool operator==(const SetSpec&) const = default;

 private:
  std::variant<Periodic, FiniteSupport> value_;
};

bool is_subword(const FiniteWord& v, const SetSpec& w);

// w1 ⊑ w2: every finite subword of w1 is a subword of w2.
bool preorder_leq(const SetSpec& w1, const SetSpec& w2);
// Same relation for two periodic words, comparing factors of the given length.
bool periodic_factors_contained(const Periodic& w1, const Periodic& w2, std::size_t length);

struct MinimalityCertificate {
  bool minimal = false;
  // Uniform recurrence: every factor of length n appears in every window of
  // length n + recurrence_slack.
  std::optional<std::size_t> recurrence_slack;
  // A word strictly below w when w is not minimal.
  std::optional<SetSpec> strictly_below;
};

MinimalityCertificate is_minimal(const SetSpec& w);

}  // namespace resichain
