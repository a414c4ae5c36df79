#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "urysohn/ext_value.hpp"
#include "urysohn/validation.hpp"

namespace urysohn {

enum class MonoidKind { NatStar, TruncatedNat, QStar, FiniteTable };

/// An extended distance monoid: a carrier of ExtValues with a commutative
/// addition, a total addition-invariant order with least element 0, and
/// optionally an absorbing infinity.
///
/// NatStar, TruncatedNat and QStar are described by rules; FiniteTable
/// carries an explicit carrier, sum table and order table. A FiniteTable is
/// only checked for structural soundness on construction: whether it is a
/// distance monoid at all is what validate_monoid answers.
class ExtMonoid {
 public:
  /// N with infinity adjoined, ordinary addition.
  static ExtMonoid nat_star();
  /// {0,...,n} with sum truncated at n. No infinity.
  static ExtMonoid truncated_nat(std::int64_t n);
  /// Non-negative rationals, their immediate successors, and infinity.
  static ExtMonoid q_star();
  /// `add_table` is row-major carrier.size()^2 of carrier indices; `leq` is
  /// row-major carrier.size()^2 with leq[i*n+j] meaning carrier[i] <= carrier[j].
  /// Throws StructuralError on dimension mismatch, out-of-range entries,
  /// duplicate carrier values or a missing Finite(0).
  static ExtMonoid finite_table(std::vector<ExtValue> carrier, std::vector<std::size_t> add_table,
                                std::vector<bool> leq, std::string designator = {});

  MonoidKind kind() const noexcept { return kind_; }
  /// The truncation bound n of TruncatedNat(n); 0 otherwise.
  std::int64_t truncation() const noexcept { return truncation_; }

  ExtValue zero() const { return ExtValue{}; }
  bool has_infinity() const noexcept { return has_infinity_; }
  std::optional<ExtValue> infinity() const;

  /// Canonical CLI designator (`nat-star`, `trunc:3`, `q-star`, `set:0,1,2`);
  /// empty for hand-built tables.
  const std::string& designator() const noexcept { return designator_; }

  bool contains(const ExtValue& v) const;
  bool has_finite_carrier() const noexcept {
    return kind_ == MonoidKind::TruncatedNat || kind_ == MonoidKind::FiniteTable;
  }
  /// Carrier of a finite monoid in declaration order; empty for infinite ones.
  std::span<const ExtValue> carrier() const noexcept { return carrier_; }

  /// Throws DomainError if an argument is outside the carrier.
  ExtValue add(const ExtValue& r, const ExtValue& s) const;
  bool leq(const ExtValue& r, const ExtValue& s) const;
  bool less(const ExtValue& r, const ExtValue& s) const { return !leq(s, r); }
  const ExtValue& min(const ExtValue& r, const ExtValue& s) const { return leq(r, s) ? r : s; }

  /// Deterministic enumeration of carrier values. Finite carriers are listed
  /// exhaustively (bound ignored). NatStar gives 0..bound. QStar gives the
  /// first `bound` values of 0, 0+, then p/q and (p/q)+ by increasing
  /// max(p,q). Infinity, when present, is appended last.
  std::vector<ExtValue> enumerate(std::size_t bound) const;

  friend bool operator==(const ExtMonoid&, const ExtMonoid&) = default;

 private:
  ExtMonoid() = default;
  std::size_t index_of(const ExtValue& v) const;

  MonoidKind kind_ = MonoidKind::NatStar;
  std::int64_t truncation_ = 0;
  bool has_infinity_ = true;
  std::string designator_;
  std::vector<ExtValue> carrier_;
  std::vector<std::size_t> add_table_;
  std::vector<bool> leq_table_;
};

/// Parses a CLI designator. Throws StructuralError, or DomainError for a
/// distance set that is not associative under truncated sum.
ExtMonoid parse_monoid(std::string_view designator);

inline ExtValue ext_add(const ExtMonoid& m, const ExtValue& r, const ExtValue& s) {
  return m.add(r, s);
}
inline bool ext_leq(const ExtMonoid& m, const ExtValue& r, const ExtValue& s) {
  return m.leq(r, s);
}

/// Checks commutativity, associativity, total_order, order_invariance,
/// zero_least, zero_identity, and infinity_absorption when the monoid has an
/// infinity. Exhaustive on finite carriers; otherwise over
/// m.enumerate(sample_bound).
///
/// order_invariance witnesses are (r, s, t) with r <= s but r+t > s+t,
/// searched with t outermost.
ValidationReport validate_monoid(const ExtMonoid& m, std::size_t sample_bound);

/// A countable set of admissible distances, here finite: strictly ascending
/// non-negative rationals starting at exactly 0.
class DistanceSet {
 public:
  /// Throws StructuralError unless strictly ascending and starting at 0.
  explicit DistanceSet(std::vector<Rational> values);
  /// Parses `0,1,2` or `0,1/2,1`.
  static DistanceSet parse(std::string_view list);

  std::span<const Rational> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool contains(const Rational& q) const;
  std::string to_string() const;

 private:
  std::vector<Rational> values_;
};

/// Largest element of s not exceeding u+v. Throws DomainError if u or v is
/// not in s.
Rational truncated_sum(const DistanceSet& s, const Rational& u, const Rational& v);

struct FraisseCheck {
  bool associative = true;
  /// (u, v, w) with (u+v)+w != u+(v+w), truncated sums throughout.
  std::optional<std::array<Rational, 3>> witness;
};

/// Brute force over all triples. Triples are visited by increasing largest
/// entry, then lexicographically, so the witness lives in the shortest
/// prefix of s that already breaks associativity.
FraisseCheck is_fraisse_distance_set(const DistanceSet& s);

/// The FiniteTable monoid (s, truncated sum) with an absorbing infinity
/// adjoined. Throws DomainError if s is not associative.
ExtMonoid extend_monoid(const DistanceSet& s);

/// k-fold sum r + ... + r (left fold); 0 for k = 0.
ExtValue multiple(const ExtMonoid& m, const ExtValue& r, std::size_t k);

/// True iff (n-1)r = nr, i.e. d(x,y) <= (n-1)r is an equivalence relation.
/// Throws DomainError for r = 0 or n < 2.
bool threshold_is_equivalence(const ExtMonoid& m, const ExtValue& r, std::size_t n);

/// First positive r in enumeration order with (n-1)r < nr, searching
/// m.enumerate(search_bound). Throws DomainError for n < 3.
std::optional<ExtValue> sop_scalar_witness(const ExtMonoid& m, std::size_t n,
                                           std::size_t search_bound = 64);

}  // namespace urysohn
