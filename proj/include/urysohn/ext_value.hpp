#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace urysohn {

using Rational = boost::rational<std::int64_t>;

/// Parses `p/q` or an integer. Throws StructuralError on malformed text.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

/// A distance value: a finite non-negative rational q, its immediate
/// successor q+, or infinity.
///
/// Ordering is intrinsic: Finite(q) < Successor(q) < Finite(q') for q' > q,
/// and everything is below Infinity. Monoids with an explicit order table
/// (FiniteTable) override this through ExtMonoid::leq.
class ExtValue {
 public:
  enum class Tag : std::uint8_t { Finite, Successor, Infinity };

  ExtValue() = default;  // Finite(0)

  static ExtValue finite(Rational q);
  static ExtValue finite(std::int64_t n) { return finite(Rational(n)); }
  static ExtValue successor(Rational q);
  static ExtValue infinity();

  Tag tag() const noexcept { return tag_; }
  bool is_finite() const noexcept { return tag_ == Tag::Finite; }
  bool is_successor() const noexcept { return tag_ == Tag::Successor; }
  bool is_infinity() const noexcept { return tag_ == Tag::Infinity; }
  bool is_zero() const noexcept { return tag_ == Tag::Finite && magnitude_ == Rational(0); }

  /// Zero for Infinity.
  const Rational& magnitude() const noexcept { return magnitude_; }

  /// Integer, `p/q`, a trailing `+` for successors, or `inf`.
  std::string to_string() const;
  static ExtValue parse(std::string_view text);

  friend bool operator==(const ExtValue& a, const ExtValue& b) noexcept {
    return a.tag_ == b.tag_ && a.magnitude_ == b.magnitude_;
  }
  friend std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b) noexcept;

 private:
  ExtValue(Tag tag, Rational q) : tag_(tag), magnitude_(q) {}

  Tag tag_ = Tag::Finite;
  Rational magnitude_{0};
};

}  // namespace urysohn
