#include "urysohn/ext_value.hpp"

#include <charconv>

#include "urysohn/errors.hpp"

namespace urysohn {
namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw StructuralError("malformed number '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  const std::int64_t num = parse_integer(text.substr(0, slash), text);
  const std::int64_t den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) {
    throw StructuralError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& q) {
  if (q.denominator() == 1) {
    return std::to_string(q.numerator());
  }
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

ExtValue ExtValue::finite(Rational q) {
  if (q < Rational(0)) {
    throw DomainError("distance values must be non-negative, got " + format_rational(q));
  }
  return ExtValue(Tag::Finite, q);
}

ExtValue ExtValue::successor(Rational q) {
  if (q < Rational(0)) {
    throw DomainError("successor base must be non-negative, got " + format_rational(q));
  }
  return ExtValue(Tag::Successor, q);
}

ExtValue ExtValue::infinity() { return ExtValue(Tag::Infinity, Rational(0)); }

std::string ExtValue::to_string() const {
  switch (tag_) {
    case Tag::Finite:
      return format_rational(magnitude_);
    case Tag::Successor:
      return format_rational(magnitude_) + "+";
    case Tag::Infinity:
      break;
  }
  return "inf";
}

ExtValue ExtValue::parse(std::string_view text) {
  if (text == "inf") {
    return infinity();
  }
  if (!text.empty() && text.back() == '+') {
    return successor(parse_rational(text.substr(0, text.size() - 1)));
  }
  return finite(parse_rational(text));
}

std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b) noexcept {
  const bool a_inf = a.is_infinity();
  const bool b_inf = b.is_infinity();
  if (a_inf || b_inf) {
    return a_inf <=> b_inf;
  }
  if (a.magnitude_ != b.magnitude_) {
    return a.magnitude_ < b.magnitude_ ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
  }
  return a.is_successor() <=> b.is_successor();
}

}  // namespace urysohn
