#include "urysohn/distance_monoid.hpp"

#include <algorithm>
#include <numeric>

#include "urysohn/errors.hpp"

namespace urysohn {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool is_integer(const ExtValue& v) {
  return v.is_finite() && v.magnitude().denominator() == 1;
}

// 0, 0+, then for h = 1, 2, ...: every p/q in lowest terms with max(p,q) = h,
// ascending, each immediately followed by its successor.
std::vector<ExtValue> enumerate_qstar(std::size_t bound) {
  std::vector<ExtValue> out;
  auto push = [&](const Rational& q) {
    if (out.size() < bound) out.push_back(ExtValue::finite(q));
    if (out.size() < bound) out.push_back(ExtValue::successor(q));
  };
  push(Rational(0));
  for (std::int64_t h = 1; out.size() < bound; ++h) {
    std::vector<Rational> level;
    for (std::int64_t other = 1; other <= h; ++other) {
      if (std::gcd(other, h) != 1) continue;
      level.emplace_back(other, h);  // other/h <= 1
      if (other != h) level.emplace_back(h, other);
    }
    std::sort(level.begin(), level.end());
    for (const auto& q : level) push(q);
  }
  return out;
}

}  // namespace

ExtMonoid ExtMonoid::nat_star() {
  ExtMonoid m;
  m.kind_ = MonoidKind::NatStar;
  m.has_infinity_ = true;
  m.designator_ = "nat-star";
  return m;
}

ExtMonoid ExtMonoid::truncated_nat(std::int64_t n) {
  if (n < 1) {
    throw DomainError("truncation bound must be at least 1, got " + std::to_string(n));
  }
  ExtMonoid m;
  m.kind_ = MonoidKind::TruncatedNat;
  m.truncation_ = n;
  m.has_infinity_ = false;
  m.designator_ = "trunc:" + std::to_string(n);
  for (std::int64_t i = 0; i <= n; ++i) m.carrier_.push_back(ExtValue::finite(i));
  return m;
}

ExtMonoid ExtMonoid::q_star() {
  ExtMonoid m;
  m.kind_ = MonoidKind::QStar;
  m.has_infinity_ = true;
  m.designator_ = "q-star";
  return m;
}

ExtMonoid ExtMonoid::finite_table(std::vector<ExtValue> carrier,
                                  std::vector<std::size_t> add_table, std::vector<bool> leq,
                                  std::string designator) {
  const std::size_t n = carrier.size();
  if (n == 0) throw StructuralError("finite table: empty carrier");
  if (add_table.size() != n * n) {
    throw StructuralError("finite table: sum table has " + std::to_string(add_table.size()) +
                          " entries, expected " + std::to_string(n * n));
  }
  if (leq.size() != n * n) {
    throw StructuralError("finite table: order table has " + std::to_string(leq.size()) +
                          " entries, expected " + std::to_string(n * n));
  }
  for (std::size_t idx : add_table) {
    if (idx >= n) throw StructuralError("finite table: sum entry out of range");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (carrier[i] == carrier[j]) {
        throw StructuralError("finite table: duplicate carrier value " + carrier[i].to_string());
      }
    }
  }
  if (std::find(carrier.begin(), carrier.end(), ExtValue{}) == carrier.end()) {
    throw StructuralError("finite table: carrier lacks 0");
  }
  ExtMonoid m;
  m.kind_ = MonoidKind::FiniteTable;
  m.has_infinity_ = std::any_of(carrier.begin(), carrier.end(),
                                [](const ExtValue& v) { return v.is_infinity(); });
  m.designator_ = std::move(designator);
  m.carrier_ = std::move(carrier);
  m.add_table_ = std::move(add_table);
  m.leq_table_ = std::move(leq);
  return m;
}

std::optional<ExtValue> ExtMonoid::infinity() const {
  if (!has_infinity_) return std::nullopt;
  return ExtValue::infinity();
}

std::size_t ExtMonoid::index_of(const ExtValue& v) const {
  for (std::size_t i = 0; i < carrier_.size(); ++i) {
    if (carrier_[i] == v) return i;
  }
  throw DomainError("value " + v.to_string() + " is not in the carrier of " +
                    (designator_.empty() ? std::string("the table monoid") : designator_));
}

bool ExtMonoid::contains(const ExtValue& v) const {
  switch (kind_) {
    case MonoidKind::NatStar:
      return v.is_infinity() || is_integer(v);
    case MonoidKind::TruncatedNat:
      return is_integer(v) && v.magnitude() <= Rational(truncation_);
    case MonoidKind::QStar:
      return true;
    case MonoidKind::FiniteTable:
      return std::find(carrier_.begin(), carrier_.end(), v) != carrier_.end();
  }
  return false;
}

ExtValue ExtMonoid::add(const ExtValue& r, const ExtValue& s) const {
  if (kind_ == MonoidKind::FiniteTable) {
    return carrier_[add_table_[index_of(r) * carrier_.size() + index_of(s)]];
  }
  if (!contains(r) || !contains(s)) {
    throw DomainError("value outside carrier of " + designator_ + ": " +
                      (contains(r) ? s : r).to_string());
  }
  if (r.is_infinity() || s.is_infinity()) return ExtValue::infinity();
  const Rational sum = r.magnitude() + s.magnitude();
  switch (kind_) {
    case MonoidKind::TruncatedNat:
      return ExtValue::finite(std::min(sum, Rational(truncation_)));
    case MonoidKind::QStar:
      if (r.is_successor() || s.is_successor()) return ExtValue::successor(sum);
      return ExtValue::finite(sum);
    default:
      return ExtValue::finite(sum);
  }
}

bool ExtMonoid::leq(const ExtValue& r, const ExtValue& s) const {
  if (kind_ == MonoidKind::FiniteTable) {
    return leq_table_[index_of(r) * carrier_.size() + index_of(s)];
  }
  if (!contains(r) || !contains(s)) {
    throw DomainError("value outside carrier of " + designator_ + ": " +
                      (contains(r) ? s : r).to_string());
  }
  return r <= s;
}

std::vector<ExtValue> ExtMonoid::enumerate(std::size_t bound) const {
  std::vector<ExtValue> out;
  switch (kind_) {
    case MonoidKind::TruncatedNat:
    case MonoidKind::FiniteTable:
      return carrier_;
    case MonoidKind::NatStar:
      for (std::size_t i = 0; i <= bound; ++i) {
        out.push_back(ExtValue::finite(static_cast<std::int64_t>(i)));
      }
      break;
    case MonoidKind::QStar:
      out = enumerate_qstar(bound);
      break;
  }
  out.push_back(ExtValue::infinity());
  return out;
}

ExtMonoid parse_monoid(std::string_view designator) {
  designator = trim(designator);
  if (designator == "nat-star") return ExtMonoid::nat_star();
  if (designator == "q-star") return ExtMonoid::q_star();
  if (designator.starts_with("trunc:")) {
    const Rational n = parse_rational(designator.substr(6));
    if (n.denominator() != 1) throw StructuralError("trunc:<n> needs an integer bound");
    return ExtMonoid::truncated_nat(n.numerator());
  }
  if (designator.starts_with("set:")) {
    return extend_monoid(DistanceSet::parse(designator.substr(4)));
  }
  throw StructuralError("unknown monoid designator '" + std::string(designator) +
                        "' (expected nat-star, trunc:<n>, q-star or set:<list>)");
}

ValidationReport validate_monoid(const ExtMonoid& m, std::size_t sample_bound) {
  if (sample_bound < 1) throw PreconditionError("sample bound must be at least 1");
  const std::vector<ExtValue> vals = m.enumerate(sample_bound);
  const ExtValue zero = m.zero();
  ValidationReport report;

  auto fail = [](CheckResult& c, std::initializer_list<ExtValue> w) {
    c.passed = false;
    for (const auto& v : w) c.witness.push_back(v.to_string());
  };

  CheckResult comm{"commutativity"};
  for (const auto& r : vals) {
    for (const auto& s : vals) {
      if (comm.passed && !(m.add(r, s) == m.add(s, r))) fail(comm, {r, s});
    }
  }
  report.checks.push_back(comm);

  CheckResult assoc{"associativity"};
  for (const auto& r : vals) {
    for (const auto& s : vals) {
      const ExtValue rs = m.add(r, s);
      for (const auto& t : vals) {
        if (assoc.passed && !(m.add(rs, t) == m.add(r, m.add(s, t)))) fail(assoc, {r, s, t});
      }
    }
  }
  report.checks.push_back(assoc);

  CheckResult order{"total_order"};
  for (const auto& r : vals) {
    if (order.passed && !m.leq(r, r)) fail(order, {r});
    for (const auto& s : vals) {
      const bool rs = m.leq(r, s);
      const bool sr = m.leq(s, r);
      if (order.passed && !rs && !sr) fail(order, {r, s});
      if (order.passed && rs && sr && !(r == s)) fail(order, {r, s});
      for (const auto& t : vals) {
        if (order.passed && rs && m.leq(s, t) && !m.leq(r, t)) fail(order, {r, s, t});
      }
    }
  }
  report.checks.push_back(order);

  CheckResult invariance{"order_invariance"};
  for (const auto& t : vals) {
    for (const auto& r : vals) {
      for (const auto& s : vals) {
        if (invariance.passed && m.leq(r, s) && !m.leq(m.add(r, t), m.add(s, t))) {
          fail(invariance, {r, s, t});
        }
      }
    }
  }
  report.checks.push_back(invariance);

  CheckResult least{"zero_least"};
  CheckResult identity{"zero_identity"};
  for (const auto& r : vals) {
    if (least.passed && !m.leq(zero, r)) fail(least, {r});
    if (identity.passed && (!(m.add(zero, r) == r) || !(m.add(r, zero) == r))) {
      fail(identity, {r});
    }
  }
  report.checks.push_back(least);
  report.checks.push_back(identity);

  if (m.has_infinity()) {
    CheckResult absorb{"infinity_absorption"};
    for (const auto& r : vals) {
      for (const auto& s : vals) {
        const bool sum_inf = m.add(r, s).is_infinity();
        if (absorb.passed && sum_inf != (r.is_infinity() || s.is_infinity())) {
          fail(absorb, {r, s});
        }
      }
    }
    report.checks.push_back(absorb);
  }
  return report;
}

DistanceSet::DistanceSet(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty() || values_.front() != Rational(0)) {
    throw StructuralError("distance set must start with 0");
  }
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (!(values_[i - 1] < values_[i])) {
      throw StructuralError("distance set must be strictly ascending (at " +
                            format_rational(values_[i]) + ")");
    }
  }
}

DistanceSet DistanceSet::parse(std::string_view list) {
  std::vector<Rational> values;
  while (true) {
    const auto comma = list.find(',');
    const auto item = trim(list.substr(0, comma));
    if (item.empty()) throw StructuralError("empty entry in distance set");
    values.push_back(parse_rational(item));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return DistanceSet(std::move(values));
}

bool DistanceSet::contains(const Rational& q) const {
  return std::binary_search(values_.begin(), values_.end(), q);
}

std::string DistanceSet::to_string() const {
  std::string out;
  for (const auto& q : values_) {
    if (!out.empty()) out += ',';
    out += format_rational(q);
  }
  return out;
}

Rational truncated_sum(const DistanceSet& s, const Rational& u, const Rational& v) {
  if (!s.contains(u) || !s.contains(v)) {
    throw DomainError("truncated sum arguments must lie in the distance set {" + s.to_string() +
                      "}");
  }
  const auto vals = s.values();
  // values[0] = 0 <= u+v, so the predecessor always exists.
  const auto it = std::upper_bound(vals.begin(), vals.end(), u + v);
  return *std::prev(it);
}

FraisseCheck is_fraisse_distance_set(const DistanceSet& s) {
  const auto vals = s.values();
  const std::size_t n = vals.size();
  for (std::size_t top = 0; top < n; ++top) {
    for (std::size_t i = 0; i <= top; ++i) {
      for (std::size_t j = 0; j <= top; ++j) {
        for (std::size_t k = 0; k <= top; ++k) {
          if (i != top && j != top && k != top) continue;
          const Rational& u = vals[i];
          const Rational& v = vals[j];
          const Rational& w = vals[k];
          if (truncated_sum(s, truncated_sum(s, u, v), w) !=
              truncated_sum(s, u, truncated_sum(s, v, w))) {
            return FraisseCheck{false, std::array<Rational, 3>{u, v, w}};
          }
        }
      }
    }
  }
  return FraisseCheck{};
}

ExtMonoid extend_monoid(const DistanceSet& s) {
  const auto check = is_fraisse_distance_set(s);
  if (!check.associative) {
    const auto& w = *check.witness;
    throw DomainError("distance set {" + s.to_string() + "} is not associative at (" +
                      format_rational(w[0]) + "," + format_rational(w[1]) + "," +
                      format_rational(w[2]) + ")");
  }
  const auto vals = s.values();
  const std::size_t n = vals.size() + 1;  // plus infinity
  std::vector<ExtValue> carrier;
  for (const auto& q : vals) carrier.push_back(ExtValue::finite(q));
  carrier.push_back(ExtValue::infinity());

  std::vector<std::size_t> add(n * n, n - 1);
  std::vector<bool> leq(n * n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      leq[i * n + j] = i <= j;
      if (i + 1 < n && j + 1 < n) {
        const Rational sum = truncated_sum(s, vals[i], vals[j]);
        add[i * n + j] = static_cast<std::size_t>(
            std::lower_bound(vals.begin(), vals.end(), sum) - vals.begin());
      }
    }
  }
  return ExtMonoid::finite_table(std::move(carrier), std::move(add), std::move(leq),
                                 "set:" + s.to_string());
}

ExtValue multiple(const ExtMonoid& m, const ExtValue& r, std::size_t k) {
  if (!m.contains(r)) throw DomainError("value " + r.to_string() + " is not in the carrier");
  ExtValue acc = m.zero();
  for (std::size_t i = 0; i < k; ++i) acc = m.add(acc, r);
  return acc;
}

bool threshold_is_equivalence(const ExtMonoid& m, const ExtValue& r, std::size_t n) {
  if (n < 2) throw DomainError("threshold multiple n must be at least 2");
  if (r.is_zero()) throw DomainError("threshold r must be positive");
  return multiple(m, r, n - 1) == multiple(m, r, n);
}

std::optional<ExtValue> sop_scalar_witness(const ExtMonoid& m, std::size_t n,
                                           std::size_t search_bound) {
  if (n < 3) throw DomainError("n must be at least 3");
  for (const auto& r : m.enumerate(search_bound)) {
    if (r.is_zero()) continue;
    if (m.less(multiple(m, r, n - 1), multiple(m, r, n))) return r;
  }
  return std::nullopt;
}

}  // namespace urysohn
