#include "urysohn/space.hpp"

#include <algorithm>

#include "urysohn/errors.hpp"

namespace urysohn {
namespace {

void check_identifier(const std::string& id) {
  if (id.empty()) throw StructuralError("empty point identifier");
  for (char ch : id) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == ',' || ch == '#') {
      throw StructuralError("point identifier '" + id + "' contains a reserved character");
    }
  }
}

void check_unique(const std::vector<std::string>& ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (ids[i] == ids[j]) throw DomainError("duplicate point identifier '" + ids[i] + "'");
    }
  }
}

std::vector<std::size_t> indices(const Space& sp, const SubsetRef& s) {
  std::vector<std::size_t> out;
  out.reserve(s.size());
  for (const auto& id : s) out.push_back(sp.index_of(id));
  return out;
}

ExtValue min_over(const ExtMonoid& m, std::span<const std::size_t> idx,
                  auto&& term) {
  ExtValue best = ExtValue::infinity();
  bool first = true;
  for (std::size_t c : idx) {
    ExtValue v = term(c);
    if (first || m.less(v, best)) best = std::move(v);
    first = false;
  }
  return best;
}

Space join_at(const Space& left, const Space& right, const ExtValue& cross) {
  if (!(left.monoid() == right.monoid())) {
    throw DomainError("spaces are over different monoids");
  }
  std::vector<std::string> ids(left.points().begin(), left.points().end());
  ids.insert(ids.end(), right.points().begin(), right.points().end());
  check_unique(ids);
  const std::size_t n = ids.size();
  const std::size_t nl = left.size();
  std::vector<ExtValue> table(n * n, cross);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i < nl && j < nl) {
        table[i * n + j] = left.dist(i, j);
      } else if (i >= nl && j >= nl) {
        table[i * n + j] = right.dist(i - nl, j - nl);
      }
    }
  }
  return Space(left.monoid(), std::move(ids), std::move(table));
}

}  // namespace

SubsetRef::SubsetRef(std::initializer_list<std::string> ids) : SubsetRef(std::vector(ids)) {}

SubsetRef::SubsetRef(std::vector<std::string> ids) : ids_(std::move(ids)) {
  for (const auto& id : ids_) check_identifier(id);
  check_unique(ids_);
}

SubsetRef SubsetRef::parse(std::string_view list) {
  std::vector<std::string> ids;
  std::string current;
  for (char ch : list) {
    if (ch == ',' || ch == ' ' || ch == '\t') {
      if (!current.empty()) ids.push_back(std::move(current));
      current.clear();
    } else {
      current += ch;
    }
  }
  if (!current.empty()) ids.push_back(std::move(current));
  return SubsetRef(std::move(ids));
}

bool SubsetRef::contains(std::string_view id) const {
  return std::find(ids_.begin(), ids_.end(), id) != ids_.end();
}

std::string SubsetRef::to_string() const {
  std::string out;
  for (const auto& id : ids_) {
    if (!out.empty()) out += ',';
    out += id;
  }
  return out;
}

SubsetRef subset_union(const SubsetRef& a, const SubsetRef& b) {
  std::vector<std::string> ids(a.begin(), a.end());
  for (const auto& id : b) {
    if (!a.contains(id)) ids.push_back(id);
  }
  return SubsetRef(std::move(ids));
}

SubsetRef subset_intersection(const SubsetRef& a, const SubsetRef& b) {
  std::vector<std::string> ids;
  for (const auto& id : a) {
    if (b.contains(id)) ids.push_back(id);
  }
  return SubsetRef(std::move(ids));
}

bool is_subset(const SubsetRef& a, const SubsetRef& b) {
  return std::all_of(a.begin(), a.end(), [&](const std::string& id) { return b.contains(id); });
}

Space::Space(ExtMonoid monoid, std::vector<std::string> points, std::vector<ExtValue> table)
    : monoid_(std::move(monoid)), points_(std::move(points)), table_(std::move(table)) {
  if (points_.empty()) throw StructuralError("a space needs at least one point");
  for (const auto& id : points_) check_identifier(id);
  check_unique(points_);
  if (table_.size() != points_.size() * points_.size()) {
    throw StructuralError("distance table has " + std::to_string(table_.size()) +
                          " entries, expected " +
                          std::to_string(points_.size() * points_.size()));
  }
  for (const auto& v : table_) {
    if (!monoid_.contains(v)) {
      throw DomainError("distance " + v.to_string() + " is outside the carrier of " +
                        monoid_.designator());
    }
  }
}

Space::Space(ExtMonoid monoid, std::string point)
    : Space(std::move(monoid), std::vector<std::string>{std::move(point)},
            std::vector<ExtValue>{ExtValue{}}) {}

std::optional<std::size_t> Space::find(std::string_view id) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i] == id) return i;
  }
  return std::nullopt;
}

std::size_t Space::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw DomainError("unknown point '" + std::string(id) + "'");
}

bool Space::contains(const SubsetRef& s) const {
  return std::all_of(s.begin(), s.end(),
                     [&](const std::string& id) { return find(id).has_value(); });
}

Space Space::restrict(const SubsetRef& s) const {
  const auto idx = indices(*this, s);
  const std::size_t n = idx.size();
  std::vector<ExtValue> table;
  table.reserve(n * n);
  for (std::size_t i : idx) {
    for (std::size_t j : idx) table.push_back(dist(i, j));
  }
  return Space(monoid_, std::vector<std::string>(s.begin(), s.end()), std::move(table));
}

Space Space::relabel(std::vector<std::string> new_ids) const {
  if (new_ids.size() != size()) throw DomainError("relabel: wrong number of identifiers");
  return Space(monoid_, std::move(new_ids), table_);
}

ValidationReport validate_space(const Space& sp) {
  const auto& m = sp.monoid();
  const auto pts = sp.points();
  const std::size_t n = sp.size();
  ValidationReport report;

  CheckResult diag{"zero_diagonal"};
  CheckResult symm{"symmetry"};
  CheckResult pos{"positivity"};
  CheckResult tri{"triangle"};
  for (std::size_t x = 0; x < n; ++x) {
    if (diag.passed && !sp.dist(x, x).is_zero()) {
      diag.passed = false;
      diag.witness = {pts[x]};
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (symm.passed && !(sp.dist(x, y) == sp.dist(y, x))) {
        symm.passed = false;
        symm.witness = {pts[x], pts[y]};
      }
      if (pos.passed && x != y && sp.dist(x, y).is_zero()) {
        pos.passed = false;
        pos.witness = {pts[x], pts[y]};
      }
      if (!tri.passed) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (!m.leq(sp.dist(x, z), m.add(sp.dist(x, y), sp.dist(y, z)))) {
          tri.passed = false;
          tri.witness = {pts[x], pts[y], pts[z]};
          break;
        }
      }
    }
  }
  report.checks = {diag, symm, pos, tri};
  return report;
}

ExtValue dist_to_set(const Space& sp, std::string_view a, const SubsetRef& c) {
  const std::size_t ia = sp.index_of(a);
  const auto idx = indices(sp, c);
  return min_over(sp.monoid(), idx, [&](std::size_t j) { return sp.dist(ia, j); });
}

ExtValue d_max(const Space& sp, std::string_view a, std::string_view b, const SubsetRef& base) {
  const std::size_t ia = sp.index_of(a);
  const std::size_t ib = sp.index_of(b);
  const auto idx = indices(sp, base);
  const auto& m = sp.monoid();
  return min_over(m, idx, [&](std::size_t c) { return m.add(sp.dist(ia, c), sp.dist(c, ib)); });
}

Space free_amalgam(const Space& left, const Space& right, const SubsetRef& common) {
  if (common.empty()) throw PreconditionError("free amalgamation needs a nonempty common part");
  if (!(left.monoid() == right.monoid())) {
    throw DomainError("spaces are over different monoids");
  }
  if (!left.contains(common) || !right.contains(common)) {
    throw DomainError("common part {" + common.to_string() + "} is not contained in both spaces");
  }
  const auto lc = indices(left, common);
  const auto rc = indices(right, common);
  for (std::size_t i = 0; i < common.size(); ++i) {
    for (std::size_t j = 0; j < common.size(); ++j) {
      if (!(left.dist(lc[i], lc[j]) == right.dist(rc[i], rc[j]))) {
        throw DomainError("spaces disagree on d(" + common.ids()[i] + "," + common.ids()[j] +
                          ") over the common part");
      }
    }
  }

  std::vector<std::string> ids(left.points().begin(), left.points().end());
  std::vector<std::size_t> right_extra;
  for (std::size_t j = 0; j < right.size(); ++j) {
    const auto& id = right.points()[j];
    if (common.contains(id)) continue;
    if (left.find(id)) throw DomainError("identifier '" + id + "' occurs outside the common part");
    ids.push_back(id);
    right_extra.push_back(j);
  }

  const auto& m = left.monoid();
  const std::size_t nl = left.size();
  const std::size_t n = ids.size();
  std::vector<ExtValue> table(n * n);
  for (std::size_t i = 0; i < nl; ++i) {
    for (std::size_t j = 0; j < nl; ++j) table[i * n + j] = left.dist(i, j);
  }
  for (std::size_t a = 0; a < right_extra.size(); ++a) {
    for (std::size_t b = 0; b < right_extra.size(); ++b) {
      table[(nl + a) * n + nl + b] = right.dist(right_extra[a], right_extra[b]);
    }
  }
  // Cross distances, including left-only common points against right extras
  // (common points get their right-hand distances, which d_max reproduces).
  for (std::size_t i = 0; i < nl; ++i) {
    const auto ci = right.find(left.points()[i]);
    for (std::size_t b = 0; b < right_extra.size(); ++b) {
      const std::size_t rb = right_extra[b];
      ExtValue v;
      if (ci && common.contains(left.points()[i])) {
        v = right.dist(*ci, rb);
      } else {
        ExtValue best = ExtValue::infinity();
        for (std::size_t k = 0; k < common.size(); ++k) {
          ExtValue term = m.add(left.dist(i, lc[k]), right.dist(rc[k], rb));
          if (k == 0 || m.less(term, best)) best = std::move(term);
        }
        v = best;
      }
      table[i * n + nl + b] = v;
      table[(nl + b) * n + i] = v;
    }
  }
  return Space(m, std::move(ids), std::move(table));
}

Space one_point_extend(const Space& sp, const OnePointSpec& spec) {
  check_identifier(spec.id);
  if (sp.find(spec.id)) throw DomainError("identifier '" + spec.id + "' is already used");
  const std::size_t n = sp.size();
  if (spec.distances.size() != n) {
    throw StructuralError("one-point spec gives " + std::to_string(spec.distances.size()) +
                          " distances for " + std::to_string(n) + " points");
  }
  const auto& m = sp.monoid();
  for (std::size_t p = 0; p < n; ++p) {
    if (!m.contains(spec.distances[p])) {
      throw DomainError("distance " + spec.distances[p].to_string() + " is outside the carrier");
    }
    if (spec.distances[p].is_zero()) {
      throw DomainError("new point '" + spec.id + "' would be at distance 0 from '" +
                        sp.points()[p] + "'");
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const ExtValue& xp = spec.distances[p];
      const ExtValue& xq = spec.distances[q];
      const ExtValue& pq = sp.dist(p, q);
      if (!m.leq(xp, m.add(xq, pq)) || !m.leq(xq, m.add(xp, pq)) || !m.leq(pq, m.add(xp, xq))) {
        throw ExtensionRejected("distances from '" + spec.id + "' violate a triangle with '" +
                                    sp.points()[p] + "' and '" + sp.points()[q] + "'",
                                sp.points()[p], sp.points()[q]);
      }
    }
  }
  std::vector<std::string> ids(sp.points().begin(), sp.points().end());
  ids.push_back(spec.id);
  const std::size_t n1 = n + 1;
  std::vector<ExtValue> table(n1 * n1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n1 + j] = sp.dist(i, j);
    table[i * n1 + n] = spec.distances[i];
    table[n * n1 + i] = spec.distances[i];
  }
  return Space(m, std::move(ids), std::move(table));
}

Space disjoint_union_at_infinity(const Space& left, const Space& right) {
  if (!left.monoid().has_infinity()) {
    throw UnsupportedError("disjoint union at infinity needs a monoid with infinity, got " +
                           left.monoid().designator());
  }
  return join_at(left, right, ExtValue::infinity());
}

Space disjoint_union_at_top(const Space& left, const Space& right) {
  const auto& m = left.monoid();
  if (m.has_infinity()) return disjoint_union_at_infinity(left, right);
  const auto carrier = m.carrier();
  if (!carrier.empty()) {
    const ExtValue* top = &carrier.front();
    for (const auto& v : carrier) {
      if (m.leq(*top, v)) top = &v;
    }
    const bool absorbing = std::all_of(carrier.begin(), carrier.end(), [&](const ExtValue& v) {
      return m.add(*top, v) == *top && m.leq(v, *top);
    });
    if (absorbing) return join_at(left, right, *top);
  }
  throw UnsupportedError("monoid " + m.designator() + " has no absorbing top element");
}

bool isometric_over(const Space& sp, const SubsetRef& tuple, const SubsetRef& image,
                    const SubsetRef& base) {
  if (tuple.size() != image.size()) {
    throw DomainError("tuples have different lengths (" + std::to_string(tuple.size()) + " vs " +
                      std::to_string(image.size()) + ")");
  }
  const auto t = indices(sp, tuple);
  const auto u = indices(sp, image);
  const auto b = indices(sp, base);
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (!(sp.dist(t[i], t[j]) == sp.dist(u[i], u[j]))) return false;
    }
    for (std::size_t c : b) {
      if (!(sp.dist(t[i], c) == sp.dist(u[i], c))) return false;
    }
  }
  return true;
}

}  // namespace urysohn
