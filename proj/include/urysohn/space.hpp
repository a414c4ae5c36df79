#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "urysohn/distance_monoid.hpp"
#include "urysohn/errors.hpp"
#include "urysohn/ext_value.hpp"
#include "urysohn/validation.hpp"

namespace urysohn {

/// Ordered list of point identifiers without duplicates. May be empty.
class SubsetRef {
 public:
  SubsetRef() = default;
  SubsetRef(std::initializer_list<std::string> ids);
  explicit SubsetRef(std::vector<std::string> ids);
  /// Comma- or whitespace-separated identifiers; the empty string is the
  /// empty subset.
  static SubsetRef parse(std::string_view list);

  std::span<const std::string> ids() const noexcept { return ids_; }
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  bool contains(std::string_view id) const;
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }

  /// Comma-joined.
  std::string to_string() const;

  friend bool operator==(const SubsetRef&, const SubsetRef&) = default;

 private:
  std::vector<std::string> ids_;
};

/// Order-preserving union (left first) and intersection (left order).
SubsetRef subset_union(const SubsetRef& a, const SubsetRef& b);
SubsetRef subset_intersection(const SubsetRef& a, const SubsetRef& b);
bool is_subset(const SubsetRef& a, const SubsetRef& b);

/// A finite extended-metric space over an ExtMonoid: points in declaration
/// order and a full distance table.
///
/// Construction checks structure only (dimensions, unique identifiers,
/// carrier membership). The metric axioms are checked by validate_space.
class Space {
 public:
  /// `table` is row-major points.size()^2.
  Space(ExtMonoid monoid, std::vector<std::string> points, std::vector<ExtValue> table);
  /// Single point.
  Space(ExtMonoid monoid, std::string point);

  const ExtMonoid& monoid() const noexcept { return monoid_; }
  std::span<const std::string> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

  std::optional<std::size_t> find(std::string_view id) const;
  /// Throws DomainError for an unknown identifier.
  std::size_t index_of(std::string_view id) const;
  bool contains(const SubsetRef& s) const;
  /// All points, as a subset.
  SubsetRef all() const { return SubsetRef(points_); }

  const ExtValue& dist(std::size_t i, std::size_t j) const { return table_[i * size() + j]; }
  const ExtValue& dist(std::string_view a, std::string_view b) const {
    return dist(index_of(a), index_of(b));
  }

  /// Subspace on `s`, in the order of `s`.
  Space restrict(const SubsetRef& s) const;
  /// Same space with point i renamed to new_ids[i].
  Space relabel(std::vector<std::string> new_ids) const;

  friend bool operator==(const Space&, const Space&) = default;

 private:
  ExtMonoid monoid_;
  std::vector<std::string> points_;
  std::vector<ExtValue> table_;
};

/// Checks zero_diagonal, symmetry, positivity (d(x,y)=0 only for x=y) and
/// triangle. A triangle witness (x, y, z) has d(x,z) > d(x,y)+d(y,z).
ValidationReport validate_space(const Space& sp);

/// inf of d(a,c) over c in C; infinity for empty C.
ExtValue dist_to_set(const Space& sp, std::string_view a, const SubsetRef& c);

/// inf over c in base of d(a,c)+d(c,b); infinity for an empty base.
ExtValue d_max(const Space& sp, std::string_view a, std::string_view b, const SubsetRef& base);

/// Free amalgamation of two spaces over a nonempty common part. The result
/// lists the points of `left` followed by the remaining points of `right`.
/// Throws PreconditionError for empty `common`, DomainError for identifier
/// collisions, a monoid mismatch, or disagreement on `common`.
Space free_amalgam(const Space& left, const Space& right, const SubsetRef& common);

struct OnePointSpec {
  std::string id;
  /// Proposed distance to each existing point, in the space's point order.
  std::vector<ExtValue> distances;
};

/// Thrown by one_point_extend when the proposed distances break a triangle.
class ExtensionRejected : public DomainError {
 public:
  ExtensionRejected(const std::string& what, std::string p, std::string q)
      : DomainError(what), p_(std::move(p)), q_(std::move(q)) {}
  const std::string& first() const noexcept { return p_; }
  const std::string& second() const noexcept { return q_; }

 private:
  std::string p_;
  std::string q_;
};

/// Adds one point. Every triangle through the new point is checked; a
/// violation throws ExtensionRejected naming the existing pair (in
/// declaration order) involved.
Space one_point_extend(const Space& sp, const OnePointSpec& spec);

/// Union with every cross distance infinity. Throws UnsupportedError when the
/// monoid has no infinity.
Space disjoint_union_at_infinity(const Space& left, const Space& right);

/// Like disjoint_union_at_infinity, but for monoids without infinity uses the
/// maximal carrier element if it is absorbing (e.g. n in TruncatedNat(n)).
/// Throws UnsupportedError when neither exists.
Space disjoint_union_at_top(const Space& left, const Space& right);

/// True iff tuple[i] -> image[i], fixing `base` pointwise, preserves all
/// distances within the tuple and between tuple and base.
/// Throws DomainError on a length mismatch.
bool isometric_over(const Space& sp, const SubsetRef& tuple, const SubsetRef& image,
                    const SubsetRef& base);

}  // namespace urysohn
