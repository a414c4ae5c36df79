#include "urysohn/random_space.hpp"

#include <algorithm>
#include <optional>

#include "urysohn/errors.hpp"

namespace urysohn {
namespace {

struct Constraint {
  const ExtValue* to_q;    // d(x, q), already chosen
  const ExtValue* q_to_p;  // d(q, p)
};

bool consistent(const ExtMonoid& m, const ExtValue& v, const std::vector<Constraint>& cs) {
  for (const auto& c : cs) {
    if (!m.leq(*c.to_q, m.add(v, *c.q_to_p))) return false;
    if (!m.leq(*c.q_to_p, m.add(v, *c.to_q))) return false;
    if (!m.leq(v, m.add(*c.to_q, *c.q_to_p))) return false;
  }
  return true;
}

// The free-amalgamation value: always consistent, infinity when unconstrained.
ExtValue upper_bound_of(const ExtMonoid& m, const std::vector<Constraint>& cs) {
  ExtValue best = ExtValue::infinity();
  for (const auto& c : cs) best = m.min(best, m.add(*c.to_q, *c.q_to_p));
  return best;
}

}  // namespace

std::vector<ExtValue> sampling_grid(const ExtMonoid& m, const RandomSpaceParams& params) {
  std::vector<ExtValue> grid;
  switch (m.kind()) {
    case MonoidKind::NatStar:
      for (std::int64_t k = 1; k <= params.max_finite; ++k) grid.push_back(ExtValue::finite(k));
      break;
    case MonoidKind::QStar: {
      const std::int64_t den = std::max<std::int64_t>(1, params.denominator);
      grid.push_back(ExtValue::successor(Rational(0)));
      for (std::int64_t k = 1; k <= params.max_finite * den; ++k) {
        grid.push_back(ExtValue::finite(Rational(k, den)));
        grid.push_back(ExtValue::successor(Rational(k, den)));
      }
      break;
    }
    case MonoidKind::TruncatedNat:
    case MonoidKind::FiniteTable:
      for (const auto& v : m.carrier()) {
        if (!v.is_zero() && !v.is_infinity()) grid.push_back(v);
      }
      std::sort(grid.begin(), grid.end(),
                [&](const ExtValue& a, const ExtValue& b) { return m.less(a, b); });
      break;
  }
  return grid;
}

Space random_space(const ExtMonoid& m, std::size_t n, const RandomSpaceParams& params,
                   std::uint64_t seed) {
  if (n == 0) throw DomainError("random_space needs at least one point");
  Rng rng(seed);
  const auto grid = sampling_grid(m, params);

  std::size_t components = 1;
  if (m.has_infinity()) {
    components = rng.between(1, std::max<std::size_t>(1, std::min(params.max_components, n)));
  }
  std::vector<std::size_t> comp(n);
  for (auto& c : comp) c = rng.below(components);

  const ExtValue far = m.has_infinity() ? ExtValue::infinity() : ExtValue{};
  std::vector<ExtValue> table(n * n, far);
  auto at = [&](std::size_t i, std::size_t j) -> ExtValue& { return table[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i) at(i, i) = ExtValue{};

  std::vector<ExtValue> candidates;
  std::vector<Constraint> cs;
  for (std::size_t x = 0; x < n; ++x) {
    cs.clear();
    for (std::size_t p = 0; p < x; ++p) {
      if (comp[p] != comp[x]) continue;
      // cs holds the same-component points q < p already joined to x, in order.
      std::size_t k = 0;
      for (std::size_t q = 0; q < p; ++q) {
        if (comp[q] != comp[x]) continue;
        cs[k++].q_to_p = &at(q, p);
      }
      candidates.clear();
      for (const auto& v : grid) {
        if (consistent(m, v, cs)) candidates.push_back(v);
      }
      ExtValue chosen = candidates.empty() ? upper_bound_of(m, cs)
                                           : candidates[rng.below(candidates.size())];
      at(x, p) = chosen;
      at(p, x) = chosen;
      cs.push_back(Constraint{&at(x, p), nullptr});
    }
  }

  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ids.push_back(params.id_prefix + std::to_string(i));
  return Space(m, std::move(ids), std::move(table));
}

OnePointSpec random_one_point_spec(const Space& sp, std::string id, Rng& rng,
                                   const RandomSpaceParams& params) {
  const auto& m = sp.monoid();
  const auto grid = sampling_grid(m, params);
  const std::size_t n = sp.size();
  OnePointSpec spec{std::move(id), std::vector<ExtValue>(n)};
  std::vector<Constraint> cs;
  std::vector<ExtValue> candidates;
  for (std::size_t p = 0; p < n; ++p) {
    cs.clear();
    for (std::size_t q = 0; q < p; ++q) {
      cs.push_back(Constraint{&spec.distances[q], &sp.dist(q, p)});
    }
    candidates.clear();
    for (const auto& v : grid) {
      if (consistent(m, v, cs)) candidates.push_back(v);
    }
    const bool inf_ok = m.has_infinity() && consistent(m, ExtValue::infinity(), cs);
    if (inf_ok && (candidates.empty() || rng.chance(1, 4))) {
      spec.distances[p] = ExtValue::infinity();
    } else if (!candidates.empty()) {
      spec.distances[p] = candidates[rng.below(candidates.size())];
    } else {
      spec.distances[p] = upper_bound_of(m, cs);
    }
  }
  return spec;
}

}  // namespace urysohn
