#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "urysohn/random.hpp"
#include "urysohn/space.hpp"

namespace urysohn {

struct RandomSpaceParams {
  /// Component count is uniform in [1, max_components] (forced to 1 for
  /// monoids without infinity).
  std::size_t max_components = 3;
  /// Largest finite distance drawn for infinite carriers.
  std::int64_t max_finite = 8;
  /// QStar grid spacing is 1/denominator.
  std::int64_t denominator = 2;
  /// Points are named prefix + index.
  std::string id_prefix = "p";
};

/// Positive finite values the sampler draws from, ascending in the monoid
/// order. Finite carriers use every positive non-infinite element.
std::vector<ExtValue> sampling_grid(const ExtMonoid& m, const RandomSpaceParams& params);

/// A valid space on n points, deterministic in seed. Points are split into
/// components at mutual distance infinity; within a component each new point
/// x takes, against each placed p in turn, a value uniform over the grid
/// values in [L, U] consistent with the distances from x already chosen.
/// Throws DomainError for n = 0.
Space random_space(const ExtMonoid& m, std::size_t n, const RandomSpaceParams& params,
                   std::uint64_t seed);

/// Distances for a new point placed against every point of sp, each drawn
/// uniformly among the values consistent with the choices so far.
/// Infinity is allowed (when the monoid has it) with probability about 1/4
/// whenever it is consistent, so the point may start a new component.
OnePointSpec random_one_point_spec(const Space& sp, std::string id, Rng& rng,
                                   const RandomSpaceParams& params);

}  // namespace urysohn
