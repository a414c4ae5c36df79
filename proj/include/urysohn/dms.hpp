#pragma once

#include <string>
#include <string_view>

#include "urysohn/space.hpp"

namespace urysohn {

// The `.dms` text format:
//
//   monoid <designator>
//   points p1 p2 ... pn
//   d pi pj <value>        # one line per unordered pair, n(n-1)/2 in total
//
// `#` starts a comment; blank lines are ignored. Pair lines may come in any
// order on input; serialization is canonical (declared point order, pairs in
// lexicographic index order) so equal spaces serialize identically.

/// Throws StructuralError for malformed text, missing or repeated pairs.
Space parse_dms(std::string_view text);

/// Throws UnsupportedError if the monoid has no designator.
std::string serialize_dms(const Space& sp);

}  // namespace urysohn
