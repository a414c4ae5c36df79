#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "urysohn/space.hpp"

namespace urysohn {

/// `alg`: A and B meet only inside C (algebraic closure is the identity
/// here). `infty`: additionally, every a in A at infinite distance from C is
/// at infinite distance from B.
enum class RelationId { Alg, Infty };

std::string_view relation_name(RelationId rel) noexcept;
/// Accepts `alg` and `infty`; throws StructuralError otherwise.
RelationId parse_relation(std::string_view name);

/// An ambient space with designated subsets. When D is present the chain
/// D <= C <= B must hold.
struct Config {
  Space ambient;
  SubsetRef A;
  SubsetRef B;
  SubsetRef C;
  std::optional<SubsetRef> D;
};

/// Throws DomainError if a subset leaves the ambient or the D <= C <= B chain
/// is broken.
void validate_config(const Config& cfg);

/// `.dms` of the ambient followed by `A ...`, `B ...`, `C ...` (and `D ...`)
/// lines.
std::string serialize_config(const Config& cfg);

bool indep_a(const Space& sp, const SubsetRef& a, const SubsetRef& b, const SubsetRef& c);
bool indep_a(const Config& cfg);

/// Throws UnsupportedError when the monoid has no infinity.
bool indep_infty(const Space& sp, const SubsetRef& a, const SubsetRef& b, const SubsetRef& c);
bool indep_infty(const Config& cfg);

bool indep(RelationId rel, const Space& sp, const SubsetRef& a, const SubsetRef& b,
           const SubsetRef& c);

struct ExtensionWitness {
  /// The input ambient with the fresh copies appended.
  Space ambient;
  /// The copy A', aligned with the original A.
  SubsetRef A;
};

/// Places a copy of `a` freely over `base`: points of `a` inside `base` are
/// kept, the others get fresh identifiers (id + "'"...), keep their
/// distances to each other and to `base`, and sit at d_max over `base` from
/// everything else. An empty base puts the copies at the top distance.
ExtensionWitness free_copy_over(const Space& sp, const SubsetRef& a, const SubsetRef& base);

/// Extension witness for `infty`: free_copy_over(A, B u C). The copy is
/// isometric to A over B u C and A' is infty-independent from bhat over C.
/// Throws PreconditionError naming the failed conditional when
/// A is not infty-independent from B over C, or unless B <= bhat <= ambient.
ExtensionWitness extension_witness(const Config& cfg, const SubsetRef& bhat);

/// A small base C <= B with A independent from B over C. For `infty`, one
/// nearest point of B per a in A (ties to the smallest point index), so
/// |C| <= |A|; for `alg`, A n B. Returned in ambient order.
SubsetRef local_character_base(RelationId rel, const SubsetRef& a, const SubsetRef& b,
                               const Space& sp);

struct Counterexample {
  Config config;
  bool verdict_alg = false;
  bool verdict_infty = false;
};

/// Two points a, b at distance 1 with A = {a}, B = {b}, C = {}: independent
/// for `alg`, dependent for `infty`. Throws UnsupportedError without infinity.
Counterexample distinguishing_counterexample(const ExtMonoid& m);

}  // namespace urysohn
