#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "urysohn/independence.hpp"
#include "urysohn/random_space.hpp"

namespace urysohn {

/// The nine axioms of a strict independence relation, numbered (i)-(ix).
enum class Axiom {
  Invariance,
  Monotonicity,
  BaseMonotonicity,
  Transitivity,
  Extension,
  FiniteCharacter,
  LocalCharacter,
  Symmetry,
  AntiReflexivity,
};

inline constexpr std::array<Axiom, 9> kAllAxioms = {
    Axiom::Invariance,      Axiom::Monotonicity,   Axiom::BaseMonotonicity,
    Axiom::Transitivity,    Axiom::Extension,      Axiom::FiniteCharacter,
    Axiom::LocalCharacter,  Axiom::Symmetry,       Axiom::AntiReflexivity,
};

/// Roman numeral id: "i" ... "ix".
std::string_view axiom_id(Axiom ax) noexcept;
std::string_view axiom_name(Axiom ax) noexcept;
/// Accepts the roman id or the hyphenated name (e.g. `base-monotonicity`).
Axiom parse_axiom(std::string_view text);

/// What the harness needs from a relation under test: the verdict, a
/// local-character base and an extension witness.
class IndependenceRelation {
 public:
  virtual ~IndependenceRelation() = default;

  virtual std::string name() const = 0;
  virtual bool supports(const ExtMonoid& m) const = 0;
  virtual bool holds(const Space& sp, const SubsetRef& a, const SubsetRef& b,
                     const SubsetRef& c) const = 0;
  virtual SubsetRef local_character_base(const Space& sp, const SubsetRef& a,
                                         const SubsetRef& b) const = 0;
  /// Called only when holds(sp, a, b, c); bhat contains b.
  virtual ExtensionWitness extend(const Space& sp, const SubsetRef& a, const SubsetRef& b,
                                  const SubsetRef& c, const SubsetRef& bhat) const = 0;
};

/// The shipped `alg` and `infty` relations.
const IndependenceRelation& standard_relation(RelationId rel);

struct Violation {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::string config;
  std::string detail;
};

struct SuiteReport {
  std::string relation;
  Axiom axiom = Axiom::Invariance;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  /// Sorted by trial index.
  std::vector<Violation> violations;
  /// Largest |C| returned by local-character bases.
  std::size_t kappa_bound_observed = 0;
  /// Trials whose local-character base had |C| > |A|.
  std::size_t kappa_bound_exceeded = 0;
  /// Trials in which the axiom's hypothesis held (so the conclusion was
  /// actually tested).
  std::size_t antecedent_held = 0;

  bool passed() const noexcept { return violations.empty(); }
};

struct SweepOptions {
  std::size_t trials = 1000;
  /// Points in each sampled ambient space; at least 3.
  std::size_t size = 12;
  std::uint64_t seed = 0;
  /// Worker threads; results do not depend on this.
  unsigned threads = 1;
  RandomSpaceParams space;
};

struct TrialOutcome {
  bool antecedent = false;
  std::optional<std::string> violation;
  std::string config;
  std::size_t kappa = 0;
  bool kappa_exceeded = false;
};

/// One sampled check, fully determined by `seed`.
TrialOutcome run_trial(const IndependenceRelation& rel, Axiom ax, const ExtMonoid& m,
                       std::size_t size, const RandomSpaceParams& params, std::uint64_t seed);

/// Runs opts.trials trials; trial t uses trial_seed(opts.seed, t).
/// Throws UnsupportedError when the relation does not support the monoid and
/// PreconditionError for size < 3.
SuiteReport check_axiom(const IndependenceRelation& rel, Axiom ax, const ExtMonoid& m,
                        const SweepOptions& opts);
SuiteReport check_axiom(RelationId rel, Axiom ax, const ExtMonoid& m, std::size_t trials,
                        std::size_t size, std::uint64_t seed);

/// `AXIOM <rel> <id> trials=<n> violations=<k> seed=<s>`, then one block per
/// violation; local character adds a `KAPPA` line.
std::string format_report(const SuiteReport& report);

}  // namespace urysohn
