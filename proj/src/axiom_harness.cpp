#include "urysohn/axiom_harness.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "urysohn/errors.hpp"

namespace urysohn {
namespace {

class StandardRelation final : public IndependenceRelation {
 public:
  explicit StandardRelation(RelationId id) : id_(id) {}

  std::string name() const override { return std::string(relation_name(id_)); }

  bool supports(const ExtMonoid& m) const override {
    return id_ == RelationId::Alg || m.has_infinity();
  }

  bool holds(const Space& sp, const SubsetRef& a, const SubsetRef& b,
             const SubsetRef& c) const override {
    return indep(id_, sp, a, b, c);
  }

  SubsetRef local_character_base(const Space& sp, const SubsetRef& a,
                                 const SubsetRef& b) const override {
    return urysohn::local_character_base(id_, a, b, sp);
  }

  ExtensionWitness extend(const Space& sp, const SubsetRef& a, const SubsetRef& b,
                          const SubsetRef& c, const SubsetRef& bhat) const override {
    if (id_ == RelationId::Infty) return extension_witness(Config{sp, a, b, c, {}}, bhat);
    return free_copy_over(sp, a, subset_union(b, c));
  }

 private:
  RelationId id_;
};

SubsetRef pick(Rng& rng, const std::vector<std::string>& pool, std::size_t lo, std::size_t hi) {
  hi = std::min(hi, pool.size());
  lo = std::min(lo, hi);
  std::vector<std::string> shuffled = pool;
  const std::size_t k = rng.between(lo, hi);
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(shuffled[i], shuffled[i + rng.below(shuffled.size() - i)]);
  }
  shuffled.resize(k);
  return SubsetRef(std::move(shuffled));
}

std::vector<std::string> pool_of(const SubsetRef& s) { return {s.begin(), s.end()}; }

// Random subset of s, each element kept with probability 1/2.
SubsetRef sub(Rng& rng, const SubsetRef& s) {
  std::vector<std::string> out;
  for (const auto& id : s) {
    if (rng.chance(1, 2)) out.push_back(id);
  }
  return SubsetRef(std::move(out));
}

std::string show(const SubsetRef& s) { return "{" + s.to_string() + "}"; }

std::string safe_serialize(const Config& cfg) {
  try {
    return serialize_config(cfg);
  } catch (const Error& e) {
    return std::string("# configuration not serializable: ") + e.what() + "\n";
  }
}

class Trial {
 public:
  Trial(const IndependenceRelation& rel, const ExtMonoid& m, std::size_t size,
        const RandomSpaceParams& params, std::uint64_t seed)
      : rel_(rel), params_(params), rng_(seed),
        ambient_(random_space(m, size, params, rng_.next())),
        all_(pool_of(ambient_.all())) {}

  TrialOutcome run(Axiom ax) {
    switch (ax) {
      case Axiom::Invariance: invariance(); break;
      case Axiom::Monotonicity: monotonicity(); break;
      case Axiom::BaseMonotonicity: base_monotonicity(); break;
      case Axiom::Transitivity: transitivity(); break;
      case Axiom::Extension: extension(); break;
      case Axiom::FiniteCharacter: finite_character(); break;
      case Axiom::LocalCharacter: local_character(); break;
      case Axiom::Symmetry: symmetry(); break;
      case Axiom::AntiReflexivity: anti_reflexivity(); break;
    }
    return std::move(out_);
  }

 private:
  bool holds(const SubsetRef& a, const SubsetRef& b, const SubsetRef& c) const {
    return rel_.holds(ambient_, a, b, c);
  }

  void record(const Config& cfg) { out_.config = safe_serialize(cfg); }

  void violate(const Config& cfg, std::string detail) {
    record(cfg);
    out_.violation = std::move(detail);
  }

  SubsetRef sample_a() { return pick(rng_, all_, 1, 3); }
  SubsetRef sample_b() { return pick(rng_, all_, 0, 4); }

  // Half the time C is built to make the relation hold: a local-character
  // base of (A, B) plus a few random extra points.
  SubsetRef sample_c(const SubsetRef& a, const SubsetRef& b) {
    if (rng_.chance(1, 2)) return pick(rng_, all_, 0, 3);
    return subset_union(rel_.local_character_base(ambient_, a, b), pick(rng_, all_, 0, 1));
  }

  // D <= C <= B, biased the same way.
  void sample_chain(const SubsetRef& a, SubsetRef& b, SubsetRef& c, SubsetRef& d) {
    b = pick(rng_, all_, 0, 5);
    if (rng_.chance(1, 2)) {
      c = sub(rng_, b);
      d = sub(rng_, c);
    } else {
      c = subset_union(rel_.local_character_base(ambient_, a, b), sub(rng_, b));
      d = subset_union(rel_.local_character_base(ambient_, a, c), sub(rng_, c));
    }
  }

  void invariance() {
    const SubsetRef a = sample_a(), b = sample_b(), c = sample_c(a, b);
    std::vector<std::size_t> perm(ambient_.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng_.below(i)]);

    std::vector<std::string> order, renamed;
    for (std::size_t i : perm) {
      order.push_back(all_[i]);
      renamed.push_back("r_" + all_[i]);
    }
    const Space copy = ambient_.restrict(SubsetRef(order)).relabel(renamed);
    const Space doubled = disjoint_union_at_top(ambient_, copy);
    auto image = [](const SubsetRef& s) {
      std::vector<std::string> ids;
      for (const auto& id : s) ids.push_back("r_" + id);
      return SubsetRef(std::move(ids));
    };
    const bool original = holds(a, b, c);
    const bool in_union = rel_.holds(doubled, a, b, c);
    const bool moved = rel_.holds(doubled, image(a), image(b), image(c));
    out_.antecedent = original;
    if (original != in_union || original != moved) {
      violate(Config{ambient_, a, b, c, {}},
              "verdict " + std::string(original ? "true" : "false") +
                  " changed under relabeled copy (union: " + (in_union ? "true" : "false") +
                  ", image: " + (moved ? "true" : "false") + ")");
    }
  }

  void monotonicity() {
    const SubsetRef a = sample_a(), b = sample_b(), c = sample_c(a, b);
    if (!holds(a, b, c)) return;
    out_.antecedent = true;
    const SubsetRef a2 = sub(rng_, a), b2 = sub(rng_, b);
    if (!holds(a2, b2, c)) {
      violate(Config{ambient_, a, b, c, {}},
              "fails for A' = " + show(a2) + ", B' = " + show(b2));
    }
  }

  void base_monotonicity() {
    const SubsetRef a = sample_a();
    SubsetRef b, c, d;
    sample_chain(a, b, c, d);
    if (!holds(a, b, d)) return;
    out_.antecedent = true;
    if (!holds(a, b, c)) {
      violate(Config{ambient_, a, b, c, d}, "independent over D but not over C");
    }
  }

  void transitivity() {
    const SubsetRef a = sample_a();
    SubsetRef b, c, d;
    sample_chain(a, b, c, d);
    if (!holds(a, c, d) || !holds(a, b, c)) return;
    out_.antecedent = true;
    if (!holds(a, b, d)) {
      violate(Config{ambient_, a, b, c, d},
              "A indep C over D and A indep B over C, but not A indep B over D");
    }
  }

  void extension() {
    const SubsetRef a = sample_a(), b = sample_b(), c = sample_c(a, b);
    if (!holds(a, b, c)) return;
    out_.antecedent = true;

    Space pre = ambient_;
    const std::size_t extra = rng_.between(1, 3);
    for (std::size_t k = 0; k < extra; ++k) {
      const std::string id = "ext" + std::to_string(k);
      pre = one_point_extend(pre, random_one_point_spec(pre, id, rng_, params_));
    }
    const SubsetRef bhat = subset_union(b, pick(rng_, pool_of(pre.all()), 0, 4));
    const Config cfg{pre, a, b, c, {}};
    if (!rel_.holds(pre, a, b, c)) {
      violate(cfg, "verdict changed after extending the ambient");
      return;
    }
    const ExtensionWitness w = rel_.extend(pre, a, b, c, bhat);
    if (w.A.size() != a.size()) {
      violate(cfg, "witness has wrong length for Bhat = " + show(bhat));
    } else if (!validate_space(w.ambient).ok()) {
      violate(cfg, "witness ambient is not a valid space for Bhat = " + show(bhat));
    } else if (!w.ambient.contains(pre.all()) || !(w.ambient.restrict(pre.all()) == pre)) {
      violate(cfg, "witness ambient does not extend the ambient for Bhat = " + show(bhat));
    } else if (!isometric_over(w.ambient, a, w.A, subset_union(b, c))) {
      violate(cfg, "A' = " + show(w.A) + " is not isometric to A over BC");
    } else if (!rel_.holds(w.ambient, w.A, bhat, c)) {
      violate(cfg, "A' = " + show(w.A) + " is not independent from Bhat = " + show(bhat));
    }
  }

  void finite_character() {
    // Proper parts only: with A itself in the conjunction the check would
    // reduce to monotonicity in A.
    const SubsetRef a = pick(rng_, all_, 2, 4), b = sample_b(), c = sample_c(a, b);
    const bool whole = holds(a, b, c);
    bool every_part = true;
    const auto ids = a.ids();
    const std::size_t full = (std::size_t{1} << ids.size()) - 1;
    for (std::size_t mask = 1; mask < full; ++mask) {
      std::vector<std::string> part;
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (mask & (std::size_t{1} << i)) part.push_back(ids[i]);
      }
      every_part = every_part && holds(SubsetRef(std::move(part)), b, c);
    }
    out_.antecedent = every_part;
    if (whole != every_part) {
      violate(Config{ambient_, a, b, c, {}},
              std::string("verdict ") + (whole ? "true" : "false") +
                  " but conjunction over finite parts is " + (every_part ? "true" : "false"));
    }
  }

  void local_character() {
    const SubsetRef a = sample_a(), b = sample_b();
    const SubsetRef c = rel_.local_character_base(ambient_, a, b);
    out_.antecedent = true;
    out_.kappa = c.size();
    out_.kappa_exceeded = c.size() > a.size();
    const Config cfg{ambient_, a, b, c, {}};
    if (!is_subset(c, b)) {
      violate(cfg, "base " + show(c) + " is not inside B");
    } else if (out_.kappa_exceeded) {
      violate(cfg, "base has " + std::to_string(c.size()) + " points, more than |A| = " +
                       std::to_string(a.size()));
    } else if (!holds(a, b, c)) {
      violate(cfg, "A is not independent from B over the base " + show(c));
    }
  }

  void symmetry() {
    const SubsetRef a = sample_a(), b = sample_b(), c = sample_c(a, b);
    if (!holds(a, b, c)) return;
    out_.antecedent = true;
    if (!holds(b, a, c)) violate(Config{ambient_, a, b, c, {}}, "B is not independent from A");
  }

  void anti_reflexivity() {
    const SubsetRef a{all_[rng_.below(all_.size())]};
    SubsetRef c = pick(rng_, all_, 0, 3);
    if (rng_.chance(1, 3)) c = subset_union(c, a);
    if (!holds(a, a, c)) return;
    out_.antecedent = true;
    if (!c.contains(a.ids()[0])) {
      violate(Config{ambient_, a, a, c, {}},
              "a = " + a.ids()[0] + " independent from itself over C without a in C");
    }
  }

  const IndependenceRelation& rel_;
  const RandomSpaceParams& params_;
  Rng rng_;
  Space ambient_;
  std::vector<std::string> all_;
  TrialOutcome out_;
};

}  // namespace

std::string_view axiom_id(Axiom ax) noexcept {
  static constexpr std::array<std::string_view, 9> ids = {"i",  "ii", "iii", "iv", "v",
                                                           "vi", "vii", "viii", "ix"};
  return ids[static_cast<std::size_t>(ax)];
}

std::string_view axiom_name(Axiom ax) noexcept {
  static constexpr std::array<std::string_view, 9> names = {
      "invariance",       "monotonicity",    "base-monotonicity",
      "transitivity",     "extension",       "finite-character",
      "local-character",  "symmetry",        "anti-reflexivity"};
  return names[static_cast<std::size_t>(ax)];
}

Axiom parse_axiom(std::string_view text) {
  for (Axiom ax : kAllAxioms) {
    if (text == axiom_id(ax) || text == axiom_name(ax)) return ax;
  }
  throw StructuralError("unknown axiom '" + std::string(text) + "'");
}

const IndependenceRelation& standard_relation(RelationId rel) {
  static const StandardRelation alg(RelationId::Alg);
  static const StandardRelation infty(RelationId::Infty);
  return rel == RelationId::Alg ? static_cast<const IndependenceRelation&>(alg) : infty;
}

TrialOutcome run_trial(const IndependenceRelation& rel, Axiom ax, const ExtMonoid& m,
                       std::size_t size, const RandomSpaceParams& params, std::uint64_t seed) {
  return Trial(rel, m, size, params, seed).run(ax);
}

SuiteReport check_axiom(const IndependenceRelation& rel, Axiom ax, const ExtMonoid& m,
                        const SweepOptions& opts) {
  if (!rel.supports(m)) {
    throw UnsupportedError("relation " + rel.name() + " is not defined over " + m.designator());
  }
  if (opts.size < 3) throw PreconditionError("axiom sweeps need spaces of at least 3 points");

  std::vector<TrialOutcome> outcomes(opts.trials);
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t t = first; t < opts.trials; t += stride) {
      outcomes[t] = run_trial(rel, ax, m, opts.size, opts.space, trial_seed(opts.seed, t));
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, opts.threads);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(work, w, threads);
  }

  SuiteReport report;
  report.relation = rel.name();
  report.axiom = ax;
  report.trials = opts.trials;
  report.seed = opts.seed;
  for (std::size_t t = 0; t < outcomes.size(); ++t) {
    auto& o = outcomes[t];
    report.antecedent_held += o.antecedent ? 1 : 0;
    report.kappa_bound_observed = std::max(report.kappa_bound_observed, o.kappa);
    report.kappa_bound_exceeded += o.kappa_exceeded ? 1 : 0;
    if (o.violation) {
      report.violations.push_back(
          Violation{t, trial_seed(opts.seed, t), std::move(o.config), std::move(*o.violation)});
    }
  }
  return report;
}

SuiteReport check_axiom(RelationId rel, Axiom ax, const ExtMonoid& m, std::size_t trials,
                        std::size_t size, std::uint64_t seed) {
  SweepOptions opts;
  opts.trials = trials;
  opts.size = size;
  opts.seed = seed;
  return check_axiom(standard_relation(rel), ax, m, opts);
}

std::string format_report(const SuiteReport& r) {
  std::ostringstream out;
  out << "AXIOM " << r.relation << ' ' << axiom_id(r.axiom) << " trials=" << r.trials
      << " violations=" << r.violations.size() << " seed=" << r.seed << '\n';
  if (r.axiom == Axiom::LocalCharacter) {
    out << "KAPPA " << r.relation << " observed=" << r.kappa_bound_observed
        << " exceeded=" << r.kappa_bound_exceeded << '\n';
  }
  for (const auto& v : r.violations) {
    out << "VIOLATION " << r.relation << ' ' << axiom_id(r.axiom) << " trial=" << v.trial
        << " seed=" << v.seed << '\n'
        << "# " << v.detail << '\n'
        << v.config << "END\n";
  }
  return out.str();
}

}  // namespace urysohn
