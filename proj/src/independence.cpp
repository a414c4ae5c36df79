#include "urysohn/independence.hpp"

#include <algorithm>

#include "urysohn/dms.hpp"
#include "urysohn/errors.hpp"

namespace urysohn {
namespace {

void require_infinity(const ExtMonoid& m) {
  if (!m.has_infinity()) {
    throw UnsupportedError("relation infty needs a monoid with infinity, got " + m.designator());
  }
}

void require_within(const Space& sp, const SubsetRef& s, const char* name) {
  if (!sp.contains(s)) {
    throw DomainError(std::string("subset ") + name + " = {" + s.to_string() +
                      "} is not contained in the ambient space");
  }
}

}  // namespace

std::string_view relation_name(RelationId rel) noexcept {
  return rel == RelationId::Alg ? "alg" : "infty";
}

RelationId parse_relation(std::string_view name) {
  if (name == "alg") return RelationId::Alg;
  if (name == "infty") return RelationId::Infty;
  throw StructuralError("unknown relation '" + std::string(name) + "' (expected alg or infty)");
}

void validate_config(const Config& cfg) {
  require_within(cfg.ambient, cfg.A, "A");
  require_within(cfg.ambient, cfg.B, "B");
  require_within(cfg.ambient, cfg.C, "C");
  if (cfg.D) {
    require_within(cfg.ambient, *cfg.D, "D");
    if (!is_subset(*cfg.D, cfg.C) || !is_subset(cfg.C, cfg.B)) {
      throw DomainError("configuration needs D <= C <= B");
    }
  }
}

std::string serialize_config(const Config& cfg) {
  std::string out = serialize_dms(cfg.ambient);
  out += "A " + cfg.A.to_string() + "\n";
  out += "B " + cfg.B.to_string() + "\n";
  out += "C " + cfg.C.to_string() + "\n";
  if (cfg.D) out += "D " + cfg.D->to_string() + "\n";
  return out;
}

bool indep_a(const Space& sp, const SubsetRef& a, const SubsetRef& b, const SubsetRef& c) {
  require_within(sp, a, "A");
  require_within(sp, b, "B");
  require_within(sp, c, "C");
  return std::all_of(a.begin(), a.end(), [&](const std::string& x) {
    return !b.contains(x) || c.contains(x);
  });
}

bool indep_a(const Config& cfg) { return indep_a(cfg.ambient, cfg.A, cfg.B, cfg.C); }

bool indep_infty(const Space& sp, const SubsetRef& a, const SubsetRef& b, const SubsetRef& c) {
  require_infinity(sp.monoid());
  require_within(sp, b, "B");
  require_within(sp, c, "C");
  for (const auto& x : a) {
    const ExtValue to_b = dist_to_set(sp, x, b);
    const ExtValue to_c = dist_to_set(sp, x, c);
    if (to_b.is_zero() && !to_c.is_zero()) return false;
    if (to_c.is_infinity() && !to_b.is_infinity()) return false;
  }
  return true;
}

bool indep_infty(const Config& cfg) { return indep_infty(cfg.ambient, cfg.A, cfg.B, cfg.C); }

bool indep(RelationId rel, const Space& sp, const SubsetRef& a, const SubsetRef& b,
           const SubsetRef& c) {
  return rel == RelationId::Alg ? indep_a(sp, a, b, c) : indep_infty(sp, a, b, c);
}

ExtensionWitness free_copy_over(const Space& sp, const SubsetRef& a, const SubsetRef& base) {
  require_within(sp, a, "A");
  require_within(sp, base, "base");

  std::vector<std::string> moved;  // points of a outside base
  std::vector<std::string> image;
  std::vector<std::string> taken(sp.points().begin(), sp.points().end());
  for (const auto& x : a) {
    if (base.contains(x)) {
      image.push_back(x);
      continue;
    }
    std::string fresh = x + "'";
    while (std::find(taken.begin(), taken.end(), fresh) != taken.end()) fresh += "'";
    taken.push_back(fresh);
    moved.push_back(x);
    image.push_back(std::move(fresh));
  }
  if (moved.empty()) return ExtensionWitness{sp, SubsetRef(std::move(image))};

  // The copy: moved points renamed, followed by the base itself.
  std::vector<std::string> copy_ids;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!base.contains(a.ids()[i])) copy_ids.push_back(image[i]);
  }
  copy_ids.insert(copy_ids.end(), base.begin(), base.end());
  const Space copy =
      sp.restrict(subset_union(SubsetRef(moved), base)).relabel(std::move(copy_ids));

  if (base.empty()) {
    return ExtensionWitness{disjoint_union_at_top(sp, copy), SubsetRef(std::move(image))};
  }
  return ExtensionWitness{free_amalgam(sp, copy, base), SubsetRef(std::move(image))};
}

ExtensionWitness extension_witness(const Config& cfg, const SubsetRef& bhat) {
  validate_config(cfg);
  require_infinity(cfg.ambient.monoid());
  require_within(cfg.ambient, bhat, "Bhat");
  if (!is_subset(cfg.B, bhat)) {
    throw PreconditionError("extension needs B <= Bhat");
  }
  for (const auto& x : cfg.A) {
    const ExtValue to_b = dist_to_set(cfg.ambient, x, cfg.B);
    const ExtValue to_c = dist_to_set(cfg.ambient, x, cfg.C);
    if (to_b.is_zero() && !to_c.is_zero()) {
      throw PreconditionError("not independent: d(" + x + ",B) = 0 but d(" + x + ",C) = " +
                              to_c.to_string());
    }
    if (to_c.is_infinity() && !to_b.is_infinity()) {
      throw PreconditionError("not independent: d(" + x + ",C) = inf but d(" + x + ",B) = " +
                              to_b.to_string());
    }
  }
  return free_copy_over(cfg.ambient, cfg.A, subset_union(cfg.B, cfg.C));
}

SubsetRef local_character_base(RelationId rel, const SubsetRef& a, const SubsetRef& b,
                               const Space& sp) {
  require_within(sp, a, "A");
  require_within(sp, b, "B");
  std::vector<std::size_t> chosen;
  if (rel == RelationId::Alg) {
    for (const auto& x : a) {
      if (b.contains(x)) chosen.push_back(sp.index_of(x));
    }
  } else {
    std::vector<std::size_t> bi;
    for (const auto& y : b) bi.push_back(sp.index_of(y));
    std::sort(bi.begin(), bi.end());
    const auto& m = sp.monoid();
    for (const auto& x : a) {
      if (bi.empty()) break;
      const std::size_t ix = sp.index_of(x);
      std::size_t best = bi.front();
      for (std::size_t y : bi) {
        if (m.less(sp.dist(ix, y), sp.dist(ix, best))) best = y;
      }
      chosen.push_back(best);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  std::vector<std::string> ids;
  for (std::size_t i : chosen) ids.push_back(sp.points()[i]);
  return SubsetRef(std::move(ids));
}

Counterexample distinguishing_counterexample(const ExtMonoid& m) {
  require_infinity(m);
  const ExtValue one = ExtValue::finite(1);
  Space sp(m, {"a", "b"}, {ExtValue{}, one, one, ExtValue{}});
  Counterexample out{Config{std::move(sp), SubsetRef{"a"}, SubsetRef{"b"}, SubsetRef{}, {}}};
  out.verdict_alg = indep_a(out.config);
  out.verdict_infty = indep_infty(out.config);
  return out;
}

}  // namespace urysohn
