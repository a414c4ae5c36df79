#include <doctest.h>

#include <string>
#include <vector>

#include "urysohn/errors.hpp"
#include "urysohn/independence.hpp"
#include "urysohn/random_space.hpp"

using namespace urysohn;

namespace {

const ExtValue kInf = ExtValue::infinity();

ExtValue n(long v) { return ExtValue::finite(Rational(v)); }

Space nat(std::vector<std::string> pts, const std::vector<ExtValue>& upper) {
  const std::size_t k = pts.size();
  std::vector<ExtValue> table(k * k, n(0));
  std::size_t u = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      table[i * k + j] = table[j * k + i] = upper[u++];
    }
  return Space(ExtMonoid::nat_star(), std::move(pts), std::move(table));
}

// Definition-level oracle: loops over points, no dist_to_set.
bool oracle_infty(const Space& sp, const SubsetRef& a, const SubsetRef& b, const SubsetRef& c) {
  for (const auto& x : a) {
    bool zero_b = false, zero_c = false, fin_b = false, fin_c = false;
    for (const auto& y : b) {
      zero_b |= sp.dist(x, y).is_zero();
      fin_b |= !sp.dist(x, y).is_infinity();
    }
    for (const auto& y : c) {
      zero_c |= sp.dist(x, y).is_zero();
      fin_c |= !sp.dist(x, y).is_infinity();
    }
    if (zero_b && !zero_c) return false;
    if (!fin_c && fin_b) return false;
  }
  return true;
}

SubsetRef random_subset(const Space& sp, Rng& rng, std::size_t num, std::size_t den) {
  std::vector<std::string> out;
  for (const auto& p : sp.points())
    if (rng.chance(num, den)) out.push_back(p);
  return SubsetRef(out);
}

SubsetRef random_sub_of(const SubsetRef& s, Rng& rng) {
  std::vector<std::string> out;
  for (const auto& p : s)
    if (rng.chance(1, 2)) out.push_back(p);
  return SubsetRef(out);
}

}  // namespace

TEST_CASE("the distinguishing counterexample") {
  for (const auto& m : {ExtMonoid::nat_star(), ExtMonoid::q_star()}) {
    const auto ce = distinguishing_counterexample(m);
    CHECK(ce.verdict_alg);
    CHECK_FALSE(ce.verdict_infty);
    const auto& cfg = ce.config;
    CHECK(cfg.ambient.size() == 2);
    CHECK(cfg.ambient.dist("a", "b") == n(1));
    CHECK(cfg.C.empty());
    // Moving a into the base makes both relations hold.
    CHECK(indep_infty(cfg.ambient, cfg.A, cfg.B, SubsetRef{"a"}));
  }
  CHECK_THROWS_AS(distinguishing_counterexample(ExtMonoid::truncated_nat(3)), UnsupportedError);
}

TEST_CASE("indep_a examples") {
  const auto sp = nat({"a", "b", "x"}, {n(1), n(1), n(1)});
  CHECK(indep_a(sp, SubsetRef{"a"}, SubsetRef{"b"}, SubsetRef{}));
  CHECK_FALSE(indep_a(sp, SubsetRef{"a", "x"}, SubsetRef{"b", "x"}, SubsetRef{}));
  CHECK(indep_a(sp, SubsetRef{"a", "x"}, SubsetRef{"b", "x"}, SubsetRef{"x"}));
  CHECK(indep_a(sp, SubsetRef{"a"}, SubsetRef{"a", "b", "x"}, SubsetRef{"a"}));
}

TEST_CASE("indep_infty examples") {
  const auto two = nat({"a", "b"}, {n(1)});
  CHECK_FALSE(indep_infty(two, SubsetRef{"a"}, SubsetRef{"b"}, SubsetRef{}));
  CHECK(indep_infty(two, SubsetRef{"a"}, SubsetRef{"a", "b"}, SubsetRef{"a"}));

  const auto three = nat({"a", "b", "c"}, {n(2), kInf, kInf});
  CHECK_FALSE(indep_infty(three, SubsetRef{"a"}, SubsetRef{"b"}, SubsetRef{"c"}));
  // Far from both sides: the conditionals hold.
  CHECK(indep_infty(three, SubsetRef{"c"}, SubsetRef{"a"}, SubsetRef{"b"}));

  const Space t(ExtMonoid::truncated_nat(2), std::string("a"));
  CHECK_THROWS_AS(indep_infty(t, SubsetRef{"a"}, SubsetRef{"a"}, SubsetRef{}), UnsupportedError);
  CHECK(indep(RelationId::Alg, t, SubsetRef{"a"}, SubsetRef{"a"}, SubsetRef{"a"}));
}

TEST_CASE("Config validation and serialization") {
  const auto sp = nat({"a", "b", "c"}, {n(1), n(1), n(1)});
  CHECK_NOTHROW(validate_config(Config{sp, {"a"}, {"b", "c"}, {"c"}, SubsetRef{}}));
  CHECK_THROWS_AS(validate_config(Config{sp, {"q"}, {"b"}, {}, {}}), DomainError);
  CHECK_THROWS_AS(validate_config(Config{sp, {"a"}, {"b"}, {"c"}, SubsetRef{}}), DomainError);
  CHECK_THROWS_AS(validate_config(Config{sp, {"a"}, {"b", "c"}, {"c"}, SubsetRef{"b"}}),
                  DomainError);
  const auto text = serialize_config(Config{sp, {"a"}, {"b"}, {}, {}});
  CHECK(text.find("A a\n") != std::string::npos);
  CHECK(text.find("B b\n") != std::string::npos);
  CHECK(text.find("C \n") != std::string::npos);
  CHECK(parse_relation("alg") == RelationId::Alg);
  CHECK(relation_name(RelationId::Infty) == "infty");
  CHECK_THROWS_AS(parse_relation("thorn"), StructuralError);
}

TEST_CASE("extension witness example") {
  // points a c b bh
  const auto sp = nat({"a", "c", "b", "bh"}, {n(1), n(3), n(4), n(2), n(3), n(1)});
  REQUIRE(validate_space(sp).ok());
  const Config cfg{sp, {"a"}, {"b"}, {"c"}, {}};
  REQUIRE(indep_infty(cfg));
  const auto w = extension_witness(cfg, SubsetRef{"b", "bh"});
  REQUIRE(w.A.size() == 1);
  const auto& a2 = w.A.ids()[0];
  CHECK(a2 != "a");
  CHECK(w.ambient.dist(a2, "bh") == n(4));
  CHECK(w.ambient.dist(a2, "b") == n(3));
  CHECK(w.ambient.dist(a2, "c") == n(1));
  CHECK(validate_space(w.ambient).ok());
  CHECK(isometric_over(w.ambient, SubsetRef{"a"}, w.A, SubsetRef{"b", "c"}));
  CHECK(indep_infty(w.ambient, w.A, SubsetRef{"b", "bh"}, SubsetRef{"c"}));

  CHECK_THROWS_AS(extension_witness(cfg, SubsetRef{"bh"}), PreconditionError);
  const Config dep{sp, {"a"}, {"b"}, {}, {}};
  CHECK_THROWS_AS(extension_witness(dep, SubsetRef{"b"}), PreconditionError);
}

TEST_CASE("extension witness with Bhat = B and the infinite case") {
  const auto sp = nat({"a", "c", "b"}, {n(1), n(3), n(2)});
  const Config cfg{sp, {"a"}, {"b"}, {"c"}, {}};
  const auto w = extension_witness(cfg, SubsetRef{"b"});
  CHECK(isometric_over(w.ambient, SubsetRef{"a"}, w.A, SubsetRef{"b", "c"}));
  CHECK(indep_infty(w.ambient, w.A, SubsetRef{"b"}, SubsetRef{"c"}) == indep_infty(cfg));

  // a is far from every base point and from bh.
  const auto far = nat({"a", "c", "b", "bh"}, {kInf, kInf, kInf, n(1), n(2), n(1)});
  const Config fcfg{far, {"a"}, {"b"}, {"c"}, {}};
  REQUIRE(indep_infty(fcfg));
  const auto fw = extension_witness(fcfg, SubsetRef{"b", "bh"});
  CHECK(fw.ambient.dist(fw.A.ids()[0], "bh") == kInf);
}

TEST_CASE("local character base examples") {
  const auto sp = nat({"a", "b1", "b2"}, {n(1), n(5), n(4)});
  CHECK(local_character_base(RelationId::Infty, SubsetRef{"a"}, SubsetRef{"b1", "b2"}, sp) ==
        SubsetRef{"b1"});
  CHECK(local_character_base(RelationId::Infty, SubsetRef{"a"}, SubsetRef{}, sp).empty());
  CHECK(indep_infty(sp, SubsetRef{"a"}, SubsetRef{}, SubsetRef{}));
  CHECK(local_character_base(RelationId::Alg, SubsetRef{"a", "b2"}, SubsetRef{"b1", "b2"}, sp) ==
        SubsetRef{"b2"});
  // Ties go to the earlier point.
  const auto tie = nat({"a", "b1", "b2"}, {n(2), n(2), n(1)});
  CHECK(local_character_base(RelationId::Infty, SubsetRef{"a"}, SubsetRef{"b2", "b1"}, tie) ==
        SubsetRef{"b1"});
}

TEST_CASE("relations agree with definition-level oracles") {
  RandomSpaceParams params;
  Rng rng(31);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto m = trial % 2 ? ExtMonoid::nat_star() : ExtMonoid::q_star();
    const auto sp = random_space(m, 3 + trial % 8, params, rng.next());
    const auto a = random_subset(sp, rng, 1, 3);
    const auto b = random_subset(sp, rng, 1, 3);
    const auto c = random_subset(sp, rng, 1, 3);
    CHECK(indep_infty(sp, a, b, c) == oracle_infty(sp, a, b, c));
    bool meet_outside = false;
    for (const auto& x : a) meet_outside |= b.contains(x) && !c.contains(x);
    CHECK(indep_a(sp, a, b, c) == !meet_outside);
  }
}

TEST_CASE("structural invariants of the two relations") {
  const auto m = ExtMonoid::nat_star();
  RandomSpaceParams params;
  Rng rng(77);
  int chains = 0, collapses = 0, symmetric = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    const auto sp = random_space(m, 4 + trial % 8, params, rng.next());
    const auto a = random_subset(sp, rng, 1, 3);
    const auto b = random_subset(sp, rng, 1, 2);
    const auto c = random_sub_of(b, rng);
    const auto d = random_sub_of(c, rng);
    const bool inf_abc = indep_infty(sp, a, b, c);

    // infty implies alg
    if (inf_abc) CHECK(indep_a(sp, a, b, c));

    // chain equivalence
    ++chains;
    CHECK(indep_infty(sp, a, b, d) == (indep_infty(sp, a, c, d) && inf_abc));

    // finite-distance collapse
    bool all_finite = true;
    for (const auto& x : a) all_finite &= !dist_to_set(sp, x, c).is_infinity();
    if (all_finite) {
      ++collapses;
      CHECK(inf_abc == indep_a(sp, a, b, c));
    }

    // symmetry mechanism
    if (inf_abc) {
      for (const auto& y : b) {
        if (!dist_to_set(sp, y, c).is_infinity()) continue;
        ++symmetric;
        for (const auto& x : a) CHECK(sp.dist(x, y).is_infinity());
      }
    }

    // relabeling invariance
    std::vector<std::string> ids;
    for (const auto& p : sp.points()) ids.push_back("r" + p);
    const auto re = sp.relabel(ids);
    auto rename = [](const SubsetRef& s) {
      std::vector<std::string> out;
      for (const auto& p : s) out.push_back("r" + p);
      return SubsetRef(out);
    };
    CHECK(indep_infty(re, rename(a), rename(b), rename(c)) == inf_abc);
  }
  CHECK(collapses > 100);
  CHECK(symmetric > 100);
}

TEST_CASE("extension and local character postconditions on random configs") {
  RandomSpaceParams params;
  Rng rng(1234);
  int extensions = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const auto m = trial % 3 ? ExtMonoid::nat_star() : ExtMonoid::q_star();
    const auto sp = random_space(m, 4 + trial % 9, params, rng.next());
    const auto a = random_subset(sp, rng, 1, 3);
    const auto bhat = random_subset(sp, rng, 1, 2);
    const auto b = random_sub_of(bhat, rng);
    const auto c = random_subset(sp, rng, 1, 4);

    const auto base = local_character_base(RelationId::Infty, a, bhat, sp);
    CHECK(base.size() <= a.size());
    CHECK(is_subset(base, bhat));
    for (const auto& x : a) CHECK(dist_to_set(sp, x, base) == dist_to_set(sp, x, bhat));
    CHECK(indep_infty(sp, a, bhat, base));

    const Config cfg{sp, a, b, c, {}};
    if (!indep_infty(cfg)) continue;
    ++extensions;
    const auto w = extension_witness(cfg, bhat);
    CHECK(validate_space(w.ambient).ok());
    CHECK(w.ambient.restrict(sp.all()) == sp);
    CHECK(isometric_over(w.ambient, a, w.A, subset_union(b, c)));
    CHECK(indep_infty(w.ambient, w.A, bhat, c));
  }
  CHECK(extensions > 500);
}

TEST_CASE("free_copy_over with an empty base") {
  const auto sp = nat({"a", "b"}, {n(2)});
  const auto w = free_copy_over(sp, SubsetRef{"a", "b"}, SubsetRef{});
  REQUIRE(w.A.size() == 2);
  CHECK(w.ambient.size() == 4);
  CHECK(w.ambient.dist(w.A.ids()[0], w.A.ids()[1]) == n(2));
  CHECK(w.ambient.dist(w.A.ids()[0], "a") == kInf);
  CHECK(validate_space(w.ambient).ok());
}
