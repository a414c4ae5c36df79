#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "urysohn/errors.hpp"
#include "urysohn/random_space.hpp"
#include "urysohn/space.hpp"

using namespace urysohn;

namespace {

const ExtValue kInf = ExtValue::infinity();

ExtValue n(long v) { return ExtValue::finite(Rational(v)); }

// Symmetric space from the upper triangle, row by row.
Space make(const ExtMonoid& m, std::vector<std::string> pts, const std::vector<ExtValue>& upper) {
  const std::size_t k = pts.size();
  std::vector<ExtValue> table(k * k, n(0));
  std::size_t u = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      table[i * k + j] = upper[u];
      table[j * k + i] = upper[u];
      ++u;
    }
  }
  return Space(m, std::move(pts), std::move(table));
}

Space nat(std::vector<std::string> pts, const std::vector<ExtValue>& upper) {
  return make(ExtMonoid::nat_star(), std::move(pts), upper);
}

// Triangle check written independently of validate_space.
bool triangles_hold(const Space& sp) {
  const auto& m = sp.monoid();
  for (std::size_t x = 0; x < sp.size(); ++x)
    for (std::size_t y = 0; y < sp.size(); ++y)
      for (std::size_t z = 0; z < sp.size(); ++z)
        if (!m.leq(sp.dist(x, z), m.add(sp.dist(x, y), sp.dist(y, z)))) return false;
  return true;
}

}  // namespace

TEST_CASE("validate_space examples") {
  CHECK(validate_space(nat({"a", "b"}, {n(1)})).ok());

  const auto bad = validate_space(nat({"a", "b", "c"}, {n(1), n(5), n(1)}));
  CHECK_FALSE(bad.ok());
  const auto* tri = bad.find("triangle");
  REQUIRE(tri != nullptr);
  CHECK_FALSE(tri->passed);
  CHECK(tri->witness == std::vector<std::string>{"a", "b", "c"});

  CHECK(validate_space(nat({"a", "b", "c"}, {n(2), kInf, kInf})).ok());
}

TEST_CASE("validate_space flags each broken axiom") {
  const auto m = ExtMonoid::nat_star();
  // d(a,b) = 0 for distinct points.
  CHECK_FALSE(validate_space(nat({"a", "b"}, {n(0)})).find("positivity")->passed);

  std::vector<ExtValue> asym = {n(0), n(1), n(2), n(0)};
  CHECK_FALSE(validate_space(Space(m, {"a", "b"}, asym)).find("symmetry")->passed);

  std::vector<ExtValue> diag = {n(1), n(1), n(1), n(0)};
  CHECK_FALSE(validate_space(Space(m, {"a", "b"}, diag)).find("zero_diagonal")->passed);
}

TEST_CASE("Space construction rejects structural problems") {
  const auto m = ExtMonoid::nat_star();
  CHECK_THROWS_AS(Space(m, {"a", "a"}, {n(0), n(1), n(1), n(0)}), DomainError);
  CHECK_THROWS_AS(Space(m, {"a", "b"}, {n(0), n(1), n(1)}), StructuralError);
  CHECK_THROWS_AS(Space(m, {"a b"}, {n(0)}), StructuralError);
  CHECK_THROWS_AS(Space(ExtMonoid::truncated_nat(2), {"a", "b"}, {n(0), n(3), n(3), n(0)}),
                  DomainError);
  CHECK_THROWS_AS(nat({"a", "b"}, {n(1)}).index_of("z"), DomainError);
}

TEST_CASE("dist_to_set examples") {
  const auto sp = nat({"a", "b", "c"}, {n(4), n(2), n(3)});
  CHECK(dist_to_set(sp, "a", SubsetRef{}) == kInf);
  CHECK(dist_to_set(sp, "a", SubsetRef{"a", "b"}) == n(0));
  CHECK(dist_to_set(sp, "a", SubsetRef{"b", "c"}) == n(2));
  CHECK_THROWS_AS(dist_to_set(sp, "a", SubsetRef{"q"}), DomainError);
  CHECK_THROWS_AS(dist_to_set(sp, "q", SubsetRef{"a"}), DomainError);
}

TEST_CASE("d_max examples") {
  // points a, b, c with d(a,c)=1, d(c,b)=2, d(a,b)=3
  const auto sp = nat({"a", "b", "c"}, {n(3), n(1), n(2)});
  CHECK(d_max(sp, "a", "b", SubsetRef{"c"}) == n(3));
  CHECK(d_max(sp, "a", "b", SubsetRef{"a", "c"}) == sp.dist("a", "b"));
  CHECK(d_max(sp, "a", "b", SubsetRef{}) == kInf);
}

TEST_CASE("free_amalgam examples") {
  const auto left = nat({"a", "c"}, {n(1)});
  const auto right = nat({"b", "c"}, {n(2)});
  const auto am = free_amalgam(left, right, SubsetRef{"c"});
  CHECK(am.points().size() == 3);
  CHECK(am.points()[0] == "a");
  CHECK(am.points()[2] == "b");
  CHECK(am.dist("a", "b") == n(3));
  CHECK(validate_space(am).ok());

  CHECK(free_amalgam(left, left, SubsetRef{"a", "c"}) == left);

  const auto far = nat({"a", "c"}, {kInf});
  CHECK(free_amalgam(far, right, SubsetRef{"c"}).dist("a", "b") == kInf);
}

TEST_CASE("free_amalgam errors") {
  const auto left = nat({"a", "c"}, {n(1)});
  const auto right = nat({"b", "c"}, {n(2)});
  CHECK_THROWS_AS(free_amalgam(left, right, SubsetRef{}), PreconditionError);
  // a appears on both sides but is not common.
  CHECK_THROWS_AS(free_amalgam(left, nat({"a", "c"}, {n(1)}), SubsetRef{"c"}), DomainError);
  CHECK_THROWS_AS(free_amalgam(nat({"a", "c", "e"}, {n(1), n(1), n(1)}),
                               nat({"b", "c", "e"}, {n(1), n(1), n(2)}), SubsetRef{"c", "e"}),
                  DomainError);
  CHECK_THROWS_AS(free_amalgam(left, make(ExtMonoid::q_star(), {"b", "c"}, {n(2)}),
                               SubsetRef{"c"}),
                  DomainError);
}

TEST_CASE("one_point_extend examples") {
  const auto one = Space(ExtMonoid::nat_star(), std::string("a"));
  const auto two = one_point_extend(one, OnePointSpec{"x", {n(7)}});
  CHECK(two.size() == 2);
  CHECK(two.dist("x", "a") == n(7));
  CHECK(validate_space(two).ok());

  const auto ab = nat({"a", "b"}, {n(1)});
  try {
    one_point_extend(ab, OnePointSpec{"x", {n(1), n(5)}});
    FAIL("expected rejection");
  } catch (const ExtensionRejected& e) {
    CHECK(e.first() == "a");
    CHECK(e.second() == "b");
  }

  const auto apart = nat({"a", "b"}, {kInf});
  CHECK(validate_space(one_point_extend(apart, OnePointSpec{"x", {n(3), kInf}})).ok());

  CHECK_THROWS_AS(one_point_extend(ab, OnePointSpec{"a", {n(1), n(1)}}), DomainError);
  CHECK_THROWS_AS(one_point_extend(ab, OnePointSpec{"x", {n(0), n(1)}}), DomainError);
  CHECK_THROWS_AS(one_point_extend(ab, OnePointSpec{"x", {n(1)}}), StructuralError);
}

TEST_CASE("disjoint unions") {
  const auto m = ExtMonoid::nat_star();
  const auto u = disjoint_union_at_infinity(Space(m, std::string("a")), Space(m, std::string("b")));
  CHECK(u.size() == 2);
  CHECK(u.dist("a", "b") == kInf);
  const Space lone(m, std::string("a"));
  CHECK_THROWS_AS(disjoint_union_at_infinity(lone, lone), DomainError);

  const auto t = ExtMonoid::truncated_nat(3);
  CHECK_THROWS_AS(
      disjoint_union_at_infinity(Space(t, std::string("a")), Space(t, std::string("b"))),
      UnsupportedError);
  const auto top = disjoint_union_at_top(Space(t, std::string("a")), Space(t, std::string("b")));
  CHECK(top.dist("a", "b") == n(3));

  RandomSpaceParams p1;
  RandomSpaceParams p2;
  p2.id_prefix = "q";
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto l = random_space(m, 1 + s % 5, p1, s);
    const auto r = random_space(m, 1 + s % 4, p2, s + 1000);
    const auto un = disjoint_union_at_infinity(l, r);
    CHECK(validate_space(un).ok());
    CHECK(un.restrict(l.all()) == l);
    CHECK(un.restrict(r.all()) == r);
  }
}

TEST_CASE("isometric_over examples") {
  const auto sp = nat({"a", "a2", "c"}, {n(1), n(1), n(2)});
  CHECK(isometric_over(sp, SubsetRef{"a"}, SubsetRef{"a"}, SubsetRef{"c"}));
  CHECK_FALSE(isometric_over(sp, SubsetRef{"a"}, SubsetRef{"a2"}, SubsetRef{"c"}));
  CHECK(isometric_over(sp, SubsetRef{"a"}, SubsetRef{"a2"}, SubsetRef{}));
  CHECK_THROWS_AS(isometric_over(sp, SubsetRef{"a"}, SubsetRef{"a", "c"}, SubsetRef{}),
                  DomainError);
}

TEST_CASE("SubsetRef parsing and set helpers") {
  CHECK(SubsetRef::parse("").empty());
  CHECK(SubsetRef::parse("a,b c") == SubsetRef{"a", "b", "c"});
  CHECK_THROWS_AS(SubsetRef::parse("a,a"), DomainError);
  CHECK(subset_union(SubsetRef{"a", "b"}, SubsetRef{"c", "a"}) == SubsetRef{"a", "b", "c"});
  CHECK(subset_intersection(SubsetRef{"a", "b", "c"}, SubsetRef{"c", "a"}) ==
        SubsetRef{"a", "c"});
  CHECK(is_subset(SubsetRef{}, SubsetRef{"a"}));
  CHECK_FALSE(is_subset(SubsetRef{"b"}, SubsetRef{"a"}));
}

TEST_CASE("free amalgamation of random triples stays metric") {
  // Random ambient on 3..8 points; split into two overlapping pieces.
  const auto m = ExtMonoid::nat_star();
  RandomSpaceParams params;
  Rng rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t k = 3 + rng.below(6);
    const auto sp = random_space(m, k, params, rng.next());
    std::vector<std::string> l, r, c;
    for (const auto& p : sp.points()) {
      switch (rng.below(3)) {
        case 0: l.push_back(p); break;
        case 1: r.push_back(p); break;
        default: c.push_back(p); break;
      }
    }
    if (c.empty()) c.push_back(sp.points()[0]);
    std::erase(l, c.front());
    std::erase(r, c.front());
    std::vector<std::string> left = c, right = c;
    left.insert(left.end(), l.begin(), l.end());
    right.insert(right.end(), r.begin(), r.end());
    const auto am = free_amalgam(sp.restrict(SubsetRef(left)), sp.restrict(SubsetRef(right)),
                                 SubsetRef(c));
    CHECK(triangles_hold(am));
    CHECK(validate_space(am).ok());
    // Cross distances are the largest allowed: never below the original.
    for (const auto& x : l)
      for (const auto& y : r) CHECK(m.leq(sp.dist(x, y), am.dist(x, y)));
  }
}

TEST_CASE("point-to-set distance properties") {
  const auto m = ExtMonoid::nat_star();
  RandomSpaceParams params;
  Rng rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const auto sp = random_space(m, 6, params, rng.next());
    std::vector<std::string> c, c2;
    for (const auto& p : sp.points()) {
      const bool in = rng.chance(2, 5);
      if (in) c.push_back(p);
      if (in || rng.chance(2, 5)) c2.push_back(p);
    }
    const SubsetRef base(c);
    const SubsetRef bigger(c2);
    for (const auto& a : sp.points()) {
      const auto d = dist_to_set(sp, a, base);
      CHECK((d == n(0)) == base.contains(a));
      CHECK(m.leq(dist_to_set(sp, a, bigger), d));
      for (const auto& b : sp.points()) CHECK(m.leq(d, d_max(sp, a, b, base)));
    }
  }
}

TEST_CASE("one_point_extend accepts free distances over any base") {
  const auto m = ExtMonoid::nat_star();
  RandomSpaceParams params;
  Rng rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto sp = random_space(m, 6, params, rng.next());
    std::vector<std::string> base{sp.points()[rng.below(sp.size())]};
    for (const auto& p : sp.points())
      if (p != base.front() && rng.chance(2, 5)) base.push_back(p);
    // x is placed validly against the base, then freely against the rest.
    const auto sub = sp.restrict(SubsetRef(base));
    const auto near = random_one_point_spec(sub, "x", rng, params);
    OnePointSpec spec{"x", {}};
    for (const auto& p : sp.points()) {
      ExtValue best = kInf;
      for (std::size_t c = 0; c < base.size(); ++c) {
        best = m.min(best, m.add(near.distances[c], sp.dist(base[c], p)));
      }
      spec.distances.push_back(best);
    }
    const auto ext = one_point_extend(sp, spec);
    CHECK(validate_space(ext).ok());
    CHECK(triangles_hold(ext));
  }
}
