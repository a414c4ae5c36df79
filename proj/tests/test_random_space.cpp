#include <doctest.h>

#include <set>
#include <string>

#include "urysohn/dms.hpp"
#include "urysohn/errors.hpp"
#include "urysohn/random_space.hpp"

using namespace urysohn;

namespace {

bool triangles_hold(const Space& sp) {
  const auto& m = sp.monoid();
  for (std::size_t x = 0; x < sp.size(); ++x)
    for (std::size_t y = 0; y < sp.size(); ++y)
      for (std::size_t z = 0; z < sp.size(); ++z)
        if (!m.leq(sp.dist(x, z), m.add(sp.dist(x, y), sp.dist(y, z)))) return false;
  return true;
}

}  // namespace

TEST_CASE("random_space output is always a valid space") {
  RandomSpaceParams params;
  const auto m = ExtMonoid::nat_star();
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const auto sp = random_space(m, 2 + seed % 11, params, seed);
    REQUIRE(validate_space(sp).ok());
  }
}

TEST_CASE("random_space over the other monoids") {
  RandomSpaceParams params;
  for (const char* d : {"q-star", "trunc:1", "trunc:5", "set:0,1,3,4", "set:0,1/2,1"}) {
    const auto m = parse_monoid(d);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const auto sp = random_space(m, 1 + seed % 10, params, seed);
      CHECK(validate_space(sp).ok());
      CHECK(triangles_hold(sp));
    }
  }
}

TEST_CASE("random_space is deterministic in its seed") {
  RandomSpaceParams params;
  const auto m = ExtMonoid::q_star();
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CHECK(serialize_dms(random_space(m, 9, params, seed)) ==
          serialize_dms(random_space(m, 9, params, seed)));
  }
  std::set<std::string> distinct;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    distinct.insert(serialize_dms(random_space(m, 6, params, seed)));
  }
  CHECK(distinct.size() > 40);
}

TEST_CASE("random_space edge cases") {
  RandomSpaceParams params;
  const auto m = ExtMonoid::nat_star();
  CHECK_THROWS_AS(random_space(m, 0, params, 1), DomainError);
  const auto one = random_space(m, 1, params, 1);
  CHECK(one.size() == 1);
  CHECK(one.points()[0] == "p0");
}

TEST_CASE("random_space reaches both finite and infinite distances") {
  RandomSpaceParams params;
  const auto m = ExtMonoid::nat_star();
  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto sp = random_space(m, 8, params, seed);
    for (std::size_t i = 0; i < sp.size(); ++i)
      for (std::size_t j = i + 1; j < sp.size(); ++j) seen.insert(sp.dist(i, j).to_string());
  }
  CHECK(seen.count("inf") == 1);
  for (int v = 1; v <= 8; ++v) CHECK(seen.count(std::to_string(v)) == 1);
  CHECK(seen.count("9") == 0);
}

TEST_CASE("sampling_grid") {
  RandomSpaceParams params;
  params.max_finite = 2;
  params.denominator = 2;
  const auto q = sampling_grid(ExtMonoid::q_star(), params);
  REQUIRE(q.size() == 9);
  CHECK(q.front() == ExtValue::successor(Rational(0)));
  CHECK(q.back() == ExtValue::successor(Rational(2)));
  const auto t = sampling_grid(ExtMonoid::truncated_nat(3), params);
  CHECK(t.size() == 3);
}

TEST_CASE("random_one_point_spec is always accepted") {
  RandomSpaceParams params;
  const auto m = ExtMonoid::nat_star();
  Rng rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto sp = random_space(m, 1 + trial % 7, params, rng.next());
    const auto spec = random_one_point_spec(sp, "x", rng, params);
    CHECK(validate_space(one_point_extend(sp, spec)).ok());
  }
}
