#include "doctest.h"
#include "pwl/errors.hpp"
#include "pwl/pwlmap.hpp"
#include "pwl/random_map.hpp"

using namespace pwl;

TEST_CASE("random_map is deterministic in the seed") {
  for (int n = 1; n <= 6; ++n) {
    const PwlMap2 a = random_map(n, 42, false);
    const PwlMap2 b = random_map(n, 42, false);
    REQUIRE(a.size() == b.size());
    CHECK(a.size() == static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].matrix == b[i].matrix);
      CHECK(a[i].sector.start().angle() == b[i].sector.start().angle());
    }
  }
  CHECK_FALSE(random_map(4, 1, false)[0].matrix == random_map(4, 2, false)[0].matrix);
}

TEST_CASE("random_map shapes") {
  const PwlMap2 one = random_map(1, 9, false);
  CHECK(one.size() == 1);
  CHECK(one[0].sector.width() == kTwoPi);
  CHECK_FALSE(one[0].matrix.is_singular());

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const PwlMap2 two = random_map(2, seed, false);
    CHECK(two[0].sector.width() == doctest::Approx(kPi));
    CHECK(two[1].sector.width() == doctest::Approx(kPi));
    const PwlMap2 g = random_map(6, seed, false);
    for (const auto& p : g.pieces()) CHECK(p.sector.width() >= kPi / 36 - 1e-12);
    CHECK(determinant_sign(g) != 0);
  }
  CHECK_THROWS_AS(random_map(0, 1, false), Error);
}

TEST_CASE("forced maps have degree one") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const PwlMap2 g = random_map(2 + static_cast<int>(seed % 7), seed, true);
    CHECK(degree(g) == 1);
  }
}

TEST_CASE("three cones are always invertible") {
  for (std::uint64_t seed = 0; seed < 300; ++seed)
    CHECK(decide(random_map(3, seed, false)).tag == VerdictTag::Invertible);
}

TEST_CASE("five cones reach degree two") {
  bool found = false;
  for (std::uint64_t seed = 0; seed < 10000 && !found; ++seed)
    found = std::abs(degree(random_map(5, seed, false))) >= 2;
  CHECK(found);
}
