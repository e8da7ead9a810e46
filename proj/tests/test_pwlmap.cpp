#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pwl/errors.hpp"
#include "pwl/pwlmap.hpp"
#include "pwl/random_map.hpp"
#include "test_support.hpp"

using namespace pwl;
using pwl::test::builtin;
using pwl::test::half_planes;
using pwl::test::identity_map;

namespace {

bool near(Vec2 a, Vec2 b, double tol) { return (a - b).norm() <= tol; }

Mat2 rotation(double a) { return {std::cos(a), -std::sin(a), std::sin(a), std::cos(a)}; }

}  // namespace

TEST_CASE("validate: identity and the five-cone example") {
  CHECK(identity_map().size() == 1);
  const PwlMap2 g = builtin("pie5");
  CHECK(g.size() == 5);
  CHECK(g.is_exact());
  // boundary at 3pi/2 shared by cones 4 and 5
  CHECK(near(g[3].matrix * Vec2{0, -1}, Vec2{0, -1}, 1e-15));
  CHECK(near(g[4].matrix * Vec2{0, -1}, Vec2{0, -1}, 1e-15));
}

TEST_CASE("validate: replacing the last matrix by 2I breaks continuity at theta = 0") {
  auto pieces = builtin("pie5").pieces();
  pieces[4].matrix = Mat2::diag(2, 2);
  try {
    validate(pieces);
    FAIL("expected DiscontinuousBoundaryError");
  } catch (const DiscontinuousBoundaryError& e) {
    CHECK(e.kind() == ErrorKind::DiscontinuousBoundary);
    CHECK(e.i == 4);
    CHECK(e.j == 0);
    CHECK(e.ux == doctest::Approx(1.0));
    CHECK(e.uy == doctest::Approx(0.0));
    CHECK(e.mismatch_norm == doctest::Approx(1.0));
  }
}

TEST_CASE("validate: sorting, gaps, empty input") {
  auto pieces = builtin("clarke4").pieces();
  std::swap(pieces[0], pieces[2]);
  const PwlMap2 g = validate(pieces);
  CHECK(g[0].sector.start().angle() == 0.0);
  CHECK(g[2].matrix == builtin("clarke4")[2].matrix);

  auto gap = builtin("clarke4").pieces();
  gap[1].sector = Sector::from_turns(TurnAngle(1, 4), TurnSpan(1, 4));
  CHECK_THROWS_AS(validate(gap), Error);
  try {
    validate(gap);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GapOrOverlap);
  }
  CHECK_THROWS_AS(validate({}), Error);
}

TEST_CASE("evaluate examples") {
  CHECK(evaluate(identity_map(), {3, -4}) == Vec2{3, -4});
  CHECK(evaluate(identity_map(), {0, 0}) == Vec2{0, 0});
  const PwlMap2 g46 = builtin("pie4-nonconvex");
  CHECK(near(evaluate(g46, {0, 1}), {0, 1}, 1e-15));
  CHECK(near(g46[0].matrix * Vec2{0, 1}, g46[1].matrix * Vec2{0, 1}, 1e-15));
  const PwlMap2 g411 = builtin("clarke4");
  CHECK(near(evaluate(g411, {0, 1}), {0, 1}, 1e-15));
  CHECK(near(g411[1].matrix * Vec2{0, 1}, {0, 1}, 1e-15));
}

TEST_CASE("image_sector examples") {
  const Sector q1 = Sector::from_turns(TurnAngle(0, 1), TurnSpan(1, 4));
  for (const Mat2& l : {Mat2::identity(), Mat2::diag(1, 2)}) {
    const ImageSector im = image_sector(l, q1);
    CHECK(im.sector.start().angle() == doctest::Approx(0.0));
    CHECK(im.sector.width() == doctest::Approx(kPi / 2));
    CHECK(im.classification == ImageClass::StrictlyConvex);
  }
  const ImageSector sh = image_sector(Mat2{1, 1, 0, 1}, q1);
  CHECK(sh.sector.start().angle() == doctest::Approx(0.0));
  CHECK(sh.sector.width() == doctest::Approx(kPi / 4));
  CHECK(sh.classification == ImageClass::StrictlyConvex);

  // orientation reversing: reflection across the x axis maps Q1 to Q4
  const ImageSector refl = image_sector(Mat2::diag(1, -1), q1);
  CHECK(refl.sector.start().angle() == doctest::Approx(3 * kPi / 2));
  CHECK(refl.sector.width() == doctest::Approx(kPi / 2));

  const Sector wide = Sector::from_turns(TurnAngle(1, 3), TurnSpan(7, 12));
  CHECK(image_sector(Mat2{2, 1, 0, 1}, wide).classification == ImageClass::ContainsHalfPlane);
  CHECK_THROWS_AS(image_sector(Mat2{1, 2, 2, 4}, q1), Error);
}

TEST_CASE("sweep examples") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  for (int i = 0; i < 100; ++i) {
    const double start = u(rng);
    const double w = u(rng) + 1e-3;
    const Sector s = Sector::from_radians(start, std::min(w, kTwoPi));
    CHECK(sweep(Mat2::identity(), s) == doctest::Approx(s.width()).epsilon(1e-12));
    CHECK(sweep(rotation(u(rng)), s) == doctest::Approx(s.width()).epsilon(1e-12));
  }
  const PwlMap2 g = builtin("pie4-nonconvex");
  const double sw = sweep(g[2].matrix, g[2].sector);
  CHECK(sw > kPi);
  CHECK(sw < kTwoPi);
  const double dense =
      oracle::dense_sweep(g[2].matrix, g[2].sector.start().angle(), g[2].sector.width(), 100000);
  CHECK(sw == doctest::Approx(dense).epsilon(1e-9));
  CHECK_THROWS_AS(sweep(Mat2{1, 1, 1, 1}, g[2].sector), Error);
  CHECK(sweep(Mat2::diag(1, -1), g[2].sector) < 0.0);
}

TEST_CASE("degree examples") {
  CHECK(degree(identity_map()) == 1);
  CHECK(degree(builtin("clarke4")) == 1);
  CHECK(degree(builtin("pie4-nonconvex")) == 2);
  CHECK(degree(builtin("pie5")) == 2);
  CHECK(std::lround(oracle::dense_winding(builtin("pie4-nonconvex"), 1000000)) == 2);
  CHECK(std::lround(oracle::dense_winding(builtin("pie5"), 1000000)) == 2);
  CHECK(std::lround(oracle::dense_winding(builtin("clarke4"), 1000000)) == 1);
  CHECK(degree(half_planes(Mat2::diag(1, -1), Mat2::diag(1, -1))) == -1);
  const PwlMap2 mixed = half_planes(Mat2::identity(), Mat2::diag(1, -1));
  CHECK_THROWS_AS(degree(mixed), Error);
}

TEST_CASE("preimages") {
  const auto id = preimages(identity_map(), {1, 0});
  REQUIRE(id.size() == 1);
  CHECK(id[0].point == Vec2{1, 0});

  const auto pre = preimages(builtin("clarke4"), {1, 0});
  REQUIRE(pre.size() == 1);
  CHECK(near(pre[0].point, {1, 0}, 1e-12));
  CHECK(pre[0].cones.size() == 2);
  // the candidates of the two other cones fall outside them
  const PwlMap2 g = builtin("clarke4");
  CHECK(near(g[1].matrix.inverse() * Vec2{1, 0}, {10, 100}, 1e-9));
  CHECK(near(g[2].matrix.inverse() * Vec2{1, 0}, {-890, 910}, 1e-9));
  CHECK(singleton_half_line_probe(g, {1, 0}));

  // pick theta in cone 3 where G(e^{i theta}) points to -G(e^{i 0})
  const PwlMap2 h = builtin("pie4-nonconvex");
  const Vec2 q = -evaluate(h, {std::cos(0.3), std::sin(0.3)});
  const auto two = preimages(h, q);
  CHECK(two.size() >= 2);
  for (const auto& p : two) CHECK(near(evaluate(h, p.point), q, 1e-9 * q.norm()));
  CHECK_THROWS_AS(preimages(h, {0, 0}), Error);
}

TEST_CASE("decide examples") {
  const Verdict v411 = decide(builtin("clarke4"));
  CHECK(v411.tag == VerdictTag::Invertible);
  CHECK(v411.degree == 1);
  CHECK(v411.theorem_tag == TheoremTag::FourConvexCones);
  CHECK(v411.inverse.has_value());

  const Verdict v46 = decide(builtin("pie4-nonconvex"));
  CHECK(v46.tag == VerdictTag::NonInjective);
  CHECK(v46.theorem_tag == TheoremTag::DegreeNotOne);
  REQUIRE(v46.witness.has_value());
  CHECK(witness_is_valid(builtin("pie4-nonconvex"), *v46.witness));

  const Verdict vid = decide(identity_map());
  CHECK(vid.theorem_tag == TheoremTag::TrivialLinear);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Verdict v = decide(random_map(3, seed, false));
    CHECK(v.tag == VerdictTag::Invertible);
    CHECK(v.theorem_tag == TheoremTag::ThreeCones);
  }

  const Verdict mixed = decide(half_planes(Mat2::identity(), Mat2::diag(1, -1)));
  CHECK(mixed.tag == VerdictTag::Degenerate);
  CHECK(mixed.theorem_tag == TheoremTag::MixedDeterminantSigns);
  const Verdict sing = decide(half_planes(Mat2::identity(), Mat2::diag(1, 0)));
  CHECK(sing.tag == VerdictTag::Degenerate);
  CHECK(sing.theorem_tag == TheoremTag::SingularPiece);
}

TEST_CASE("invert examples") {
  const PwlMap2 hid = invert(identity_map());
  REQUIRE(hid.size() == 1);
  CHECK(hid[0].matrix == Mat2::identity());

  const PwlMap2 h = invert(half_planes(Mat2::identity(), Mat2::diag(1, 2)));
  REQUIRE(h.size() == 2);
  CHECK(max_abs_diff(h[0].matrix, Mat2::identity()) < 1e-15);
  CHECK(max_abs_diff(h[1].matrix, Mat2::diag(1, 0.5)) < 1e-15);
  CHECK(h[1].sector.start().angle() == doctest::Approx(kPi));

  const PwlMap2 g = builtin("clarke4");
  const PwlMap2 inv = invert(g);
  CHECK(inv.size() == 4);
  std::mt19937_64 rng(17);
  std::normal_distribution<double> n(0.0, 3.0);
  for (int i = 0; i < 1000; ++i) {
    const Vec2 x{n(rng), n(rng)};
    CHECK(near(evaluate(inv, evaluate(g, x)), x, 1e-9 * std::max(1.0, x.norm())));
  }
  CHECK_THROWS_AS(invert(builtin("pie5")), Error);
}

TEST_CASE("collision witnesses") {
  for (const char* name : {"pie5", "pie4-nonconvex"}) {
    const PwlMap2 g = builtin(name);
    const CollisionWitness w = collision_witness(g);
    CHECK(witness_is_valid(g, w));
    CHECK(w.cone_index_1 != w.cone_index_2);
    CHECK((w.x1 - w.x2).norm() > 1e-6 * std::max(w.x1.norm(), w.x2.norm()));
    CHECK(near(evaluate(g, w.x1), evaluate(g, w.x2), 1e-8 * std::max(1.0, w.image.norm())));
  }
  // the pair straddles the wide cone: one end inside it
  const PwlMap2 g46 = builtin("pie4-nonconvex");
  const CollisionWitness w46 = collision_witness(g46);
  CHECK((w46.cone_index_1 == 2 || w46.cone_index_2 == 2));
  try {
    collision_witness(identity_map());
    FAIL("expected DegreeOne");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeOne);
  }
}

TEST_CASE("positive homogeneity and piece agreement") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::uniform_real_distribution<double> lam(0.0, 50.0);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const PwlMap2 g = random_map(2 + static_cast<int>(seed % 5), seed, seed % 2 == 0);
    for (int k = 0; k < 20; ++k) {
      const Vec2 x{u(rng), u(rng)};
      const double l = lam(rng);
      const Vec2 a = evaluate(g, l * x);
      const Vec2 b = l * evaluate(g, x);
      CHECK(near(a, b, 1e-12 * std::max(1.0, b.norm())));
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::size_t prev = (i + g.size() - 1) % g.size();
      const Vec2 d = g[i].sector.start().vec();
      const Vec2 a = g[i].matrix * d;
      const Vec2 b = g[prev].matrix * d;
      CHECK(near(a, b, 1e-9 * std::max(1.0, a.norm())));
    }
  }
}

TEST_CASE("sweep bounds on random matrices and sectors") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  for (int i = 0; i < 2000; ++i) {
    const Mat2 l{u(rng), u(rng), u(rng), u(rng)};
    if (l.is_singular()) continue;
    const Sector s = Sector::from_radians(ang(rng), std::max(1e-6, ang(rng)));
    const double sw = sweep(l, s);
    CHECK(std::abs(sw) < kTwoPi);
    if (s.width() < kPi) CHECK(std::abs(sw) < kPi + 1e-9);
    CHECK((sw > 0) == (l.det() > 0));
  }
}

TEST_CASE("structural cases are invertible with degree sign det L1") {
  int convex4 = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    for (int n : {1, 2, 3}) {
      const PwlMap2 g = random_map(n, seed, false);
      const Verdict v = decide(g);
      CHECK(v.tag == VerdictTag::Invertible);
      CHECK(v.degree == g[0].matrix.det_sign());
    }
  }
  for (std::uint64_t seed = 0; convex4 < 500 && seed < 100000; ++seed) {
    const PwlMap2 g = random_map(4, seed, false);
    bool convex = true;
    for (const auto& p : g.pieces()) convex = convex && p.sector.is_convex(1e-12);
    if (!convex) continue;
    ++convex4;
    const Verdict v = decide(g);
    CHECK(v.tag == VerdictTag::Invertible);
    CHECK(v.theorem_tag == TheoremTag::FourConvexCones);
    CHECK(v.degree == g[0].matrix.det_sign());
  }
  CHECK(convex4 == 500);
}

TEST_CASE("degree agrees with the dense sampling oracle") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const PwlMap2 g = random_map(1 + static_cast<int>(seed % 7), 1000 + seed, false);
    const double ws = winding_sum(g);
    CHECK(std::abs(ws - std::round(ws)) < 1e-6);
    CHECK(degree(g) == std::lround(oracle::dense_winding(g, 100000)));
  }
}

TEST_CASE("mixed or singular maps are never invertible") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    // lower matrix B = A + z e2^T agrees with A on the x axis
    const Mat2 a{u(rng), u(rng), u(rng), u(rng)};
    const double z1 = u(rng), z2 = u(rng);
    const Mat2 b{a.a11, a.a12 + z1, a.a21, a.a22 + z2};
    if (a.det_sign() * b.det_sign() > 0) continue;
    CHECK(decide(half_planes(a, b)).tag != VerdictTag::Invertible);
  }
}

TEST_CASE("inverse roundtrip and witness validity on random maps") {
  std::mt19937_64 rng(37);
  std::normal_distribution<double> n(0.0, 1.0);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const PwlMap2 g = random_map(2 + static_cast<int>(seed % 5), seed, false);
    const Verdict v = decide(g);
    if (v.tag == VerdictTag::Invertible) {
      for (int k = 0; k < 50; ++k) {
        const Vec2 x{n(rng), n(rng)};
        CHECK(near(evaluate(*v.inverse, evaluate(g, x)), x, 1e-9 * std::max(1.0, x.norm())));
      }
    } else {
      REQUIRE(v.tag == VerdictTag::NonInjective);
      CHECK(witness_is_valid(g, *v.witness));
    }
  }
}
