// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "oracles.hpp"
#include "pwl/builtin_examples.hpp"
#include "pwl/cli.hpp"
#include "pwl/halfspace.hpp"
#include "pwl/mapfile.hpp"
#include "pwl/nonsmooth.hpp"
#include "pwl/pwlmap.hpp"
#include "pwl/random_map.hpp"
#include "pwl/svg.hpp"

using namespace pwl;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.note = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0 && secs >= budget_s) out.require(false, "over time budget");
  if (!out.ok) ++failures;
  std::printf("%s  %2d  %-58s %8.3fs%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs,
              out.note.empty() ? "" : "  ", out.note.c_str());
  std::fflush(stdout);
}

PwlMap2 builtin(std::string_view name) { return parse_map_file(builtin_example_json(name)).map; }

std::vector<Mat2> matrices(const PwlMap2& g) {
  std::vector<Mat2> m;
  for (const auto& p : g.pieces()) m.push_back(p.matrix);
  return m;
}

bool witness_ok(const PwlMap2& g, const CollisionWitness& w) {
  const Vec2 a = evaluate(g, w.x1);
  const Vec2 b = evaluate(g, w.x2);
  const double scale = std::max(1.0, w.image.norm());
  return (w.x1 - w.x2).norm() > 1e-6 * std::max(w.x1.norm(), w.x2.norm()) &&
         (a - w.image).norm() <= 1e-8 * scale && (b - w.image).norm() <= 1e-8 * scale;
}

bool roundtrip_ok(const PwlMap2& g, const PwlMap2& inv, std::mt19937_64& rng, int points) {
  std::normal_distribution<double> n(0.0, 2.0);
  for (int i = 0; i < points; ++i) {
    const Vec2 x{n(rng), n(rng)};
    if ((evaluate(inv, evaluate(g, x)) - x).norm() > 1e-9 * std::max(1.0, x.norm())) return false;
  }
  return true;
}

int sgn(double x) { return (x > 0) - (x < 0); }

double polyline_winding(const std::vector<Vec2>& pts) {
  double total = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Vec2 a = pts[i];
    const Vec2 b = pts[(i + 1) % pts.size()];
    total += std::atan2(a.cross(b), a.dot(b));
  }
  return total / (2.0 * std::acos(-1.0));
}

}  // namespace

int main() {
  criterion(1, "clarke4: degree 1, Invertible, Clarke hull det < 0", 1.0, [] {
    Outcome o;
    const auto dir = std::filesystem::temp_directory_path() / "pwl_acceptance";
    std::filesystem::create_directories(dir);
    const std::string d = dir.string();
    const char* argv[] = {"pwlinv", "example", "clarke4", "--dir", d.c_str(), "--json"};
    std::ostringstream out, err;
    const int code = cli::run(6, argv, out, err);
    o.require(code == 0, "exit code " + std::to_string(code));
    const auto r = nlohmann::json::parse(out.str());
    o.require(r["degree"] == 1, "degree");
    o.require(r["verdict"] == "Invertible", "verdict");
    o.require(r["clarke_min_det"].get<double>() < 0.0, "clarke_min_det not negative");
    const double cert = hull_det(matrices(builtin("clarke4")), std::vector<double>{0.5, 0, 0.5, 0});
    o.require(std::abs(cert + 0.84875) <= 1e-12, "certificate " + std::to_string(cert));
    return o;
  });

  criterion(2, "pie4-nonconvex: NonInjective, oracle degree 2, witness", 1.0, [] {
    Outcome o;
    const PwlMap2 g = builtin("pie4-nonconvex");
    const Verdict v = decide(g);
    o.require(v.tag == VerdictTag::NonInjective, "verdict");
    o.require(std::lround(oracle::dense_winding(g, 100000)) == 2, "oracle degree");
    o.require(v.degree == 2, "engine degree");
    o.require(v.witness && witness_ok(g, *v.witness), "witness");
    return o;
  });

  criterion(3, "pie5: dets in {sqrt2-1, 1}, NonInjective, oracle degree 2", 1.0, [] {
    Outcome o;
    const PwlMap2 g = builtin("pie5");
    const double r2 = std::sqrt(2.0) - 1.0;
    for (const auto& p : g.pieces()) {
      const double d = p.matrix.det();
      o.require(std::abs(d - r2) < 1e-12 || std::abs(d - 1.0) < 1e-12, "determinant");
    }
    const Verdict v = decide(g);
    o.require(v.tag == VerdictTag::NonInjective, "verdict");
    o.require(v.witness && witness_ok(g, *v.witness), "witness");
    o.require(std::lround(oracle::dense_winding(g, 100000)) == 2, "oracle degree");
    return o;
  });

  criterion(4, "n=2, n=3, n=4 convex: 500 each Invertible, roundtrip", 30.0, [] {
    Outcome o;
    std::mt19937_64 rng(2024);
    auto check = [&](const PwlMap2& g) {
      const Verdict v = decide(g);
      o.require(v.tag == VerdictTag::Invertible, "not Invertible");
      o.require(v.degree && std::abs(*v.degree) == 1, "|degree| != 1");
      o.require(v.inverse && roundtrip_ok(g, *v.inverse, rng, 1000), "roundtrip");
    };
    for (std::uint64_t seed = 0; seed < 500; ++seed) check(random_map(2, seed, false));
    for (std::uint64_t seed = 0; seed < 500; ++seed) check(random_map(3, seed, false));
    int convex = 0;
    for (std::uint64_t seed = 0; convex < 500 && seed < 1000000; ++seed) {
      const PwlMap2 g = random_map(4, seed, false);
      bool ok = true;
      for (const auto& p : g.pieces()) ok = ok && p.sector.is_convex(1e-12);
      if (!ok) continue;
      ++convex;
      check(g);
    }
    o.require(convex == 500, "too few convex n=4 maps");
    return o;
  });

  criterion(5, "sharpness: NonInjective n=5 and n=4 with a wide cone", 0.0, [] {
    Outcome o;
    auto sweep_for = [&](int n, bool need_wide) {
      for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        const PwlMap2 g = random_map(n, seed, false);
        if (need_wide) {
          bool wide = false;
          for (const auto& p : g.pieces()) wide = wide || p.sector.width() > kPi;
          if (!wide) continue;
        }
        const Verdict v = decide(g);
        if (v.tag != VerdictTag::NonInjective) continue;
        return v.witness && witness_ok(g, *v.witness);
      }
      return false;
    };
    o.require(sweep_for(5, false), "n=5");
    o.require(sweep_for(4, true), "n=4 wide");
    return o;
  });

  criterion(6, "sweep bounds over 10^4 random (matrix, sector) pairs", 0.0, [] {
    Outcome o;
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::uniform_real_distribution<double> ang(0.0, kTwoPi);
    int done = 0;
    while (done < 10000) {
      const Mat2 l{u(rng), u(rng), u(rng), u(rng)};
      if (l.is_singular()) continue;
      const double w = ang(rng);
      if (w <= 0.0) continue;
      const Sector s = Sector::from_radians(ang(rng), w);
      const double sw = std::abs(sweep(l, s));
      o.require(sw < kTwoPi, "|sweep| >= 2pi");
      if (s.width() < kPi) o.require(sw < kPi + 1e-9, "|sweep| >= pi on a narrow sector");
      ++done;
    }
    return o;
  });

  criterion(7, "half-space suite: 500 maps per k in {2,3,4,6}", 0.0, [] {
    Outcome o;
    for (int k : {2, 3, 4, 6}) {
      for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const HalfSpaceMap m = random_halfspace(k, seed);
        const int prod = sgn(m.a().det()) * sgn(m.b().det());
        const HalfSpaceVerdict v = halfspace_decide(m);
        o.require((v.tag == VerdictTag::Invertible) == (prod > 0), "verdict vs det product");
        o.require(sgn(gamma_coefficients(m).gamma_k) == prod, "sign of gamma_k");
        if (prod < 0) {
          o.require(v.witness.has_value(), "missing witness");
          if (v.witness) {
            const auto& w = *v.witness;
            const auto& nv = m.normal();
            o.require(nv.dot(w.x1) > 0 && nv.dot(w.x2) < 0, "witness sides");
            const auto y1 = halfspace_evaluate(m, w.x1);
            const auto y2 = halfspace_evaluate(m, w.x2);
            o.require((y1 - y2).norm() <= 1e-8 * y1.norm(), "witness images");
          }
        }
        if (k == 2) {
          const Verdict pv = decide(to_planar(m));
          o.require((pv.tag == VerdictTag::Invertible) == (v.tag == VerdictTag::Invertible),
                    "planar engine disagrees");
          o.require(pv.degree == v.degree, "planar degree disagrees");
        }
      }
    }
    return o;
  });

  criterion(8, "degree integrality and oracle match on 100 maps", 0.0, [] {
    Outcome o;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const PwlMap2 g = random_map(1 + static_cast<int>(seed % 8), 5000 + seed, false);
      const double ws = winding_sum(g);
      o.require(std::abs(ws - std::round(ws)) <= 1e-6, "winding sum not integral");
      o.require(degree(g) == std::lround(oracle::dense_winding(g, 100000)), "oracle mismatch");
    }
    return o;
  });

  criterion(9, "parabolic-sector example is locally invertible", 0.0, [] {
    Outcome o;
    const auto ex = parabolic_sector_example();
    const Mat2 d12 = Mat2::diag(1, 2);
    o.require(ex.jacobian.members.size() == 3 && ex.jacobian.members[0] == d12 &&
                  ex.jacobian.members[1] == d12 && ex.jacobian.members[2] == Mat2::identity(),
              "Jacobian data");
    o.require(ex.bderiv.size() == 2 && ex.bderiv[0].matrix == d12 && ex.bderiv[1].matrix == d12,
              "B-derivative data");
    o.require(check_local_invertibility(ex.jacobian, ex.bderiv).locally_invertible,
              "not locally invertible");
    return o;
  });

  criterion(10, "SVG polyline winding equals degree for builtins", 0.0, [] {
    Outcome o;
    for (const auto name : builtin_example_names()) {
      const PwlMap2 g = builtin(name);
      for (bool log_radial : {false, true}) {
        const auto pts = read_svg_polyline(render_svg_text(g, {log_radial, 2048}));
        o.require(std::lround(polyline_winding(pts)) == degree(g), std::string(name));
      }
    }
    return o;
  });

  std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
