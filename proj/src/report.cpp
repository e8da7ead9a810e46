#include "pwl/report.hpp"

#include <fmt/format.h>

#include "pwl/errors.hpp"
#include "pwl/nonsmooth.hpp"

namespace pwl {
namespace {

using nlohmann::ordered_json;

ordered_json point(Vec2 p) { return ordered_json::array({p.x, p.y}); }

struct Analysis {
  Verdict verdict;
  std::vector<Mat2> matrices;
  HullMinimum clarke;
  int clarke_resolution = 0;
};

Analysis analyze(const PwlMap2& g) {
  Analysis a{decide(g), {}, {}, 0};
  for (const auto& p : g.pieces()) a.matrices.push_back(p.matrix);
  a.clarke_resolution = affordable_resolution(a.matrices.size());
  a.clarke = clarke_hull_min_det(a.matrices, a.clarke_resolution);
  return a;
}

}  // namespace

ordered_json report_json(const PwlMap2& g, std::string_view name) {
  const Analysis a = analyze(g);
  const Verdict& v = a.verdict;
  ordered_json r;
  r["name"] = std::string(name);
  r["n"] = g.size();
  r["widths"] = ordered_json::array();
  r["determinants"] = ordered_json::array();
  for (const auto& p : g.pieces()) {
    r["widths"].push_back(p.sector.width());
    r["determinants"].push_back(p.matrix.det());
  }
  r["degree"] = v.degree ? ordered_json(*v.degree) : ordered_json(nullptr);
  r["verdict"] = std::string(to_string(v.tag));
  r["theorem_tag"] = std::string(to_string(v.theorem_tag));
  if (v.witness) {
    const auto& w = *v.witness;
    r["witness"] = {{"x1", point(w.x1)},
                    {"x2", point(w.x2)},
                    {"cone_index_1", w.cone_index_1},
                    {"cone_index_2", w.cone_index_2},
                    {"image", point(w.image)}};
  } else {
    r["witness"] = nullptr;
  }
  if (v.inverse) {
    ordered_json inv = ordered_json::array();
    for (const auto& p : v.inverse->pieces()) {
      const Mat2& m = p.matrix;
      inv.push_back({{"start_rad", p.sector.start().angle()},
                     {"width", p.sector.width()},
                     {"matrix", {{m.a11, m.a12}, {m.a21, m.a22}}}});
    }
    r["inverse"] = std::move(inv);
  } else {
    r["inverse"] = nullptr;
  }
  r["clarke_min_det"] = a.clarke.min_det;
  r["clarke_weights"] = a.clarke.weights;
  r["clarke_resolution"] = a.clarke_resolution;
  return r;
}

std::string report(const PwlMap2& g, bool machine, std::string_view name) {
  if (machine) return report_json(g, name).dump(2) + "\n";

  const Analysis a = analyze(g);
  const Verdict& v = a.verdict;
  std::string out;
  auto line = [&out](const std::string& s) { out += s + "\n"; };
  if (!name.empty()) line(fmt::format("map:          {}", name));
  line(fmt::format("cones:        {}", g.size()));
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& p = g[i];
    const std::string start = p.sector.start().exact()
                                  ? p.sector.start().exact()->to_string() + " turn"
                                  : fmt::format("{:.9g} rad", p.sector.start().angle());
    line(fmt::format("  C{}: start {:<12} width {:.9g} rad  det {:.12g}", i + 1, start,
                     p.sector.width(), p.matrix.det()));
  }
  line(fmt::format("degree:       {}", v.degree ? std::to_string(*v.degree) : "undefined"));
  line(fmt::format("verdict:      {}", to_string(v.tag)));
  line(fmt::format("theorem_tag:  {}", to_string(v.theorem_tag)));
  if (v.witness) {
    const auto& w = *v.witness;
    line(fmt::format("witness:      G({:.12g}, {:.12g}) = G({:.12g}, {:.12g}) = ({:.12g}, {:.12g})",
                     w.x1.x, w.x1.y, w.x2.x, w.x2.y, w.image.x, w.image.y));
    line(fmt::format("              cones C{} and C{}", w.cone_index_1 + 1, w.cone_index_2 + 1));
  }
  if (v.inverse) {
    line(fmt::format("inverse:      {} pieces", v.inverse->size()));
    for (const auto& p : v.inverse->pieces()) {
      const Mat2& m = p.matrix;  // + 0.0 below prints -0 as 0
      line(fmt::format("  start {:.9g} rad width {:.9g} rad  [[{:.9g}, {:.9g}], [{:.9g}, {:.9g}]]",
                       p.sector.start().angle(), p.sector.width(), m.a11 + 0.0, m.a12 + 0.0, m.a21 + 0.0, m.a22 + 0.0));
    }
  }
  line(fmt::format("clarke hull:  min det {:.12g} (grid resolution {}){}", a.clarke.min_det,
                   a.clarke_resolution,
                   a.clarke.min_det < 0.0 ? "  -> Clarke's criterion does not apply" : ""));
  return out;
}

}  // namespace pwl
