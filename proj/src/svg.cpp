#include "pwl/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include <fmt/format.h>

#include "pwl/errors.hpp"
#include "pwl/kernels.hpp"

namespace pwl {
namespace {

struct Box {
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
};

Box bounds(const std::vector<Vec2>& pts) {
  Box b{pts[0].x, pts[0].x, pts[0].y, pts[0].y};
  for (const auto& p : pts) {
    b.xmin = std::min(b.xmin, p.x);
    b.xmax = std::max(b.xmax, p.x);
    b.ymin = std::min(b.ymin, p.y);
    b.ymax = std::max(b.ymax, p.y);
  }
  return b;
}

class RadialScale {
 public:
  RadialScale(const std::vector<Vec2>& pts, bool log_radial) : log_(log_radial) {
    rmin_ = rmax_ = pts[0].norm();
    for (const auto& p : pts) {
      rmin_ = std::min(rmin_, p.norm());
      rmax_ = std::max(rmax_, p.norm());
    }
  }
  Vec2 operator()(Vec2 p) const {
    if (!log_) return p;
    const double r = p.norm();
    const double scaled = 0.25 + std::log1p(r / rmin_) / std::log1p(rmax_ / rmin_);
    return (scaled / r) * p;
  }

 private:
  bool log_;
  double rmin_, rmax_;
};

}  // namespace

std::string render_svg_text(const PwlMap2& g, const SvgOptions& opts) {
  if (opts.samples < 64) throw Error(ErrorKind::InvalidArgument, "need at least 64 samples");
  const std::vector<Vec2> raw = kernels::sample_image_curve(g, opts.samples);
  const RadialScale scale(raw, opts.log_radial);
  std::vector<Vec2> pts(raw.size());
  std::transform(raw.begin(), raw.end(), pts.begin(), scale);

  std::vector<Vec2> marks;
  for (const auto& p : g.pieces()) marks.push_back(scale(p.matrix * p.sector.start().vec()));

  const Box b = bounds(pts);
  const double margin = 0.05 * std::max(b.xmax - b.xmin, b.ymax - b.ymin);
  const double vx = b.xmin - margin;
  const double vy = -b.ymax - margin;
  const double vw = b.xmax - b.xmin + 2 * margin;
  const double vh = b.ymax - b.ymin + 2 * margin;
  const double extent = std::max(vw, vh);
  const double px_w = 640.0;
  const double px_h = std::max(64.0, std::round(px_w * vh / vw));

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  s += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{:.0f}\" height=\"{:.0f}\" "
      "viewBox=\"{:.9g} {:.9g} {:.9g} {:.9g}\">\n",
      px_w, px_h, vx, vy, vw, vh);
  s += fmt::format("  <title>image of the unit circle{}</title>\n",
                   opts.log_radial ? " (log-rescaled radius)" : "");
  s += fmt::format("  <rect x=\"{:.9g}\" y=\"{:.9g}\" width=\"{:.9g}\" height=\"{:.9g}\" fill=\"white\"/>\n",
                   vx, vy, vw, vh);
  s += "  <g transform=\"scale(1,-1)\">\n";
  s += fmt::format(
      "    <line x1=\"{:.9g}\" y1=\"0\" x2=\"{:.9g}\" y2=\"0\" stroke=\"#888\" stroke-width=\"1\" "
      "vector-effect=\"non-scaling-stroke\"/>\n",
      b.xmin - margin, b.xmax + margin);
  s += fmt::format(
      "    <line x1=\"0\" y1=\"{:.9g}\" x2=\"0\" y2=\"{:.9g}\" stroke=\"#888\" stroke-width=\"1\" "
      "vector-effect=\"non-scaling-stroke\"/>\n",
      b.ymin - margin, b.ymax + margin);
  s += "    <polyline id=\"image-curve\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" "
       "vector-effect=\"non-scaling-stroke\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i)
    s += fmt::format("{}{:.9g},{:.9g}", i ? " " : "", pts[i].x, pts[i].y);
  s += fmt::format("{}{:.9g},{:.9g}\"/>\n", " ", pts[0].x, pts[0].y);
  for (const auto& m : marks)
    s += fmt::format("    <circle cx=\"{:.9g}\" cy=\"{:.9g}\" r=\"{:.9g}\" fill=\"#c00\"/>\n", m.x,
                     m.y, 0.008 * extent);
  s += "  </g>\n";
  for (std::size_t i = 0; i < marks.size(); ++i)
    s += fmt::format(
        "  <text x=\"{:.9g}\" y=\"{:.9g}\" font-size=\"{:.9g}\" font-family=\"serif\">G(P{})</text>\n",
        marks[i].x + 0.012 * extent, -marks[i].y - 0.012 * extent, 0.035 * extent, i + 1);
  s += "</svg>\n";
  return s;
}

void render_svg(const PwlMap2& g, const std::filesystem::path& out, bool log_radial,
                std::size_t samples) {
  const std::string text = render_svg_text(g, {log_radial, samples});
  std::ofstream f(out);
  if (!f) throw Error(ErrorKind::IoError, "cannot write " + out.string());
  f << text;
  if (!f) throw Error(ErrorKind::IoError, "failed writing " + out.string());
}

std::vector<Vec2> read_svg_polyline(std::string_view svg) {
  const auto tag = svg.find("id=\"image-curve\"");
  if (tag == std::string_view::npos) throw Error(ErrorKind::ParseError, "no image-curve polyline");
  const auto open = svg.find("points=\"", tag);
  if (open == std::string_view::npos) throw Error(ErrorKind::ParseError, "polyline has no points");
  const auto first = open + 8;
  const auto close = svg.find('"', first);
  const std::string_view body = svg.substr(first, close - first);

  std::vector<double> nums;
  const char* p = body.data();
  const char* end = body.data() + body.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == ',')) ++p;
    if (p >= end) break;
    double v = 0.0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc{}) throw Error(ErrorKind::ParseError, "bad polyline coordinate");
    nums.push_back(v);
    p = next;
  }
  if (nums.size() % 2 != 0) throw Error(ErrorKind::ParseError, "odd coordinate count");
  std::vector<Vec2> pts;
  for (std::size_t i = 0; i < nums.size(); i += 2) pts.push_back({nums[i], nums[i + 1]});
  // The closing point repeats the first.
  if (pts.size() > 1 && pts.front() == pts.back()) pts.pop_back();
  return pts;
}

}  // namespace pwl
