#include "pwl/cli.hpp"

#include <filesystem>
#include <fstream>
#include <string>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "pwl/builtin_examples.hpp"
#include "pwl/errors.hpp"
#include "pwl/halfspace.hpp"
#include "pwl/mapfile.hpp"
#include "pwl/nonsmooth.hpp"
#include "pwl/random_map.hpp"
#include "pwl/report.hpp"
#include "pwl/svg.hpp"

namespace pwl::cli {
namespace {

namespace fs = std::filesystem;

int analyze(const MapFile& mf, bool json, std::ostream& out) {
  out << report(mf.map, json, mf.name);
  return decide(mf.map).tag == VerdictTag::Invertible ? kExitOk : kExitNotInvertible;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::IoError, "cannot write " + path.string());
  f << text;
}

std::string vec_text(const Eigen::VectorXd& v) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += fmt::format("{}{:.12g}", i ? ", " : "", v(i));
  return s + "]";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invertibility, degree and inverses of piecewise linear maps of the plane", "pwlinv"};
  app.require_subcommand(1);

  std::string file;
  std::string out_path;
  bool json = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "decide invertibility of a map file");
  analyze_cmd->add_option("file", file, "map file")->required();
  analyze_cmd->add_flag("--json", json, "structured output");

  auto* invert_cmd = app.add_subcommand("invert", "write the inverse of an invertible map");
  invert_cmd->add_option("file", file, "map file")->required();
  invert_cmd->add_option("--out", out_path, "output map file (default: stdout)");

  bool log_radial = false;
  std::size_t samples = 2048;
  auto* plot_cmd = app.add_subcommand("plot", "render G(S^1) as SVG");
  plot_cmd->add_option("file", file, "map file")->required();
  plot_cmd->add_option("--out", out_path, "SVG output path")->required();
  plot_cmd->add_flag("--log-radial", log_radial, "logarithmically rescale the radius");
  plot_cmd->add_option("--samples", samples, "samples of the unit circle")
      ->check(CLI::Range(std::size_t{64}, std::size_t{1} << 24));

  std::string example_name;
  std::string example_dir = ".";
  auto* example_cmd = app.add_subcommand("example", "materialize a builtin map file and analyze it");
  example_cmd->add_option("name", example_name, "pie5, pie4-nonconvex or clarke4")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(builtin_example_names().begin(),
                                                     builtin_example_names().end())));
  example_cmd->add_option("--dir", example_dir, "directory for the map file");
  example_cmd->add_flag("--json", json, "structured output");

  int cones = 0;
  std::uint64_t seed = 0;
  bool force_invertible = false;
  auto* random_cmd = app.add_subcommand("random", "print a random continuous nondegenerate map");
  random_cmd->add_option("--cones", cones, "number of cones")->required()->check(CLI::PositiveNumber);
  random_cmd->add_option("--seed", seed, "generator seed")->required();
  random_cmd->add_flag("--force-invertible", force_invertible, "generate a degree-1 map");

  int resolution = 100;
  auto* clarke_cmd = app.add_subcommand("clarke", "minimum determinant over the Clarke hull");
  clarke_cmd->add_option("file", file, "map file")->required();
  clarke_cmd->add_option("--resolution", resolution, "simplex grid resolution")
      ->check(CLI::Range(2, 100000));

  int dim = 0;
  auto* halfspace_cmd = app.add_subcommand("halfspace", "random two-piece map glued on a hyperplane");
  halfspace_cmd->add_option("--dim", dim, "dimension k")->required()->check(CLI::Range(1, 64));
  halfspace_cmd->add_option("--seed", seed, "generator seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "pwlinv: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*analyze_cmd) return analyze(load_map_file(file), json, out);

    if (*example_cmd) {
      const fs::path path = fs::path(example_dir) / (example_name + ".json");
      write_text(path, std::string(builtin_example_json(example_name)));
      return analyze(load_map_file(path), json, out);
    }

    if (*invert_cmd) {
      const MapFile mf = load_map_file(file);
      const Verdict v = decide(mf.map);
      if (v.tag != VerdictTag::Invertible) {
        err << "pwlinv: map is " << to_string(v.tag) << "; no inverse\n";
        return kExitNotInvertible;
      }
      const std::string text = write_map(*v.inverse, mf.name.empty() ? "inverse" : mf.name + "-inverse");
      if (out_path.empty())
        out << text;
      else
        write_text(out_path, text);
      return kExitOk;
    }

    if (*plot_cmd) {
      render_svg(load_map(file), out_path, log_radial, samples);
      return kExitOk;
    }

    if (*random_cmd) {
      const PwlMap2 g = random_map(cones, seed, force_invertible);
      out << write_map(g, fmt::format("random-n{}-seed{}", cones, seed));
      return kExitOk;
    }

    if (*clarke_cmd) {
      const PwlMap2 g = load_map(file);
      std::vector<Mat2> members;
      for (const auto& p : g.pieces()) members.push_back(p.matrix);
      const HullMinimum h = clarke_hull_min_det(members, resolution);
      out << fmt::format("clarke_min_det: {:.17g}\n", h.min_det);
      out << "weights:";
      for (double w : h.weights) out << fmt::format(" {:.12g}", w);
      out << "\n";
      out << (h.min_det < 0.0 ? "certificate: a singular-or-worse matrix lies in the Clarke hull\n"
                              : "no negative determinant found in the Clarke hull\n");
      return kExitOk;
    }

    if (*halfspace_cmd) {
      const HalfSpaceMap m = random_halfspace(dim, seed);
      const HalfSpaceVerdict v = halfspace_decide(m);
      out << fmt::format("k:            {}\n", m.dim());
      out << fmt::format("det(A):       {:.12g}\n", m.a().det());
      out << fmt::format("det(B):       {:.12g}\n", m.b().det());
      out << "normal:       " << vec_text(m.normal()) << "\n";
      if (!m.a().is_singular())
        out << fmt::format("gamma_k:      {:.12g}\n", gamma_coefficients(m).gamma_k);
      out << "verdict:      " << to_string(v.tag) << "\n";
      if (v.degree) out << "degree:       " << *v.degree << "\n";
      if (v.witness) {
        out << "witness x1:   " << vec_text(v.witness->x1) << "\n";
        out << "witness x2:   " << vec_text(v.witness->x2) << "\n";
        out << "image:        " << vec_text(v.witness->image) << "\n";
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "pwlinv: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitUsage;
}

}  // namespace pwl::cli
