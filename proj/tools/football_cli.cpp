// Command-line front end: evaluate immersion points, export meshes, run the
// verification suite, list presets.  Exit codes: 0 success, 1 failed
// verification or I/O failure, 2 usage errors.

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include "CLI11.hpp"

#include "football/geometry.hpp"
#include "football/mesh.hpp"
#include "football/presets.hpp"
#include "football/verify.hpp"

namespace {

using football::BranchParams;
using football::FootballParams;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// Raw parameter flags shared by the subcommands; resolution decides whether
// they describe a football, a branched cover, or a preset.
struct ParamFlags {
  std::optional<double> B;
  std::optional<int> lambda;
  std::optional<double> alpha;
  std::optional<double> b;
  bool branched = false;
  std::string preset;

  void attach(CLI::App& cmd, bool with_branched) {
    cmd.add_option("--B", B, "profile amplitude in (0, 1)");
    cmd.add_option("--lambda", lambda, "winding number (positive integer)");
    cmd.add_option("--alpha", alpha, "cone-angle factor; with --B requires alpha/B integral");
    cmd.add_option("--preset", preset, "bundled parameter set (ex5_1 .. ex5_6)");
    if (with_branched) {
      cmd.add_option("--b", b, "translation constant of the branched cover");
      cmd.add_flag("--branched", branched, "interpret --alpha/--b as a branched cover");
    }
  }

  bool any_direct() const { return B || lambda || alpha || b || branched; }
};

std::variant<FootballParams, BranchParams> resolve(const ParamFlags& f, bool allow_branched) {
  if (!f.preset.empty()) {
    if (f.any_direct())
      throw UsageError("--preset cannot be combined with direct parameter flags");
    const football::Preset* pr = football::find_preset(f.preset);
    if (pr == nullptr) throw UsageError("unknown preset '" + f.preset + "'");
    if (!allow_branched && std::holds_alternative<BranchParams>(pr->params))
      throw UsageError("preset '" + f.preset + "' is a branched cover, not supported here");
    return pr->params;
  }
  if (f.branched) {
    if (f.B || f.lambda) throw UsageError("--branched excludes --B/--lambda");
    if (!f.alpha || !f.b) throw UsageError("--branched requires --alpha and --b");
    const double a = *f.alpha;
    if (!(std::fabs(a - std::round(a)) < 1e-9))
      throw UsageError("branched --alpha must be an integer");
    return BranchParams(static_cast<int>(std::llround(a)), *f.b);
  }
  if (f.b) throw UsageError("--b requires --branched");
  if (!f.B) throw UsageError("need --B with --lambda or --alpha, or --preset");
  if (f.lambda && f.alpha) throw UsageError("give either --lambda or --alpha, not both");
  if (f.lambda) return FootballParams(*f.B, *f.lambda);
  if (f.alpha) return FootballParams::from_alpha(*f.alpha, *f.B);
  throw UsageError("need --lambda or --alpha alongside --B");
}

int run_point(const ParamFlags& flags, const std::optional<double>& u,
              const std::optional<double>& r, double theta) {
  const auto params = resolve(flags, false);
  const auto& p = std::get<FootballParams>(params);
  if (u.has_value() == r.has_value())
    throw UsageError("give exactly one of --u or --r");
  const football::Point3 x = u ? immerse_geodesic(p, football::GeodesicCoord(*u, theta))
                               : immerse(p, football::ConformalCoord(*r, theta));
  std::cout << fmt(x.x) << ',' << fmt(x.y) << ',' << fmt(x.z) << '\n';
  return 0;
}

int run_mesh(const ParamFlags& flags, const football::MeshConfig& cfg, const std::string& out_path,
             const std::string& format) {
  const auto params = resolve(flags, true);
  const football::Mesh mesh = std::visit(
      [&cfg](const auto& p) -> football::Mesh {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, FootballParams>)
          return tessellate(p, cfg);
        else
          return tessellate_branched(p, cfg);
      },
      params);

  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return 1;
  }
  if (format == "ply")
    write_ply(mesh, out);
  else
    write_obj(mesh, out);
  out.flush();
  if (!out) {
    std::cerr << "error: write to '" << out_path << "' failed\n";
    return 1;
  }

  const football::MeshStats st = mesh_stats(mesh);
  std::cout << "vertices " << st.vertex_count << ", triangles " << st.triangle_count << ", edges "
            << st.edge_count << ", euler " << st.euler_characteristic
            << (st.watertight ? ", watertight" : ", open") << '\n';
  if (!st.all_finite) std::cerr << "warning: mesh contains non-finite vertices\n";
  return 0;
}

int run_verify(const ParamFlags& flags, double h, double eps, const std::string& json_path) {
  const auto params = resolve(flags, true);
  football::GridSpec grid;
  grid.h = h;
  const football::VerifyReport report =
      std::visit([&](const auto& p) { return verify_all(p, grid, eps); }, params);

  for (const football::CheckResult& c : report.checks)
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": measured=" << fmt(c.measured)
              << " expected=" << fmt(c.expected) << " tolerance=" << fmt(c.tolerance) << '\n';
  std::cout << (report.all_pass ? "all checks passed" : "some checks FAILED") << '\n';

  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open '" << json_path << "' for writing\n";
      return 1;
    }
    out << report_to_json(report);
    if (!out) {
      std::cerr << "error: write to '" << json_path << "' failed\n";
      return 1;
    }
  }
  return report.all_pass ? 0 : 1;
}

int run_preset_list() {
  for (const football::Preset& pr : football::presets()) {
    std::cout << pr.id << "  ";
    std::visit(
        [](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, FootballParams>)
            std::cout << "football  B=" << fmt(p.amplitude()) << " lambda=" << p.winding()
                      << " alpha=" << fmt(p.alpha());
          else
            std::cout << "branched  alpha=" << p.alpha << " b=" << fmt(p.b);
        },
        pr.params);
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isometric immersions of two-cone spherical metrics"};
  app.require_subcommand(1);

  CLI::App* point = app.add_subcommand("point", "evaluate one immersion point, CSV x1,x2,x3");
  ParamFlags point_flags;
  point_flags.attach(*point, false);
  std::optional<double> point_u, point_r;
  double point_theta = 0.0;
  point->add_option("--u", point_u, "geodesic coordinate in [0, pi]");
  point->add_option("--r", point_r, "conformal radial coordinate, r >= 0");
  point->add_option("--theta", point_theta, "angular coordinate")->required();

  CLI::App* mesh = app.add_subcommand("mesh", "tessellate and write OBJ/PLY");
  ParamFlags mesh_flags;
  mesh_flags.attach(*mesh, true);
  football::MeshConfig cfg;
  bool mesh_open = false;
  std::string mesh_out, mesh_format = "obj";
  mesh->add_option("--nu", cfg.nu, "rings along u")->required();
  mesh->add_option("--ntheta", cfg.ntheta, "samples around theta")->required();
  mesh->add_flag("--open", mesh_open, "leave the poles uncapped");
  mesh->add_option("--r-max", cfg.r_max, "branched chart cutoff (> 1)");
  mesh->add_option("--out", mesh_out, "output path")->required();
  mesh->add_option("--format", mesh_format, "obj or ply")
      ->check(CLI::IsMember({"obj", "ply"}));

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->set_help_flag("--help", "print help");  // frees -h for the step option below
  ParamFlags verify_flags;
  verify_flags.attach(*verify, true);
  double verify_h = 1e-5, verify_eps = 1e-2;
  std::string verify_json;
  verify->add_option("--h", verify_h, "finite-difference step");
  verify->add_option("--eps", verify_eps, "cone-angle base epsilon");
  verify->add_option("--json", verify_json, "write the JSON report to this path");

  CLI::App* preset = app.add_subcommand("preset", "preset utilities");
  bool preset_list = false;
  preset->add_flag("--list", preset_list, "list the bundled presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (point->parsed()) return run_point(point_flags, point_u, point_r, point_theta);
    if (mesh->parsed()) {
      cfg.close_poles = !mesh_open;
      return run_mesh(mesh_flags, cfg, mesh_out, mesh_format);
    }
    if (verify->parsed()) return run_verify(verify_flags, verify_h, verify_eps, verify_json);
    if (preset->parsed()) {
      if (!preset_list) throw UsageError("preset: nothing to do (try --list)");
      return run_preset_list();
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
