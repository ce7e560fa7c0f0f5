#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coneval/errors.hpp"
#include "coneval/harness.hpp"
#include "coneval/json_io.hpp"
#include "coneval/svg.hpp"

using namespace coneval;
using nlohmann::json;

namespace {

json load_json_arg(const std::string& arg) {
  std::string text;
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) {
    text = arg;  // inline JSON
  } else {
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot open input file: " + arg);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw UsageError("malformed JSON input");
  return j;
}

Cone load_cone(const std::string& arg) {
  return cone_from_json(load_json_arg(arg));
}

// Comma-separated exact rationals, e.g. "2,1" or "1,1/2".
QVector parse_vector_arg(const std::string& arg, int dim) {
  std::vector<Rational> vals;
  std::string cur;
  for (char ch : arg) {
    if (ch == ',') {
      vals.push_back(Rational::parse(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  vals.push_back(Rational::parse(cur));
  if (static_cast<int>(vals.size()) != dim) {
    throw UsageError("expected " + std::to_string(dim) +
                     " comma-separated coordinates, got " +
                     std::to_string(vals.size()));
  }
  QVector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = vals[static_cast<std::size_t>(i)];
  return v;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write file: " + path);
  out << content;
  if (!out) throw UsageError("failed writing file: " + path);
}

Palette load_palette(const std::string& path) {
  if (path.empty()) return Palette{};
  return palette_from_json(load_json_arg(path));
}

std::uint64_t seed_from_env_or(std::uint64_t fallback) {
  const char* env = std::getenv("CONEVAL_SEED");
  if (env == nullptr || env[0] == '\0') return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0') {
    throw UsageError("CONEVAL_SEED must be an unsigned integer");
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "coneval: exact rational computations with polyhedral cones, their "
      "face lattices, and cone valuations"};
  app.require_subcommand(1);

  std::uint64_t default_seed = 2026;
  try {
    default_seed = seed_from_env_or(default_seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  auto* cmd_faces =
      app.add_subcommand("faces", "Print the face lattice of a cone as JSON");
  std::string faces_cone;
  cmd_faces->add_option("cone", faces_cone, "Cone JSON (path or inline)")
      ->required();

  auto* cmd_dual = app.add_subcommand("dual", "Print the dual cone as JSON");
  std::string dual_cone;
  cmd_dual->add_option("cone", dual_cone, "Cone JSON (path or inline)")
      ->required();

  auto* cmd_angle = app.add_subcommand(
      "angle", "Print the cone of directions into the cone at a face");
  std::string angle_cone_arg;
  int angle_face = 0;
  cmd_angle->add_option("cone", angle_cone_arg, "Cone JSON (path or inline)")
      ->required();
  cmd_angle->add_option("--face", angle_face, "Face index")->required();

  auto* cmd_eval = app.add_subcommand(
      "eval", "Evaluate a cone valuation at a rational point");
  std::string eval_cone, eval_y, eval_x;
  std::string eval_variant = "gamma";
  cmd_eval->add_option("cone", eval_cone, "Cone JSON (path or inline)")
      ->required();
  cmd_eval->add_option("--y", eval_y, "Parameter point (comma-separated)")
      ->required();
  cmd_eval->add_option("--x", eval_x, "Evaluation point (comma-separated)")
      ->required();
  cmd_eval
      ->add_option("--variant", eval_variant,
                   "Valuation variant: gamma or gamma-prime")
      ->check(CLI::IsMember({"gamma", "gamma-prime"}));

  auto* cmd_region = app.add_subcommand(
      "region",
      "Decompose the support of the valuation into cells; optionally render "
      "an SVG in dimension 2");
  std::string region_cone, region_y, region_svg, region_palette;
  std::string region_box = "4";
  bool region_ball = false;
  cmd_region->add_option("cone", region_cone, "Cone JSON (path or inline)")
      ->required();
  cmd_region->add_option("--y", region_y, "Parameter point (comma-separated)")
      ->required();
  cmd_region->add_option("--svg", region_svg, "Write an SVG to this path");
  cmd_region->add_option("--box", region_box,
                         "Drawing window: \"m\" or \"xmin,xmax,ymin,ymax\"");
  cmd_region->add_flag("--ball", region_ball,
                       "Overlay the circle bounding the support");
  cmd_region->add_option("--palette", region_palette,
                         "Palette JSON (path or inline)");

  auto* cmd_check = app.add_subcommand(
      "check", "Run identity-checking suites over random and fixed cones");
  std::string check_suite = "all";
  std::string check_report;
  std::string check_fault = "none";
  std::uint64_t check_seed = default_seed;
  int check_trials = 100;
  int check_dim_max = 4;
  cmd_check->add_option("--suite", check_suite,
                        "Suite name, or \"all\" for every suite");
  cmd_check->add_option("--seed", check_seed, "Master random seed");
  cmd_check->add_option("--trials", check_trials, "Random trials per suite")
      ->check(CLI::NonNegativeNumber);
  cmd_check
      ->add_option("--dim-max", check_dim_max,
                   "Largest ambient dimension to sample")
      ->check(CLI::Range(1, 5));
  cmd_check->add_option("--report", check_report,
                        "Write the full JSON report to this path");
  cmd_check
      ->add_option("--inject-fault", check_fault,
                   "Self-test: plant a known evaluator bug and confirm the "
                   "suites catch it")
      ->check(CLI::IsMember({"none", "flip-face-sign", "drop-cut-slice"}));

  auto* cmd_figures = app.add_subcommand(
      "figures",
      "Render the two reference support-region figures as SVG files");
  std::string fig_dir = ".";
  std::string fig_box = "4";
  std::string fig_palette;
  cmd_figures->add_option("--out-dir", fig_dir, "Output directory");
  cmd_figures->add_option("--box", fig_box,
                          "Drawing window: \"m\" or \"xmin,xmax,ymin,ymax\"");
  cmd_figures->add_option("--palette", fig_palette,
                          "Palette JSON (path or inline)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_faces->parsed()) {
      Cone c = load_cone(faces_cone);
      std::cout << faces_to_json(c).dump(2) << "\n";
    } else if (cmd_dual->parsed()) {
      Cone c = load_cone(dual_cone);
      std::cout << cone_to_json(c.dual()).dump(2) << "\n";
    } else if (cmd_angle->parsed()) {
      Cone c = load_cone(angle_cone_arg);
      if (angle_face < 0 || angle_face >= c.face_count()) {
        throw UsageError("face index out of range: have " +
                         std::to_string(c.face_count()) + " faces");
      }
      std::cout << cone_to_json(c.angle_cone(angle_face)).dump(2) << "\n";
    } else if (cmd_eval->parsed()) {
      Cone c = load_cone(eval_cone);
      QVector y = parse_vector_arg(eval_y, c.ambient_dim());
      QVector x = parse_vector_arg(eval_x, c.ambient_dim());
      Rational v = eval_variant == "gamma" ? gamma_y_eval(c, y, x)
                                           : gamma_prime_y_eval(c, y, x);
      std::cout << v.str() << "\n";
    } else if (cmd_region->parsed()) {
      Cone c = load_cone(region_cone);
      QVector y = parse_vector_arg(region_y, c.ambient_dim());
      if (!region_svg.empty() && c.ambient_dim() != 2) {
        throw UsageError("SVG rendering requires ambient dimension 2");
      }
      CellDecomposition dec = gamma_region(c, y);
      std::cout << decomposition_to_json(dec).dump(2) << "\n";
      if (!region_svg.empty()) {
        write_file(region_svg,
                   render_region_svg(c, y, dec, parse_box(region_box),
                                     load_palette(region_palette),
                                     region_ball));
      }
    } else if (cmd_check->parsed()) {
      GeneratorProfile profile;
      profile.dim = check_dim_max;
      profile.seed = check_seed;
      FaultInjection faults;
      faults.flip_face_sign = check_fault == "flip-face-sign";
      faults.drop_cut_slice = check_fault == "drop-cut-slice";
      CheckReport r = run_suite(check_suite, profile, check_trials, faults);
      json out = report_to_json(r);
      if (!check_report.empty()) write_file(check_report, out.dump(2) + "\n");
      std::cout << r.suite << ": " << (r.passed() ? "pass" : "FAIL") << " ("
                << r.trials << " trials, " << r.failures.size()
                << " failures)\n";
      if (!r.passed()) {
        std::cout << out["failures"].dump(2) << "\n";
        return 1;
      }
    } else if (cmd_figures->parsed()) {
      Palette palette = load_palette(fig_palette);
      Box box = parse_box(fig_box);
      struct FigureConfig {
        const char* file;
        Cone cone;
        QVector y;
      };
      const FigureConfig figures[] = {
          {"figure-a.svg",
           Cone::from_vrep(2,
                           {QVector{Rational(1), Rational(0)},
                            QVector{Rational(1), Rational(1)}},
                           {}),
           QVector{Rational(3, 2), Rational(1, 2)}},
          {"figure-b.svg",
           Cone::from_vrep(2,
                           {QVector{Rational(1), Rational(0)},
                            QVector{Rational(-2), Rational(3)}},
                           {}),
           QVector{Rational(1, 4), Rational(3, 4)}},
      };
      for (const FigureConfig& fig : figures) {
        CellDecomposition dec = gamma_region(fig.cone, fig.y);
        std::string path = fig_dir + "/" + fig.file;
        write_file(path, render_region_svg(fig.cone, fig.y, dec, box, palette,
                                           false));
        std::cout << path << "\n";
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
