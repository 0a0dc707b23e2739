// Command-line surface: reproduces the photon-number distributions, window
// searches, reachability table, equal-superposition solutions, fidelity scans
// and the closed-form-vs-oracle verification sweep as CSV/JSON/SVG artifacts.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsc/errors.hpp"
#include "qsc/pnd.hpp"
#include "qsc/scissors.hpp"
#include "qsc/states.hpp"

using nlohmann::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct AlphaGrid {
  double lo = 0.0, hi = 0.0, step = 0.0;

  std::vector<double> points() const {
    std::vector<double> out;
    for (double a = lo; a <= hi + step / 2; a += step) out.push_back(a);
    return out;
  }
};

AlphaGrid parse_grid(const std::string& text) {
  AlphaGrid g;
  char colon1 = 0, colon2 = 0;
  std::istringstream in(text);
  if (!(in >> g.lo >> colon1 >> g.hi >> colon2 >> g.step) || colon1 != ':' ||
      colon2 != ':' || g.step <= 0.0 || g.hi < g.lo)
    throw CLI::ValidationError("--alpha-grid", "expected lo:hi:step with step > 0");
  return g;
}

// Write-then-rename so a failed run never leaves a truncated artifact.
void emit(const std::string& output_path, const std::string& content) {
  if (output_path.empty()) {
    std::cout << content;
    return;
  }
  std::filesystem::path target(output_path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << content;
  }
  std::filesystem::rename(tmp, target);
}

// Minimal deterministic SVG: one data series as bars (impulses) or a line.
std::string svg_series(const std::vector<std::pair<double, double>>& points,
                       const std::string& x_label, const std::string& y_label,
                       bool bars) {
  constexpr double W = 640, H = 480, ml = 60, mr = 20, mt = 20, mb = 45;
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (!points.empty()) {
    xmin = xmax = points[0].first;
    ymax = 0;
    for (const auto& [x, y] : points) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymax = std::max(ymax, y);
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == 0) ymax = 1;
  }
  auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (W - ml - mr); };
  auto py = [&](double y) { return H - mb - (y - ymin) / (ymax - ymin) * (H - mt - mb); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
         "viewBox=\"0 0 640 480\">\n";
  out << "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
  out << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr
      << "\" y2=\"" << H - mb << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
      << H - mb << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << (ml + W - mr) / 2 << "\" y=\"" << H - 10
      << "\" text-anchor=\"middle\" font-size=\"14\">" << x_label << "</text>\n";
  out << "<text x=\"15\" y=\"" << (mt + H - mb) / 2
      << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 15 "
      << (mt + H - mb) / 2 << ")\">" << y_label << "</text>\n";
  out << "<text x=\"" << ml - 5 << "\" y=\"" << H - mb + 15
      << "\" text-anchor=\"end\" font-size=\"11\">" << fmt(xmin) << "</text>\n";
  out << "<text x=\"" << W - mr << "\" y=\"" << H - mb + 15
      << "\" text-anchor=\"end\" font-size=\"11\">" << fmt(xmax) << "</text>\n";
  out << "<text x=\"" << ml - 6 << "\" y=\"" << mt + 4
      << "\" text-anchor=\"end\" font-size=\"11\">" << fmt(ymax) << "</text>\n";
  if (bars) {
    for (const auto& [x, y] : points)
      out << "<line x1=\"" << fmt(px(x)) << "\" y1=\"" << fmt(py(0)) << "\" x2=\""
          << fmt(px(x)) << "\" y2=\"" << fmt(py(y))
          << "\" stroke=\"steelblue\" stroke-width=\"3\"/>\n";
  } else if (!points.empty()) {
    out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" "
           "points=\"";
    for (const auto& [x, y] : points) out << fmt(px(x)) << "," << fmt(py(y)) << " ";
    out << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string series_artifact(const std::vector<std::pair<double, double>>& points,
                            const std::string& format, const std::string& x_col,
                            const std::string& y_col, bool bars) {
  if (format == "csv") {
    std::ostringstream out;
    out << x_col << "," << y_col << "\n";
    for (const auto& [x, y] : points) out << fmt(x) << "," << fmt(y) << "\n";
    return out.str();
  }
  if (format == "json") {
    json rows = json::array();
    for (const auto& [x, y] : points) rows.push_back({{x_col, x}, {y_col, y}});
    return rows.dump(2) + "\n";
  }
  return svg_series(points, x_col, y_col, bars);
}

std::vector<std::pair<double, double>> dist_points(
    const qsc::PhotonNumberDistribution& dist) {
  std::vector<std::pair<double, double>> points;
  for (unsigned n = 0; n <= dist.n_max; ++n)
    points.emplace_back(static_cast<double>(n), dist.probs[n]);
  return points;
}

json window_json(const std::optional<qsc::ParameterWindow>& window) {
  if (!window) return nullptr;
  return {{"target_n", window->target_n},
          {"alpha_lo", window->alpha_lo},
          {"alpha_hi", window->alpha_hi},
          {"delta_alpha", window->width()},
          {"threshold", window->threshold},
          {"N", window->spec.order},
          {"r", window->spec.photons_added}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Photon-number distributions and quantum-scissor planning for "
               "circular and elliptic coherent-state superpositions"};
  app.require_subcommand(1);

  std::string output_path;
  std::string format = "csv";
  app.add_option("--output", output_path, "Output file (default: stdout)");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "svg"}));

  unsigned N = 1, r = 0, S = 0, S_max = 3, target = 0;
  unsigned n_fock_max = 16, N_max = 10, N_min = 2, r_max = 3, multiple = 1;
  double alpha = 0.0, a_axis = 0.0, b_axis = 0.0;
  double threshold = 0.99, alpha_max = -1.0, grid_step = 0.01, aspect = 5.0 / 3.2;
  int n_max_opt = -1;
  std::string alpha_grid = "0.5:6:0.5";
  std::string source = "closed";

  auto* pnd = app.add_subcommand("pnd", "Photon-number distribution of a circular state");
  pnd->add_option("--N", N, "Superposition order")->required()->check(CLI::PositiveNumber);
  pnd->add_option("--alpha", alpha, "Coherent amplitude |alpha|")
      ->required()
      ->check(CLI::NonNegativeNumber);
  pnd->add_option("--r", r, "Photons added");
  pnd->add_option("--n-max", n_max_opt, "Truncation level (default: automatic)");
  pnd->add_option("--source", source, "Evaluation route")
      ->check(CLI::IsMember({"closed", "intermediate", "oracle"}));

  auto* ellipse = app.add_subcommand("ellipse", "Photon-number distribution of an elliptic state");
  ellipse->add_option("--a", a_axis, "Semi-major axis")->required()->check(CLI::PositiveNumber);
  ellipse->add_option("--b", b_axis, "Semi-minor axis")->required()->check(CLI::PositiveNumber);
  ellipse->add_option("--N", N, "Superposition order")->required()->check(CLI::PositiveNumber);
  ellipse->add_option("--n-max", n_max_opt, "Truncation level (default: automatic)");

  auto* window_cmd = app.add_subcommand("window", "Alpha window for a target Fock state");
  window_cmd->add_option("--N", N, "Superposition order")->required()->check(CLI::PositiveNumber);
  window_cmd->add_option("--r", r, "Photons added");
  window_cmd->add_option("--target", target, "Target Fock state")->required();
  window_cmd->add_option("--threshold", threshold, "Probability threshold");
  window_cmd->add_option("--alpha-max", alpha_max, "Scan limit (default: sqrt(n)+8)");
  window_cmd->add_option("--grid-step", grid_step, "Coarse scan step")->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("table", "Fock-state reachability table");
  table->add_option("--n-fock-max", n_fock_max, "Largest Fock state");
  table->add_option("--N-max", N_max, "Largest superposition order");
  table->add_option("--r-max", r_max, "Largest photon addition");
  table->add_option("--threshold", threshold, "Probability threshold");
  table->add_option("--aspect", aspect, "Elliptic aspect ratio a/b");

  auto* equal = app.add_subcommand("equal-superposition",
                                   "Amplitudes giving 50-50 two-Fock superpositions");
  equal->add_option("--N", N, "Superposition order")->required()->check(CLI::PositiveNumber);
  equal->add_option("--S-max", S_max, "Largest envelope index S");

  auto* fidelity = app.add_subcommand("fidelity-scan",
                                      "Overlap with the equal two-Fock superposition");
  fidelity->add_option("--N", N, "Superposition order")->required()->check(CLI::PositiveNumber);
  fidelity->add_option("--S", S, "Envelope index S");
  fidelity->add_option("--alpha-grid", alpha_grid, "Scan grid lo:hi:step");

  auto* sweep = app.add_subcommand("sweep", "Window width versus order for n = kN + r");
  sweep->add_option("--r", r, "Photons added");
  sweep->add_option("--multiple", multiple, "k in target n = kN + r")
      ->check(CLI::Range(1u, 3u));
  sweep->add_option("--N-min", N_min, "First order")->check(CLI::PositiveNumber);
  sweep->add_option("--N-max", N_max, "Last order")->check(CLI::PositiveNumber);
  sweep->add_option("--threshold", threshold, "Probability threshold");

  auto* verify = app.add_subcommand("verify", "Closed forms versus the oracle expansion");
  verify->add_option("--N-max", N_max, "Largest superposition order");
  verify->add_option("--r-max", r_max, "Largest photon addition");
  verify->add_option("--alpha-grid", alpha_grid, "Amplitude grid lo:hi:step");

  // let --output/--format appear after the subcommand name as well
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);

    if (*pnd) {
      qsc::CircularStateSpec spec{alpha, N, r};
      unsigned n_max = n_max_opt >= 0 ? static_cast<unsigned>(n_max_opt)
                                      : qsc::default_n_max(spec);
      qsc::PhotonNumberDistribution dist;
      if (source == "oracle")
        dist = qsc::pnd_from_expansion(qsc::fock_expansion(spec, n_max));
      else if (source == "intermediate")
        dist = qsc::pnd_gcs_intermediate(spec, n_max);
      else
        dist = r == 0 ? qsc::pnd_gcs_closed(spec, n_max)
                      : qsc::pnd_gpacs_closed(spec, n_max);
      emit(output_path, series_artifact(dist_points(dist), format, "n", "P_n", true));
    } else if (*ellipse) {
      if (b_axis > a_axis) throw CLI::ValidationError("--b", "requires b <= a");
      qsc::EllipticStateSpec spec{a_axis, b_axis, N, 0};
      unsigned n_max = n_max_opt >= 0 ? static_cast<unsigned>(n_max_opt)
                                      : qsc::default_n_max(spec);
      auto dist = qsc::pnd_elliptic(spec, n_max);
      emit(output_path, series_artifact(dist_points(dist), format, "n", "P_n", true));
    } else if (*window_cmd) {
      if (format == "svg") throw CLI::ValidationError("--format", "svg not supported here");
      qsc::CircularStateSpec spec{0.0, N, r};
      auto window = qsc::fock_window(spec, target, threshold, alpha_max, grid_step);
      if (format == "json") {
        emit(output_path, json{{"window", window_json(window)}}.dump(2) + "\n");
      } else {
        std::ostringstream out;
        out << "N,r,target_n,alpha_lo,alpha_hi,delta_alpha\n";
        if (window)
          out << N << "," << r << "," << target << "," << fmt(window->alpha_lo)
              << "," << fmt(window->alpha_hi) << "," << fmt(window->width()) << "\n";
        emit(output_path, out.str());
      }
    } else if (*table) {
      if (format == "svg") throw CLI::ValidationError("--format", "svg not supported here");
      auto records = qsc::reachability_table(n_fock_max, N_max, r_max, threshold, aspect);
      if (format == "json") {
        json rows = json::array();
        for (const auto& rec : records) {
          json combos = json::array();
          for (const auto& [order, added] : rec.gpacs_combos)
            combos.push_back({{"N", order}, {"r", added}});
          rows.push_back({{"fock_n", rec.fock_n},
                          {"gcs_orders", rec.gcs_orders},
                          {"gpacs_combos", combos},
                          {"elliptic_reachable", rec.elliptic_reachable}});
        }
        emit(output_path, rows.dump(2) + "\n");
      } else {
        std::ostringstream out;
        out << "fock_n,gcs_orders,gpacs_combos,elliptic_reachable\n";
        for (const auto& rec : records) {
          out << rec.fock_n << ",";
          for (size_t i = 0; i < rec.gcs_orders.size(); ++i)
            out << (i ? ";" : "") << rec.gcs_orders[i];
          out << ",";
          for (size_t i = 0; i < rec.gpacs_combos.size(); ++i)
            out << (i ? ";" : "") << rec.gpacs_combos[i].first << ":"
                << rec.gpacs_combos[i].second;
          out << "," << (rec.elliptic_reachable ? "true" : "false") << "\n";
        }
        emit(output_path, out.str());
      }
    } else if (*equal) {
      std::vector<std::pair<double, double>> points;
      for (unsigned s = 0; s <= S_max; ++s)
        points.emplace_back(static_cast<double>(s),
                            qsc::equal_superposition_alpha(N, s));
      emit(output_path, series_artifact(points, format, "S", "alpha", false));
    } else if (*fidelity) {
      AlphaGrid grid = parse_grid(alpha_grid);
      qsc::CircularStateSpec spec{0.0, N, 0};
      std::vector<std::pair<double, double>> points;
      for (double a : grid.points())
        points.emplace_back(a, qsc::overlap_fidelity(spec, a, S));
      emit(output_path, series_artifact(points, format, "alpha", "fidelity", false));
    } else if (*sweep) {
      if (N_min > N_max) throw CLI::ValidationError("--N-min", "requires N-min <= N-max");
      std::vector<unsigned> orders;
      for (unsigned order = N_min; order <= N_max; ++order) orders.push_back(order);
      auto curve = qsc::delta_alpha_curve(orders, r,
                                          static_cast<qsc::TargetKind>(multiple),
                                          threshold);
      std::vector<std::pair<double, double>> points;
      for (const auto& [order, width] : curve)
        points.emplace_back(static_cast<double>(order), width);
      emit(output_path, series_artifact(points, format, "N", "delta_alpha", false));
    } else if (*verify) {
      if (format == "svg") throw CLI::ValidationError("--format", "svg not supported here");
      AlphaGrid grid = parse_grid(alpha_grid);
      double worst = 0.0;
      std::ostringstream out;
      out << "N,r,alpha,max_abs_diff\n";
      for (unsigned order = 1; order <= N_max; ++order)
        for (unsigned added = 0; added <= r_max; ++added)
          for (double a : grid.points()) {
            qsc::CircularStateSpec spec{a, order, added};
            unsigned n_max = qsc::default_n_max(spec);
            auto closed = added == 0 ? qsc::pnd_gcs_closed(spec, n_max)
                                     : qsc::pnd_gpacs_closed(spec, n_max);
            auto oracle = qsc::pnd_from_expansion(qsc::fock_expansion(spec, n_max));
            double diff = 0.0;
            for (unsigned n = 0; n <= n_max; ++n)
              diff = std::max(diff, std::abs(closed.probs[n] - oracle.probs[n]));
            if (added == 0) {
              auto mid = qsc::pnd_gcs_intermediate(spec, n_max);
              for (unsigned n = 0; n <= n_max; ++n)
                diff = std::max(diff, std::abs(closed.probs[n] - mid.probs[n]));
            }
            worst = std::max(worst, diff);
            out << order << "," << added << "," << fmt(a) << "," << fmt(diff) << "\n";
          }
      bool pass = worst < 1e-9;
      if (format == "json") {
        emit(output_path, json{{"max_abs_diff", worst}, {"pass", pass}}.dump(2) + "\n");
      } else {
        emit(output_path, out.str());
      }
      std::cerr << "verify: max |closed - oracle| = " << fmt(worst) << " -> "
                << (pass ? "pass" : "FAIL") << "\n";
      if (!pass) return kExitNumeric;
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const qsc::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return 0;
}
