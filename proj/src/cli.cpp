#include "lkweld/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <functional>
#include <map>

#include "lkweld/experiments.hpp"
#include "lkweld/output.hpp"

namespace lkweld {
namespace {

void print_fit(std::ostream& out, const std::string& what, const ConvergenceFit& fit,
               double expected) {
  out << what << ": ";
  if (fit.degenerate) {
    out << "degenerate (" << fit.used_count() << " of " << fit.x.size()
        << " points above the numerical floor), slope fit skipped\n";
    return;
  }
  out << "slope " << format_number(fit.slope) << " +/- " << format_number(fit.half_width) << " from "
      << fit.used_count() << " points";
  if (expected > 0.0) out << (fit.slope >= expected ? " [ok" : " [LOW") << ", expected >= " << expected << "]";
  out << '\n';
}

void write_plot(const Scenario& s, const OutputSink& sink, std::ostream& out,
                const std::string& filename, const std::string& title, const std::string& xlabel,
                const std::string& ylabel, const std::vector<PlotSeries>& series, bool loglog) {
  if (!s.plots) return;
  if (!plots_available()) {
    out << "plots skipped: built without plot support\n";
    return;
  }
  const auto path = sink.write_text(filename, render_svg_plot(title, xlabel, ylabel, series, loglog));
  out << "wrote " << path.string() << '\n';
}

void report_csv(std::ostream& out, const std::filesystem::path& path) {
  out << "wrote " << path.string() << '\n';
}

void cmd_evolve(const Scenario& s, std::ostream& out) {
  const double t = s.time_point();
  const EvolutionResult r = evolve_scenario(s, t);
  OutputSink sink(s.out_dir);
  CsvTable raw{{"phi", "psi", "delta_raw", "star_angle"}, {}};
  for (std::size_t j = 0; j < r.raw_points.size(); ++j) {
    raw.rows.push_back({grid_angle(j, s.grid), r.angle_map.samples()[j], r.raw_delta[j], r.star_angle[j]});
  }
  report_csv(out, sink.write_csv(s.name + "_evolve.csv", raw));
  CsvTable curve{{"psi", "delta", "delta_prime", "delta_second"}, {}};
  const auto d = r.curve.delta().real_values();
  const auto d1 = r.curve.delta_prime().real_values();
  const auto d2 = r.curve.delta_second().real_values();
  for (std::size_t j = 0; j < d.size(); ++j) curve.rows.push_back({grid_angle(j, s.grid), d[j], d1[j], d2[j]});
  report_csv(out, sink.write_csv(s.name + "_curve.csv", curve));
  out << "t = " << format_number(t) << ", epsilon = " << format_number(r.curve.epsilon()) << '\n';
  if (t > 0.0) {
    const auto ratios = regularity_ratios(r);
    out << "regularity ratios sup|delta|/t, sup|delta'|/t, sup|delta''|/t = "
        << format_number(ratios.delta) << ", " << format_number(ratios.delta_prime) << ", "
        << format_number(ratios.delta_second) << '\n';
  }
  out << "star angle defect sup|arg(z f'/f)| = " << format_number(star_angle_defect(r)) << '\n';
  std::vector<double> psi(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) psi[j] = grid_angle(j, s.grid);
  write_plot(s, sink, out, s.name + "_curve.svg", "deficit delta_t(psi)", "psi", "delta",
             {{"t = " + format_number(t), psi, d}}, false);
}

void cmd_map(const Scenario& s, std::ostream& out, MapSide side) {
  const BoundaryCurve curve = scenario_curve(s);
  const auto opts = oracle_options(s);
  const MapSolution sol = side == MapSide::interior ? solve_interior(curve, opts) : solve_exterior(curve, opts);
  OutputSink sink(s.out_dir);
  CsvTable table{{"theta", "psi"}, {}};
  for (std::size_t j = 0; j < sol.psi_of_theta.size(); ++j) {
    table.rows.push_back({grid_angle(j, sol.psi_of_theta.size()), sol.psi_of_theta.samples()[j]});
  }
  const std::string tag = side == MapSide::interior ? "map_interior" : "map_exterior";
  report_csv(out, sink.write_csv(s.name + "_" + tag + ".csv", table));
  out << "conf_factor = " << format_number(sol.conf_factor) << ", iterations = " << sol.iterations
      << ", residual = " << format_number(sol.residual) << (sol.damped ? ", damped" : "") << '\n';
  if (side == MapSide::exterior) {
    out << "tau = " << format_number(sol.tau()) << ", b0 = (" << format_number(sol.b0().real()) << ","
        << format_number(sol.b0().imag()) << "), b1 = (" << format_number(sol.b1().real()) << ","
        << format_number(sol.b1().imag()) << ")\n";
  }
}

void cmd_weld_oracle(const Scenario& s, std::ostream& out) {
  const BoundaryCurve curve = scenario_curve(s);
  const auto opts = oracle_options(s);
  const CircleHomeo w = true_welding(solve_interior(curve, opts), solve_exterior(curve, opts));
  OutputSink sink(s.out_dir);
  CsvTable table{{"s", "sigma"}, {}};
  std::vector<double> xs, disp;
  for (std::size_t j = 0; j < w.size(); ++j) {
    const double x = grid_angle(j, w.size());
    table.rows.push_back({x, w.samples()[j]});
    xs.push_back(x);
    disp.push_back(w.samples()[j] - x);
  }
  report_csv(out, sink.write_csv(s.name + "_weld_oracle.csv", table));
  write_plot(s, sink, out, s.name + "_weld_oracle.svg", "welding displacement sigma(s) - s", "s",
             "sigma - s", {{"oracle", xs, disp}}, false);
}

void cmd_weld_asymptotic(const Scenario& s, std::ostream& out) {
  const BoundaryCurve curve = scenario_curve(s);
  const WeldingRecord rec = welding_asymptotic(curve);
  OutputSink sink(s.out_dir);
  CsvTable table{{"s", "sigma", "h"}, {}};
  const auto h = rec.h.real_values();
  std::vector<double> disp;
  for (std::size_t j = 0; j < rec.s_grid.size(); ++j) {
    table.rows.push_back({rec.s_grid[j], rec.sigma_of_s.samples()[j], h[j]});
    disp.push_back(rec.sigma_of_s.samples()[j] - rec.s_grid[j]);
  }
  report_csv(out, sink.write_csv(s.name + "_weld_asymptotic.csv", table));
  out << "epsilon = " << format_number(curve.epsilon()) << ", solve residual = " << format_number(rec.residual) << '\n';
  write_plot(s, sink, out, s.name + "_weld_asymptotic.svg", "welding displacement sigma(s) - s", "s",
             "sigma - s", {{"first order", rec.s_grid, disp}}, false);
}

void cmd_theorem1(const Scenario& s, std::ostream& out) {
  const Theorem1Report rep = run_theorem1(s);
  OutputSink sink(s.out_dir);
  CsvTable table{{"t", "error", "tau", "slack"}, {}};
  std::vector<double> t, e, sl;
  for (const auto& r : rep.rows) {
    table.rows.push_back({r.t, r.error, r.tau, r.slack});
    t.push_back(r.t);
    e.push_back(r.error);
    sl.push_back(r.slack);
  }
  report_csv(out, sink.write_csv(s.name + "_theorem1.csv", table));
  print_fit(out, "welding error order", rep.fit, 1.9);
  print_fit(out, "Lebedev slack order", rep.slack_fit, 1.9);
  write_plot(s, sink, out, s.name + "_theorem1.svg", "welding error vs t", "t", "error",
             {{"sup |phi - phi~ - 2 Im p t|", t, e}, {"t - tau", t, sl}}, true);
}

void cmd_theoremB(const Scenario& s, std::ostream& out) {
  const TheoremBReport rep = run_theoremB(s);
  OutputSink sink(s.out_dir);
  CsvTable table{{"eps", "error"}, {}};
  std::vector<double> x, e;
  for (const auto& r : rep.rows) {
    table.rows.push_back({r.eps, r.error});
    x.push_back(r.eps);
    e.push_back(r.error);
  }
  report_csv(out, sink.write_csv(s.name + "_theoremB.csv", table));
  print_fit(out, "welding defect order", rep.fit, 1.9);
  write_plot(s, sink, out, s.name + "_theoremB.svg", "welding defect vs epsilon", "epsilon", "error",
             {{"sup |s + h(s) - sigma + h(sigma)|", x, e}}, true);
}

void cmd_theoremA(const Scenario& s, std::ostream& out) {
  const TheoremAReport rep = run_theoremA(s);
  OutputSink sink(s.out_dir);
  CsvTable table{{"eps", "interior_error", "exterior_error"}, {}};
  std::vector<double> x, ei, ee;
  for (const auto& r : rep.rows) {
    table.rows.push_back({r.eps, r.interior_error, r.exterior_error});
    x.push_back(r.eps);
    ei.push_back(r.interior_error);
    ee.push_back(r.exterior_error);
  }
  report_csv(out, sink.write_csv(s.name + "_theoremA.csv", table));
  print_fit(out, "interior map defect order", rep.interior_fit, 1.9);
  print_fit(out, "exterior map defect order", rep.exterior_fit, 1.9);
  write_plot(s, sink, out, s.name + "_theoremA.svg", "map defect vs epsilon", "epsilon", "error",
             {{"interior", x, ei}, {"exterior", x, ee}}, true);
}

void cmd_duality(const Scenario& s, std::ostream& out) {
  const DualityReport rep = run_duality(s);
  OutputSink sink(s.out_dir);
  CsvTable table{{"t", "tau", "error"}, {}};
  std::vector<double> x, e;
  for (const auto& r : rep.rows) {
    table.rows.push_back({r.t, r.tau, r.error});
    x.push_back(r.tau);
    e.push_back(r.error);
  }
  report_csv(out, sink.write_csv(s.name + "_duality.csv", table));
  print_fit(out, "duality defect order (in tau)", rep.fit, 1.9);
  write_plot(s, sink, out, s.name + "_duality.svg", "exterior expansion defect vs tau", "tau", "error",
             {{"sup |zF(1/z) - 1 + p*(z) tau|", x, e}}, true);
}

void cmd_lebedev(const Scenario& s, std::ostream& out) {
  const LebedevSeries rep = run_lebedev(s);
  OutputSink sink(s.out_dir);
  CsvTable table{{"t", "tau", "slack"}, {}};
  std::vector<double> x, e;
  for (const auto& r : rep.rows) {
    table.rows.push_back({r.t, r.tau, r.slack});
    x.push_back(r.t);
    e.push_back(r.slack);
  }
  report_csv(out, sink.write_csv(s.name + "_lebedev.csv", table));
  print_fit(out, "Lebedev slack order", rep.fit, 1.9);
  write_plot(s, sink, out, s.name + "_lebedev.svg", "t - tau", "t", "slack", {{"t - tau", x, e}}, true);
}

const std::map<std::string, std::pair<std::string, std::function<void(const Scenario&, std::ostream&)>>>&
commands() {
  static const std::map<std::string,
                        std::pair<std::string, std::function<void(const Scenario&, std::ostream&)>>>
      table{
          {"evolve", {"evolve the unit circle to time t and write the polar data", cmd_evolve}},
          {"map-interior",
           {"spectral interior map of the scenario curve",
            [](const Scenario& s, std::ostream& o) { cmd_map(s, o, MapSide::interior); }}},
          {"map-exterior",
           {"spectral exterior map of the scenario curve",
            [](const Scenario& s, std::ostream& o) { cmd_map(s, o, MapSide::exterior); }}},
          {"weld-oracle", {"conformal welding from the spectral maps", cmd_weld_oracle}},
          {"weld-asymptotic", {"first-order welding from the cotangent integral", cmd_weld_asymptotic}},
          {"verify-theorem1", {"welding law along the evolution, order fit in t", cmd_theorem1}},
          {"verify-theoremA", {"Schwarz-integral map asymptotics, order fit in epsilon", cmd_theoremA}},
          {"verify-theoremB", {"first-order welding relation, order fit in epsilon", cmd_theoremB}},
          {"verify-duality", {"exterior expansion zF(1/z) vs p*, order fit in tau", cmd_duality}},
          {"verify-lebedev", {"capacity parameter tau vs t", cmd_lebedev}},
      };
  return table;
}

}  // namespace

void run_command(const std::string& command, const Scenario& scenario, std::ostream& out) {
  const auto& table = commands();
  const auto it = table.find(command);
  if (it == table.end()) throw InvalidArgument("unknown command '" + command + "'");
  it->second.second(scenario, out);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, EnvLookup env) {
  CLI::App app{"Loewner-Kufarev evolution and conformal welding laboratory", "lkweld"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, out_dir, driving, delta;
  std::size_t grid = 0, steps = 0;
  bool plots = false, parallel = false;
  app.add_option("--config", config_path, "scenario file (key = value, [section] headers)");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--grid", grid, "grid size (power of two >= 16)");
  app.add_option("--steps", steps, "RK4 steps per evolution (>= 64)");
  app.add_option("--driving", driving, "driving function, e.g. \"p = 1 + (0.0,0.3)*z^1\"");
  app.add_option("--delta", delta, "delta shape, e.g. \"1*cos(psi) + 0.5*sin(3*psi)\"");
  app.add_flag("--plots", plots, "write SVG plots");
  app.add_flag("--parallel", parallel, "run t-values concurrently");
  std::string chosen;
  for (const auto& [name, entry] : commands()) {
    app.add_subcommand(name, entry.first)->callback([&chosen, n = name] { chosen = n; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    out << "\nScenario keys:\n";
    for (const auto& [k, v] : scenario_keys()) out << "  " << k << "  " << v << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    ConfigMap config;
    const char* env_config = env ? env("LKWELD_CONFIG") : std::getenv("LKWELD_CONFIG");
    if (config_path.empty() && env_config != nullptr) config_path = env_config;
    if (!config_path.empty()) config = read_config_file(config_path);
    apply_env_overrides(config, env);
    if (!out_dir.empty()) config["output.dir"] = out_dir;
    if (grid != 0) config["numerics.grid"] = std::to_string(grid);
    if (steps != 0) config["numerics.steps"] = std::to_string(steps);
    if (!driving.empty()) config["scenario.driving"] = driving;
    if (!delta.empty()) config["scenario.delta"] = delta;
    if (plots) config["output.plots"] = "true";
    if (parallel) config["output.parallel"] = "true";
    const Scenario scenario = scenario_from_config(config);
    run_command(chosen, scenario, out);
  } catch (const InvalidArgument& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalFailure& e) {
    err << "numerical failure " << e.what() << '\n';
    return kExitNumerical;
  } catch (const IoFailure& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace lkweld
