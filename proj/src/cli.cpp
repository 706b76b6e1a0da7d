#include "hsred/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "hsred/config.hpp"
#include "hsred/error.hpp"
#include "hsred/io.hpp"
#include "hsred/observables.hpp"

namespace fs = std::filesystem;

namespace hsred {

std::string_view to_string(Command c) noexcept {
  switch (c) {
    case Command::spectrum: return "spectrum";
    case Command::reduce: return "reduce";
    case Command::scan: return "scan";
    case Command::oracle_check: return "oracle-check";
  }
  return "unknown";
}

Command parse_command(std::string_view text) {
  if (text == "spectrum") return Command::spectrum;
  if (text == "reduce") return Command::reduce;
  if (text == "scan") return Command::scan;
  if (text == "oracle-check") return Command::oracle_check;
  throw Error(ErrorCode::unknown_command, "unknown command '" + std::string(text) + "'");
}

namespace {

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io, "cannot write '" + path.string() + "'");
  return out;
}

void write_json(const fs::path& path, const nlohmann::json& j) {
  auto out = open_out(path);
  out << j.dump(2) << '\n';
}

void run_spectrum(const RunConfig& cfg, const fs::path& out, bool dump_matrix, std::ostream& log) {
  const Ladder ladder = build_ladder(cfg.ladder);
  const auto& h = ladder.hamiltonian;
  const double g = cfg.ladder.j_rung;
  EigenOptions eopts = cfg.eigen;
  eopts.k = std::min<int>(eopts.k, static_cast<int>(h.dim()));
  const EigenResult r = lowest_k(h, g, eopts);

  std::vector<double> dense;
  if (h.dim() <= kDenseLimit) dense = dense_spectrum(h, g);

  double max_dev = 0.0;
  auto csv = open_out(out / "spectrum.csv");
  csv << "index,lambda,e,residual,dense_lambda\n";
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    csv << i << ',' << format_double(r.values[i]) << ','
        << format_double(energy_per_site(r.values[i], cfg.ladder.sites_per_leg)) << ','
        << format_double(r.residuals[i]) << ','
        << (dense.empty() ? std::string("nan") : format_double(dense[i])) << '\n';
    if (!dense.empty()) max_dev = std::max(max_dev, std::abs(r.values[i] - dense[i]));
  }

  nlohmann::json j = spectrum_json(r, cfg.ladder.sites_per_leg);
  j["dimension"] = h.dim();
  j["nnz"] = h.h1().nnz();
  j["g"] = g;
  j["dense_max_deviation"] = dense.empty() ? nlohmann::json(nullptr) : nlohmann::json(max_dev);
  write_json(out / "spectrum.json", j);

  if (dump_matrix) {
    auto coo = open_out(out / "h1.coo");
    h.h1().write_coordinate(coo);
  }
  log << "spectrum: dim " << h.dim() << ", lambda1 = " << format_double(r.values.front()) << '\n';
}

void run_reduce(const RunConfig& cfg, const fs::path& out, std::ostream& log) {
  const ReductionTrajectory traj = run_reduction(cfg.ladder, cfg.eigen, cfg.reduction);
  {
    auto csv = open_out(out / "trajectory.csv");
    write_trajectory_csv(csv, traj);
  }
  nlohmann::json j = trajectory_summary(traj, cfg);
  try {
    const FixedPointCheck fp = fixed_point_drift(traj, cfg.drift_floor);
    j["fixed_point"] = {{"n_floor", fp.n_floor}, {"drift", fp.drift}, {"window_steps", fp.window_steps}};
  } catch (const Error&) {
    j["fixed_point"] = nullptr;
  }
  write_json(out / "summary.json", j);
  log << "reduce: " << traj.steps.front().n << " -> " << traj.steps.back().n << " ("
      << to_string(traj.stop_reason) << ")\n";
}

void run_scan(const RunConfig& cfg, const fs::path& out, std::ostream& log) {
  const CrossingReport report = scan_crossing(cfg.ladder, cfg.scan, cfg.eigen);
  {
    auto csv = open_out(out / "gap_curve.csv");
    write_gap_curve_csv(csv, report);
  }
  write_json(out / "crossing.json", crossing_json(report));
  log << "scan: crossing at " << report.parameter_path << " = " << format_double(report.g_e)
      << ", J_t/J_l = " << format_double(report.ratio) << '\n';
}

void run_oracle_check(const RunConfig& cfg, const fs::path& out, std::ostream& log) {
  nlohmann::json sectors = nlohmann::json::array();
  double worst = 0.0;
  const int n = 2 * cfg.ladder.sites_per_leg;
  for (int twice_m = -n; twice_m <= n; twice_m += 2) {
    LadderConfig lc = cfg.ladder;
    lc.m_tot = HalfInt::from_twice(twice_m);
    const Ladder ladder = build_ladder(lc);
    const auto& h = ladder.hamiltonian;
    if (h.dim() > kDenseLimit) {
      throw Error(ErrorCode::dimension_guard, "oracle-check sector of dimension " +
                                                  std::to_string(h.dim()) + " is too large");
    }
    EigenOptions eopts = cfg.eigen;
    eopts.k = std::min<int>(eopts.k, static_cast<int>(h.dim()));
    const EigenResult r = lowest_k(h, lc.j_rung, eopts);
    const auto dense = dense_spectrum(h, lc.j_rung);
    double dev = 0.0;
    for (std::size_t i = 0; i < r.values.size(); ++i) dev = std::max(dev, std::abs(r.values[i] - dense[i]));
    worst = std::max(worst, dev);
    sectors.push_back({{"M_tot", lc.m_tot.value()}, {"dimension", h.dim()}, {"max_deviation", dev}});
  }
  constexpr double kThreshold = 1e-8;
  write_json(out / "oracle.json", {{"sectors", sectors},
                                   {"max_deviation", worst},
                                   {"threshold", kThreshold},
                                   {"pass", worst < kThreshold}});
  log << "oracle-check: max deviation " << format_double(worst) << '\n';
}

void report_error(std::ostream& err, const fs::path& out, std::string_view code,
                  const std::string& message) {
  const nlohmann::json j = {{"error", std::string(code)}, {"message", message}};
  err << j.dump() << '\n';
  if (!out.empty() && fs::is_directory(out)) {
    std::ofstream f(out / "error.json");
    if (f) f << j.dump(2) << '\n';
  }
}

}  // namespace

int execute(const RunManifest& manifest, std::ostream& log, std::ostream& err) {
  const fs::path out(manifest.out_dir);
  try {
    RunConfig cfg = load_config(manifest.config_path);
    if (manifest.seed) cfg.eigen.seed = *manifest.seed;

    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec || !fs::is_directory(out)) {
      throw Error(ErrorCode::io, "cannot create output directory '" + out.string() + "'");
    }
    {
      auto echo = open_out(out / "resolved.cfg");
      write_config(echo, cfg);
    }
    write_json(out / "manifest.json", {{"command", std::string(to_string(manifest.command))},
                                       {"config_path", manifest.config_path},
                                       {"out_dir", manifest.out_dir},
                                       {"echo", "resolved.cfg"}});

    switch (manifest.command) {
      case Command::spectrum: run_spectrum(cfg, out, manifest.dump_matrix, log); break;
      case Command::reduce: run_reduce(cfg, out, log); break;
      case Command::scan: run_scan(cfg, out, log); break;
      case Command::oracle_check: run_oracle_check(cfg, out, log); break;
    }
    return 0;
  } catch (const Error& e) {
    report_error(err, out, to_string(e.code()), e.what());
    return e.code() == ErrorCode::config_parse || e.code() == ErrorCode::unknown_command ? 2 : 1;
  } catch (const std::exception& e) {
    report_error(err, out, "internal", e.what());
    return 1;
  }
}

}  // namespace hsred
