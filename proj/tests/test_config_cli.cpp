#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hsred/cli.hpp"
#include "hsred/config.hpp"
#include "hsred/error.hpp"
#include "hsred/io.hpp"

using namespace hsred;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("hsred_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path write_file(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
  return p;
}

int run(Command c, const fs::path& cfg, const fs::path& out, std::string* err_text = nullptr,
        bool dump = false) {
  RunManifest m;
  m.command = c;
  m.config_path = cfg.string();
  m.out_dir = out.string();
  m.dump_matrix = dump;
  std::ostringstream log, err;
  const int rc = execute(m, log, err);
  if (err_text) *err_text = err.str();
  return rc;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, sep)) out.push_back(cell);
  return out;
}

}  // namespace

TEST_CASE("config parsing") {
  const RunConfig c = parse_config(
      "# ladder\n"
      "L = 4\n"
      "J_t = 15\n"
      "J_l = 12.21   # trailing comment\n"
      "J_c = 12.21\n"
      "boundary = periodic\n"
      "M_tot = 1\n"
      "k = 2\n"
      "seed = 7\n"
      "n_min = 10\n"
      "root_method = bracketed\n"
      "coarse.fraction = 0.05\n"
      "scan.parameter = J_l\n"
      "\n");
  CHECK(c.ladder.sites_per_leg == 4);
  CHECK(c.ladder.j_leg == 12.21);
  CHECK(c.ladder.boundary == Boundary::periodic);
  CHECK(c.ladder.m_tot.twice() == 2);
  CHECK(c.eigen.k == 2);
  CHECK(c.eigen.seed == 7);
  CHECK(c.reduction.n_min == 10);
  CHECK(c.reduction.root_method == RootMethod::bracketed);
  CHECK(c.reduction.coarse_fraction == 0.05);
  CHECK(c.scan.parameter == ScanParameter::leg);
}

TEST_CASE("config round trip") {
  RunConfig c;
  c.ladder.j_leg = 0.1 + 0.2;
  c.ladder.j_cross = 1.0 / 3.0;
  c.eigen.tol = 1e-11;
  c.reduction.p_max = 2.5;
  c.scan.rel_tol = 3e-7;
  c.drift_floor = 250;
  const std::string text = to_text(c);
  const RunConfig back = parse_config(text);
  CHECK(back.ladder.j_leg == c.ladder.j_leg);
  CHECK(back.ladder.j_cross == c.ladder.j_cross);
  CHECK(back.eigen.tol == c.eigen.tol);
  CHECK(back.reduction.p_max == 2.5);
  CHECK(back.scan.rel_tol == 3e-7);
  CHECK(back.drift_floor == 250);
  CHECK(to_text(back) == text);
}

TEST_CASE("config errors") {
  for (const char* bad : {"L = 6\nbogus = 1\n", "L = six\n", "L 6\n", "k = 2.5\n",
                          "boundary = twisted\n"}) {
    try {
      parse_config(bad);
      FAIL("accepted: " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::config_parse);
    }
  }
}

TEST_CASE("number format") {
  CHECK(format_double(15.0) == "15");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(0.1 + 0.2) == "0.30000000000000004");
  CHECK(format_double(std::nan("")) == "nan");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("reduce is byte-for-byte reproducible") {
  const fs::path dir = scratch_dir("repro");
  const fs::path cfg = write_file(dir / "run.cfg", "L = 6\nJ_t = 15\nJ_l = 5\nJ_c = 3\nn_min = 915\n");
  REQUIRE(run(Command::reduce, cfg, dir / "a") == 0);
  REQUIRE(run(Command::reduce, cfg, dir / "b") == 0);
  for (const char* f : {"trajectory.csv", "summary.json", "resolved.cfg"})
    CHECK(slurp(dir / "a" / f) == slurp(dir / "b" / f));

  std::istringstream csv(slurp(dir / "a" / "trajectory.csv"));
  std::string header, first;
  std::getline(csv, header);
  std::getline(csv, first);
  CHECK(header == kTrajectoryHeader);
  const auto cols = split(first, ',');
  REQUIRE(cols.size() == 16);
  CHECK(cols[0] == "0");
  CHECK(cols[1] == "924");
  CHECK(cols[2] == "15");
  CHECK(cols[9] == "0");

  std::size_t rows = 1;
  for (std::string line; std::getline(csv, line);) ++rows;
  CHECK(rows == 924 - 915 + 1);

  // the echoed config reruns to the same result
  REQUIRE(run(Command::reduce, dir / "a" / "resolved.cfg", dir / "c") == 0);
  CHECK(slurp(dir / "a" / "trajectory.csv") == slurp(dir / "c" / "trajectory.csv"));

  const auto summary = nlohmann::json::parse(slurp(dir / "a" / "summary.json"));
  CHECK(summary.contains("stop_reason"));
}

TEST_CASE("spectrum artifacts and matrix dump") {
  const fs::path dir = scratch_dir("spectrum");
  const fs::path cfg = write_file(dir / "run.cfg", "L = 1\nJ_t = 15\nk = 2\n");
  REQUIRE(run(Command::spectrum, cfg, dir / "out", nullptr, true) == 0);
  CHECK(slurp(dir / "out" / "h1.coo") == "2 4\n0 0 -0.25\n0 1 0.5\n1 0 0.5\n1 1 -0.25\n");
  const auto j = nlohmann::json::parse(slurp(dir / "out" / "spectrum.json"));
  CHECK(j["dimension"] == 2);
  CHECK(slurp(dir / "out" / "spectrum.csv").rfind("index,lambda,e,residual,dense_lambda\n", 0) == 0);
}

TEST_CASE("scan artifacts") {
  const fs::path dir = scratch_dir("scan");
  const fs::path cfg = write_file(
      dir / "run.cfg", "L = 2\nJ_t = 15\nscan.from = 13\nscan.to = 17.5\nscan.points = 10\n");
  REQUIRE(run(Command::scan, cfg, dir / "out") == 0);
  const std::string curve = slurp(dir / "out" / "gap_curve.csv");
  CHECK(curve.rfind(std::string(kGapCurveHeader) + "\n", 0) == 0);
  const auto j = nlohmann::json::parse(slurp(dir / "out" / "crossing.json"));
  CHECK(j["g_e"].get<double>() == doctest::Approx(15.0).epsilon(1e-4));
}

TEST_CASE("oracle check") {
  const fs::path dir = scratch_dir("oracle");
  const fs::path cfg = write_file(dir / "run.cfg", "L = 2\nJ_t = 3\nJ_l = 1\nJ_c = 0.5\nk = 2\n");
  REQUIRE(run(Command::oracle_check, cfg, dir / "out") == 0);
  const auto j = nlohmann::json::parse(slurp(dir / "out" / "oracle.json"));
  CHECK(j["pass"] == true);
}

TEST_CASE("errors are reported as JSON") {
  const fs::path dir = scratch_dir("errors");
  std::string err;
  const fs::path bad = write_file(dir / "bad.cfg", "L = 6\nwhat = 1\n");
  CHECK(run(Command::reduce, bad, dir / "out", &err) == 2);
  CHECK(nlohmann::json::parse(err)["error"] == "config_parse");

  const fs::path none = write_file(dir / "none.cfg", "L = 2\nJ_t = 15\nscan.from = 2\nscan.to = 5\nscan.points = 5\n");
  CHECK(run(Command::scan, none, dir / "scan", &err) == 1);
  CHECK(nlohmann::json::parse(err)["error"] == "no_crossing");
  const auto on_disk = nlohmann::json::parse(slurp(dir / "scan" / "error.json"));
  CHECK(on_disk["error"] == "no_crossing");

  CHECK(run(Command::spectrum, dir / "missing.cfg", dir / "m", &err) != 0);
  CHECK(nlohmann::json::parse(err).contains("error"));
  CHECK_THROWS_AS(parse_command("plot"), Error);
}

TEST_CASE("unknown command from the executable") {
  const char* exe = std::getenv("HSRED_CLI");
  if (!exe) return;
  const fs::path dir = scratch_dir("exe");
  const std::string cmd = std::string(exe) + " frobnicate 2> " + (dir / "err.txt").string();
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 2);
  CHECK(nlohmann::json::parse(slurp(dir / "err.txt"))["error"] == "unknown_command");
}
