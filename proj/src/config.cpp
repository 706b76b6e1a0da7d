#include "hsred/config.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "hsred/error.hpp"

namespace hsred {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_value(int line, std::string_view key, std::string_view value,
                            std::string_view expected) {
  throw Error(ErrorCode::config_parse, "line " + std::to_string(line) + ": key '" +
                                           std::string(key) + "' expects " +
                                           std::string(expected) + ", got '" +
                                           std::string(value) + "'");
}

double to_double(int line, std::string_view key, std::string_view value) {
  const std::string s(value);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE) bad_value(line, key, value, "a number");
  return v;
}

template <typename Int>
Int to_int(int line, std::string_view key, std::string_view value) {
  Int v{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    bad_value(line, key, value, "an integer");
  }
  return v;
}

bool to_bool(int line, std::string_view key, std::string_view value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  bad_value(line, key, value, "true or false");
}

}  // namespace

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::config_parse,
                  "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    const int n = line_no;

    try {
      if (key == "L") cfg.ladder.sites_per_leg = to_int<int>(n, key, value);
      else if (key == "J_t") cfg.ladder.j_rung = to_double(n, key, value);
      else if (key == "J_l") cfg.ladder.j_leg = to_double(n, key, value);
      else if (key == "J_c") cfg.ladder.j_cross = to_double(n, key, value);
      else if (key == "M_tot") cfg.ladder.m_tot = HalfInt::from_double(to_double(n, key, value));
      else if (key == "boundary") cfg.ladder.boundary = parse_boundary(value);
      else if (key == "k") cfg.eigen.k = to_int<int>(n, key, value);
      else if (key == "tol") cfg.eigen.tol = to_double(n, key, value);
      else if (key == "max_iter") cfg.eigen.max_iter = to_int<int>(n, key, value);
      else if (key == "seed") cfg.eigen.seed = to_int<std::uint64_t>(n, key, value);
      else if (key == "verify_multiplicity") cfg.eigen.verify_multiplicity = to_bool(n, key, value);
      else if (key == "n_min") cfg.reduction.n_min = to_int<std::size_t>(n, key, value);
      else if (key == "p_max") cfg.reduction.p_max = to_double(n, key, value);
      else if (key == "batch") cfg.reduction.batch = to_int<std::size_t>(n, key, value);
      else if (key == "g_bracket_factor") cfg.reduction.g_bracket_factor = to_double(n, key, value);
      else if (key == "lambda_tol") cfg.reduction.lambda_tol_rel = to_double(n, key, value);
      else if (key == "root_method") cfg.reduction.root_method = parse_root_method(value);
      else if (key == "coarse.fraction") cfg.reduction.coarse_fraction = to_double(n, key, value);
      else if (key == "coarse.above") cfg.reduction.coarse_above = to_int<std::size_t>(n, key, value);
      else if (key == "drift.n_floor") cfg.drift_floor = to_int<std::size_t>(n, key, value);
      else if (key == "scan.parameter") cfg.scan.parameter = parse_scan_parameter(value);
      else if (key == "scan.from") cfg.scan.from = to_double(n, key, value);
      else if (key == "scan.to") cfg.scan.to = to_double(n, key, value);
      else if (key == "scan.points") cfg.scan.points = to_int<int>(n, key, value);
      else if (key == "scan.rel_tol") cfg.scan.rel_tol = to_double(n, key, value);
      else {
        throw Error(ErrorCode::config_parse,
                    "line " + std::to_string(n) + ": unknown key '" + std::string(key) + "'");
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::config_parse) throw;
      throw Error(ErrorCode::config_parse, "line " + std::to_string(n) + ": " + e.what());
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::config_parse, "cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void write_config(std::ostream& os, const RunConfig& cfg) {
  const auto& l = cfg.ladder;
  const auto& e = cfg.eigen;
  const auto& r = cfg.reduction;
  const auto& s = cfg.scan;
  os << "# ladder\n"
     << "L = " << l.sites_per_leg << '\n'
     << "J_t = " << format_double(l.j_rung) << '\n'
     << "J_l = " << format_double(l.j_leg) << '\n'
     << "J_c = " << format_double(l.j_cross) << '\n'
     << "M_tot = " << format_double(l.m_tot.value()) << '\n'
     << "boundary = " << to_string(l.boundary) << '\n'
     << "# eigensolver\n"
     << "k = " << e.k << '\n'
     << "tol = " << format_double(e.tol) << '\n'
     << "max_iter = " << e.max_iter << '\n'
     << "seed = " << e.seed << '\n'
     << "verify_multiplicity = " << (e.verify_multiplicity ? "true" : "false") << '\n'
     << "# reduction\n"
     << "n_min = " << r.n_min << '\n'
     << "p_max = " << format_double(r.p_max) << '\n'
     << "batch = " << r.batch << '\n'
     << "g_bracket_factor = " << format_double(r.g_bracket_factor) << '\n'
     << "lambda_tol = " << format_double(r.lambda_tol_rel) << '\n'
     << "root_method = " << to_string(r.root_method) << '\n'
     << "coarse.fraction = " << format_double(r.coarse_fraction) << '\n'
     << "coarse.above = " << r.coarse_above << '\n'
     << "drift.n_floor = " << cfg.drift_floor << '\n'
     << "# scan\n"
     << "scan.parameter = " << to_string(s.parameter) << '\n'
     << "scan.from = " << format_double(s.from) << '\n'
     << "scan.to = " << format_double(s.to) << '\n'
     << "scan.points = " << s.points << '\n'
     << "scan.rel_tol = " << format_double(s.rel_tol) << '\n';
}

std::string to_text(const RunConfig& cfg) {
  std::ostringstream ss;
  write_config(ss, cfg);
  return ss.str();
}

}  // namespace hsred
