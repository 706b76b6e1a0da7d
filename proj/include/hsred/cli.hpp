#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace hsred {

enum class Command { spectrum, reduce, scan, oracle_check };
std::string_view to_string(Command c) noexcept;
Command parse_command(std::string_view text);  // throws Error(unknown_command)

struct RunManifest {
  Command command = Command::spectrum;
  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;  // overrides the config seed
  bool dump_matrix = false;           // spectrum: also write h1.coo
};

// Runs one command and writes its artifacts into out_dir (created first).
// Returns the process exit status; failures are reported as a JSON object
// on `err` and in out_dir/error.json when the directory is usable.
int execute(const RunManifest& manifest, std::ostream& log, std::ostream& err);

}  // namespace hsred
