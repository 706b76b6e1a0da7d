#include <cstdint>
#include <iostream>
#include <string>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "hsred/cli.hpp"
#include "hsred/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Hilbert-space reduction with coupling renormalization for spin ladders"};
  app.require_subcommand(1);

  hsred::RunManifest manifest;
  std::uint64_t seed = 0;
  bool dump_matrix = false;

  const std::pair<const char*, const char*> commands[] = {
      {"spectrum", "lowest eigenpairs of the configured ladder"},
      {"reduce", "reduction trajectory with coupling renormalization"},
      {"scan", "locate the ground-state level crossing"},
      {"oracle-check", "Lanczos against dense diagonalization in every sector"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", manifest.config_path, "key = value configuration file")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--out", manifest.out_dir, "output directory")->required();
    sub->add_option("--seed", seed, "override the Lanczos start-vector seed");
    if (std::string(name) == "spectrum") {
      sub->add_flag("--dump-matrix", dump_matrix, "write h1 in coordinate format to h1.coo");
    }
  }

  if (argc > 1 && argv[1][0] != '-') {
    try {
      hsred::parse_command(argv[1]);
    } catch (const hsred::Error& e) {
      std::cerr << nlohmann::json{{"error", "unknown_command"}, {"message", e.what()}}.dump() << '\n';
      return 2;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << nlohmann::json{{"error", "usage"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  manifest.command = hsred::parse_command(chosen->get_name());
  if (chosen->count("--seed") > 0) manifest.seed = seed;
  manifest.dump_matrix = dump_matrix;
  return hsred::execute(manifest, std::cout, std::cerr);
}
