#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "hsred/criticality.hpp"
#include "hsred/eigensolver.hpp"
#include "hsred/hamiltonian.hpp"
#include "hsred/reduction.hpp"

namespace hsred {

// Everything a CLI run needs. Read from flat "key = value" text; '#' starts a
// comment. Unknown keys are rejected.
struct RunConfig {
  LadderConfig ladder;
  EigenOptions eigen;
  ReductionOptions reduction;
  ScanSpec scan;
  std::size_t drift_floor = 100;  // n_floor reported in the reduce summary
};

RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

// Writes every key with its resolved value; parse_config of the output
// reproduces `cfg` exactly.
void write_config(std::ostream& os, const RunConfig& cfg);
std::string to_text(const RunConfig& cfg);

// Shortest round-trip decimal form used by every artifact writer.
std::string format_double(double v);

}  // namespace hsred
