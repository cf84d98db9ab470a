#ifndef ORBITLAB_CLI_HPP
#define ORBITLAB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "orbitlab/json_io.hpp"

namespace orbitlab {

inline constexpr const char* kSchemaVersion = "1.0";

// Runs one `orbitlab` command. The JSON report goes to `out`, a short human
// summary to `err`. Returns 0 when every certificate holds, 1 when one does
// not, 2 on a usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// The report with its "timing" field removed, for byte comparisons.
Json without_timing(Json report);

}  // namespace orbitlab

#endif  // ORBITLAB_CLI_HPP
