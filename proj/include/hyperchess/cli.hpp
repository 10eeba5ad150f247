#pragma once

#include <string>

#include "hyperchess/search.hpp"

namespace hyperchess {
namespace cli {

// Serializes a radius/diameter report in "text", "json", or "csv" form.
// Timing is excluded when include_timing is false so reports can be
// compared byte for byte.
std::string emit_report(const RadiusDiameterReport& report, const std::string& format,
                        bool include_timing = true);

// Full command-line entry point. Returns the process exit code:
// 0 success, 1 usage error, 2 infeasible computation or I/O failure,
// 3 check-table mismatch.
int run(int argc, char** argv);

} // namespace cli
} // namespace hyperchess
