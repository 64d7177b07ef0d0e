#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "lucas/congruence.hpp"
#include "lucas/primality.hpp"
#include "lucas/residue.hpp"
#include "lucas/scan.hpp"

namespace lucas::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

using Json = nlohmann::ordered_json;

// Big integers are always emitted as decimal strings.
Json to_json(const ResidueClass& r);
Json to_json(const ModResult& r);
Json to_json(const CongruenceReport& report);
Json to_json(const PrimalityVerdict& verdict, bool with_timing);
Json to_json(const DivisorSumBreakdown& breakdown);
Json to_json(const ScanReport& report, bool with_timing);

/// Runs the command line (args excludes the program name). Data goes to
/// out as JSON lines, diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lucas::cli
