#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace multizeta::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kVerifyFailed = 3 };

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// %.17g, lowercase exponent; non-finite values become "nan"/"inf"/"-inf".
std::string format_double(double x);

// Sorted keys, two-space indent, floats through format_double (non-finite as null).
std::string dump_json(const nlohmann::json& j);

}  // namespace multizeta::cli
