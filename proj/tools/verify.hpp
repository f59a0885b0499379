#pragma once

#include "multizeta/special.hpp"

#include <string>
#include <vector>

namespace multizeta::cli {

struct Check {
    std::string suite;
    std::string name;
    bool pass = false;
    double margin = 0.0;  ///< suite-specific figure of merit, reported as is
    std::string detail;
};

struct VerifyOptions {
    int r_max = -1;  ///< -1 selects the suite default
    int k_max = -1;
    int per_side = 64;
};

std::vector<Check> verify_rouche(const VerifyOptions& opt, const ZetaParams& params);
std::vector<Check> verify_asymptotics(const VerifyOptions& opt, const ZetaParams& params);
std::vector<Check> verify_conjectures(const VerifyOptions& opt, const ZetaParams& params);

}  // namespace multizeta::cli
