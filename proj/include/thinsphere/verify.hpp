#pragma once

// Mechanical checks of the thin-position results on one triangulation.

#include <string>
#include <vector>

#include "thinsphere/analysis.hpp"

namespace thinsphere {

struct VerifyOptions {
    int bound = 12;          // exhaustive search up to this many faces, branch-and-bound beyond
    bool all_thin = false;   // check every width-optimal ordering, not just the returned one
    std::size_t all_thin_limit = 5000;
};

struct VerificationRecord {
    std::string theorem;
    std::string instance;
    bool verified = false;
    std::string witness;
};

/// Row names, in the order verify_instance emits them.
const std::vector<std::string>& theorem_names();

std::vector<VerificationRecord> verify_instance(const std::string& name, const Triangulation& t,
                                                const VerifyOptions& options = {});

}  // namespace thinsphere
