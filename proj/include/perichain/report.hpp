#pragma once

#include <map>
#include <string>

namespace perichain {

/// Result of one named check. Exact arithmetic leaves no room for
/// tolerances: pass holds iff the residual operator has empty support.
/// residual_support counts its nonzero entries (a debugging aid on failure).
struct VerificationReport {
    std::string check;
    bool pass = false;
    long residual_support = 0;
    std::map<std::string, std::string> params;
    std::string rep;
    unsigned long long seed = 0;
    double elapsed_seconds = 0.0; // in-memory only; excluded from the JSON schema
};

} // namespace perichain
