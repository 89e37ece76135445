#pragma once

#include "gtlie/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gtlie {

struct PropertyResult {
    std::string name;
    bool passed = true;
    json counterexample;  // null when passed
};

struct SuiteReport {
    std::string suite;
    std::vector<PropertyResult> properties;
    /// Extra machine-readable payload (the sign audit table, for instance).
    json details;

    bool passed() const;
    /// {"suite":..., "properties":[{"name":..., "status":"pass|fail", "counterexample":...}]}
    json to_json() const;
};

struct VerifyOptions {
    int n = 2;
    int degree = 6;
    std::uint64_t seed = 1;
    /// Random instances per randomized property.
    int samples = 20;
};

/// hopf, mt, theorem-y, rho, cobracket, cojacobi, sign-audit, all.
const std::vector<std::string>& suite_names();

/// Throws PreconditionError on an unknown suite.
SuiteReport run_suite(const std::string& suite, const VerifyOptions& options);

}  // namespace gtlie
