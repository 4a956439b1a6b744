#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "qlattice/examples.hpp"
#include "qlattice/states.hpp"

namespace qlat {

struct PropertyResult {
    std::string name;
    int trials = 0;
    int failures = 0;
    double worst_residual = 0.0;
    bool passed() const { return failures == 0; }
};

struct SuiteReport {
    int dim = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<PropertyResult> properties;

    bool all_passed() const {
        for (const auto& p : properties)
            if (!p.passed()) return false;
        return true;
    }
};

namespace suite {

/// Runs the full property battery: symmetry, trace consistency, complement
/// rule, unitary invariance, rank monotonicity, restriction, state sampling,
/// lattice laws, the distributivity-failure witness, and the commuting
/// classification guarantee.
SuiteReport run(int dim, int trials, std::uint64_t seed, const ToleranceConfig& tol = {});

nlohmann::json to_json(const SuiteReport& report);

}  // namespace suite
}  // namespace qlat
