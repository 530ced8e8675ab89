#pragma once

#include <string>
#include <vector>

#include "orbitlab/maps/divisor.hpp"

namespace orbitlab::cli {

struct CheckResult {
    std::string label;
    bool pass = false;
    std::string detail;
};

struct ExampleReport {
    std::string name;
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    bool passed() const;
    /// nullptr when everything passed
    const CheckResult* first_failure() const;
};

const std::vector<std::string>& example_names();
bool is_example(const std::string& name);

/// Runs the example's full assertion list.  Throws InputError for an unknown name.
ExampleReport verify_example(const std::string& name);

// Example data shared with the acceptance suite.
maps::SelfMap schmidt_map();
maps::SelfMap schmidt_high_map();
maps::SelfMap vojtasemi_map();
maps::SelfMap archs_map();
maps::SelfMap bad_map();
maps::SelfMap ratl_wo_dratio_map();
/// offset 2 is the published choice a = 4i+2+j
maps::SelfMap dratio_map(unsigned d = 5, long offset = 2);
maps::SelfMap silverman_map();

/// X + iY + i^2 Z, i = 1..4
std::vector<maps::LinearForm> ratl_wo_dratio_lines();
/// L_{i,j} = sum a^k X_k with a = 4i + offset + j, j = 1..d-1
std::vector<maps::LinearForm> dratio_lines(unsigned i, unsigned d = 5, long offset = 2);
/// M_k = X0 + X1 + X2 + X3 - X_k
maps::LinearForm dratio_m(unsigned k);

}  // namespace orbitlab::cli
