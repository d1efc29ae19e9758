// Structured pass/fail outcome of an identity or property suite.
#pragma once

#include <string>

#include "json.hpp"

namespace polystab {

struct verification_report {
    std::string identity;
    nlohmann::json params = nlohmann::json::object();
    bool pass = false;
    // present only on failure: the offending case, exact values included
    nlohmann::json counterexample;
    // op-specific reported outputs (e.g. minimum Toeplitz minor); additive
    nlohmann::json data;

    nlohmann::json to_json() const;
};

}  // namespace polystab
