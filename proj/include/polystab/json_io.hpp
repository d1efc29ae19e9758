// JSON (de)serialization: polynomials as {"coeffs": ["1","3","-1/2"]} with
// canonical rational strings (bit-exact round-trip), certificates, operator
// specs, and search records.
#pragma once

#include <string>

#include "json.hpp"
#include "polystab/rootcert.hpp"
#include "polystab/search.hpp"

namespace polystab {

nlohmann::json to_json(const polynomial& p);
polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const root_certificate& cert);
nlohmann::json to_json(const nonnegativity_certificate& cert);

nlohmann::json to_json(const operator_spec& spec);
operator_spec operator_spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const search_record& rec);
search_record search_record_from_json(const nlohmann::json& j);

}  // namespace polystab
