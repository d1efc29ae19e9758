#include "polystab/report.hpp"

namespace polystab {

nlohmann::json verification_report::to_json() const {
    nlohmann::json j = {{"identity", identity}, {"params", params}, {"pass", pass}, {"data", data}};
    if (!counterexample.is_null()) j["counterexample"] = counterexample;
    return j;
}

}  // namespace polystab
