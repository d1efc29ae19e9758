#include "polystab/json_io.hpp"

#include <variant>

namespace polystab {

namespace {

nlohmann::json rational_strings(const std::vector<rational>& xs) {
    auto arr = nlohmann::json::array();
    for (const auto& x : xs) arr.push_back(to_string(x));
    return arr;
}

std::vector<rational> rationals_of(const nlohmann::json& arr) {
    std::vector<rational> xs;
    xs.reserve(arr.size());
    for (const auto& s : arr) xs.push_back(parse_rational(s.get<std::string>()));
    return xs;
}

root_verdict verdict_from_string(const std::string& s) {
    if (s == "all_real_negative") return root_verdict::all_real_negative;
    if (s == "not_all_real") return root_verdict::not_all_real;
    if (s == "real_but_not_all_negative") return root_verdict::real_but_not_all_negative;
    if (s == "zero_root") return root_verdict::zero_root;
    if (s == "vacuous_constant") return root_verdict::vacuous_constant;
    throw invalid_parameter_error("unknown verdict: " + s);
}

root_certificate certificate_from_json(const nlohmann::json& j) {
    root_certificate cert;
    cert.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    cert.real_root_count = j.at("real_root_count").get<long long>();
    cert.nonreal_count = j.at("nonreal_count").get<long long>();
    for (const auto& iv : j.at("intervals"))
        cert.intervals.push_back({parse_rational(iv.at("lo").get<std::string>()),
                                  parse_rational(iv.at("hi").get<std::string>()),
                                  iv.at("multiplicity").get<unsigned>()});
    return cert;
}

}  // namespace

nlohmann::json to_json(const polynomial& p) {
    return {{"coeffs", rational_strings(p.coeffs())}};
}

polynomial polynomial_from_json(const nlohmann::json& j) {
    return polynomial(rationals_of(j.at("coeffs")));
}

nlohmann::json to_json(const root_certificate& cert) {
    auto intervals = nlohmann::json::array();
    for (const auto& iv : cert.intervals)
        intervals.push_back({{"lo", to_string(iv.lo)},
                             {"hi", to_string(iv.hi)},
                             {"multiplicity", iv.multiplicity}});
    return {{"verdict", to_string(cert.verdict)},
            {"real_root_count", cert.real_root_count},
            {"nonreal_count", cert.nonreal_count},
            {"intervals", intervals}};
}

nlohmann::json to_json(const nonnegativity_certificate& cert) {
    nlohmann::json j = {{"verdict", cert.verdict == nonnegativity_verdict::nonnegative_everywhere
                                        ? "nonnegative_everywhere"
                                        : "attains_negative"}};
    if (cert.witness) j["witness"] = to_string(*cert.witness);
    return j;
}

nlohmann::json to_json(const operator_spec& spec) {
    return std::visit(
        [](const auto& op) -> nlohmann::json {
            using T = std::decay_t<decltype(op)>;
            if constexpr (std::is_same_v<T, lkp_op>)
                return {{"kind", "Lkp"}, {"p", op.p}};
            else if constexpr (std::is_same_v<T, sr_op>)
                return {{"kind", "Sr"}, {"r", op.r}};
            else
                return {{"kind", "Tmu"}, {"mu", rational_strings(op.mu.mus)}};
        },
        spec);
}

operator_spec operator_spec_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "Lkp") return lkp_op{j.at("p").get<unsigned>()};
    if (kind == "Sr") return sr_op{j.at("r").get<unsigned>()};
    if (kind == "Tmu") return tmu_op{mu_sequence{rationals_of(j.at("mu"))}};
    throw invalid_parameter_error("unknown operator kind: " + kind);
}

nlohmann::json to_json(const search_record& rec) {
    return {{"op", to_json(rec.op)},
            {"input", to_json(rec.input)},
            {"certificate", to_json(rec.certificate)},
            {"seed", rec.seed},
            {"found_at", rec.found_at}};
}

search_record search_record_from_json(const nlohmann::json& j) {
    search_record rec;
    rec.op = operator_spec_from_json(j.at("op"));
    rec.input = polynomial_from_json(j.at("input"));
    rec.certificate = certificate_from_json(j.at("certificate"));
    rec.seed = j.at("seed").get<std::uint64_t>();
    rec.found_at = j.at("found_at").get<std::string>();
    return rec;
}

}  // namespace polystab
