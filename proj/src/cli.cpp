#include "polystab/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "polystab/json_io.hpp"
#include "polystab/search.hpp"
#include "polystab/suites.hpp"

namespace polystab {

namespace {

nlohmann::json read_input_json(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        std::stringstream buf;
        buf << in.rdbuf();
        return nlohmann::json::parse(buf.str());
    }
    return nlohmann::json::parse(arg);
}

mu_sequence parse_mu_csv(const std::string& csv) {
    mu_sequence mu;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) mu.mus.push_back(parse_rational(item));
    return mu;
}

operator_spec build_spec(const std::string& kind, std::optional<unsigned> p,
                         std::optional<unsigned> r, const std::optional<std::string>& mu_csv) {
    if (kind == "Lkp") {
        if (!p) throw invalid_parameter_error("Lkp needs --p");
        return lkp_op{*p};
    }
    if (kind == "Sr") {
        if (!r) throw invalid_parameter_error("Sr needs --r");
        return sr_op{*r};
    }
    if (kind == "Tmu") {
        if (!mu_csv) throw invalid_parameter_error("Tmu needs --mu");
        return tmu_op{parse_mu_csv(*mu_csv)};
    }
    throw invalid_parameter_error("unknown operator kind: " + kind);
}

search_config load_search_config(const std::string& path) {
    search_config config;
    if (path.empty()) return config;
    std::ifstream in(path);
    if (!in) throw invalid_parameter_error("cannot read config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto j = nlohmann::json::parse(buf.str());
    if (j.contains("degree_lo")) config.degree_lo = j.at("degree_lo").get<int>();
    if (j.contains("degree_hi")) config.degree_hi = j.at("degree_hi").get<int>();
    if (j.contains("rho_bound")) config.rho_bound = j.at("rho_bound").get<unsigned>();
    if (j.contains("perturb_denominator"))
        config.perturb_denominator = j.at("perturb_denominator").get<unsigned>();
    if (j.contains("pow_a")) config.pow_a = j.at("pow_a").get<std::vector<int>>();
    if (j.contains("pow_c")) config.pow_c = j.at("pow_c").get<std::vector<int>>();
    if (j.contains("jensen_n")) config.jensen_n = j.at("jensen_n").get<std::vector<unsigned>>();
    if (j.contains("pow_b")) {
        config.pow_b.clear();
        for (const auto& s : j.at("pow_b")) config.pow_b.push_back(parse_rational(s.get<std::string>()));
    }
    return config;
}

void print_reports(const std::vector<verification_report>& reports, bool json_mode,
                   std::ostream& out) {
    if (json_mode) {
        auto arr = nlohmann::json::array();
        for (const auto& rep : reports) arr.push_back(rep.to_json());
        out << arr.dump(2) << '\n';
        return;
    }
    for (const auto& rep : reports) {
        out << rep.identity << ": " << (rep.pass ? "PASS" : "FAIL");
        if (rep.data.contains("cases")) out << " (" << rep.data.at("cases").get<unsigned>() << " cases)";
        out << '\n';
        if (!rep.pass && !rep.counterexample.is_null())
            out << "  counterexample: " << rep.counterexample.dump() << '\n';
    }
}

std::vector<verification_report> run_suites(const std::string& suite,
                                            std::optional<std::uint64_t> seed,
                                            std::optional<unsigned> max) {
    auto need_seed = [&]() -> std::uint64_t {
        if (!seed) throw invalid_parameter_error("suite '" + suite + "' needs --seed");
        return *seed;
    };
    if (suite == "szily") return {suite_szily(max.value_or(10))};
    if (suite == "hyper") return {suite_hyper(max.value_or(12), 5)};
    if (suite == "jacobi") return {suite_jacobi(max.value_or(12), 5)};
    if (suite == "symfun") return {suite_symfun(need_seed(), 4, max.value_or(6), 20)};
    if (suite == "prop51") return {suite_prop51(need_seed(), max.value_or(200), 5)};
    if (suite == "turan") return {suite_turan(need_seed(), max.value_or(100), 6, 4)};
    if (suite == "toeplitz") return {suite_toeplitz(need_seed(), max.value_or(50), 3, 3, 12)};
    if (suite == "all") {
        const std::uint64_t s = need_seed();
        return {suite_szily(10),
                suite_hyper(12, 5),
                suite_jacobi(12, 5),
                suite_symfun(s, 4, 6, 20),
                suite_prop51(s, 200, 5),
                suite_turan(s, 100, 6, 4),
                suite_toeplitz(s, 50, 3, 3, 12)};
    }
    throw invalid_parameter_error("unknown suite: " + suite);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact stability certification for coefficient operators"};
    app.require_subcommand(1);

    std::string output = "text";
    std::string config_path;
    app.add_option("--output", output)->check(CLI::IsMember({"json", "text"}));
    app.add_option("--config", config_path);

    std::string op_kind, input_arg, mu_csv, suite, degree_spec, strategy_name = "random",
                                               records_path = "search_records.jsonl";
    unsigned p_val = 0, r_val = 0, max_val = 0, count_val = 0, rho_bound = 20;
    std::uint64_t seed_val = 0;
    long long budget_count = 0;

    auto* apply_cmd = app.add_subcommand("apply", "apply an operator to a polynomial");
    apply_cmd->fallthrough();
    apply_cmd->add_option("--op", op_kind)->required();
    auto* p_opt = apply_cmd->add_option("--p", p_val);
    auto* r_opt = apply_cmd->add_option("--r", r_val);
    auto* mu_opt = apply_cmd->add_option("--mu", mu_csv);
    apply_cmd->add_option("--input", input_arg)->required();

    auto* certify_cmd = app.add_subcommand("certify", "certify all zeros real and negative");
    certify_cmd->fallthrough();
    certify_cmd->add_option("--input", input_arg)->required();

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->fallthrough();
    verify_cmd->add_option("--suite", suite)->required();
    auto* vmax_opt = verify_cmd->add_option("--max", max_val);
    auto* vseed_opt = verify_cmd->add_option("--seed", seed_val);

    auto* reproduce_cmd = app.add_subcommand("reproduce", "recompute the worked examples");
    reproduce_cmd->fallthrough();

    auto* search_cmd = app.add_subcommand("search", "hunt for stability counterexamples");
    search_cmd->fallthrough();
    search_cmd->add_option("--op", op_kind)->required();
    auto* sp_opt = search_cmd->add_option("--p", p_val);
    auto* sr_opt = search_cmd->add_option("--r", r_val);
    auto* smu_opt = search_cmd->add_option("--mu", mu_csv);
    auto* sseed_opt = search_cmd->add_option("--seed", seed_val);
    auto* budget_opt = search_cmd->add_option("--budget", budget_count);
    search_cmd->add_option("--strategy", strategy_name)
        ->check(CLI::IsMember({"random", "structured"}));
    search_cmd->add_option("--records", records_path);

    auto* corpus_cmd = app.add_subcommand("corpus", "emit a seeded rooted-product corpus");
    corpus_cmd->fallthrough();
    auto* cseed_opt = corpus_cmd->add_option("--seed", seed_val);
    corpus_cmd->add_option("--count", count_val)->required();
    corpus_cmd->add_option("--degree", degree_spec)->required();
    corpus_cmd->add_option("--rho-bound", rho_bound);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    const bool json_mode = output == "json";
    try {
        if (apply_cmd->parsed()) {
            const auto spec = build_spec(
                op_kind, p_opt->count() ? std::optional(p_val) : std::nullopt,
                r_opt->count() ? std::optional(r_val) : std::nullopt,
                mu_opt->count() ? std::optional(mu_csv) : std::nullopt);
            const polynomial result =
                apply_operator(polynomial_from_json(read_input_json(input_arg)), spec);
            if (json_mode)
                out << to_json(result).dump() << '\n';
            else
                out << result << '\n';
            return 0;
        }

        if (certify_cmd->parsed()) {
            const auto cert = certify_all_real_negative(polynomial_from_json(read_input_json(input_arg)));
            if (json_mode) {
                out << to_json(cert).dump() << '\n';
            } else {
                out << to_string(cert.verdict) << "  real=" << cert.real_root_count
                    << " nonreal=" << cert.nonreal_count << '\n';
                for (const auto& iv : cert.intervals)
                    out << "  (" << to_string(iv.lo) << ", " << to_string(iv.hi)
                        << ") x" << iv.multiplicity << '\n';
            }
            return cert.verdict == root_verdict::all_real_negative ||
                           cert.verdict == root_verdict::vacuous_constant
                       ? 0
                       : 1;
        }

        if (verify_cmd->parsed()) {
            const auto reports =
                run_suites(suite, vseed_opt->count() ? std::optional(seed_val) : std::nullopt,
                           vmax_opt->count() ? std::optional(max_val) : std::nullopt);
            print_reports(reports, json_mode, out);
            for (const auto& rep : reports)
                if (!rep.pass) return 1;
            return 0;
        }

        if (reproduce_cmd->parsed()) {
            const auto reports = reproduce_examples();
            print_reports(reports, json_mode, out);
            for (const auto& rep : reports)
                if (!rep.pass) return 1;
            return 0;
        }

        if (search_cmd->parsed()) {
            if (!sseed_opt->count()) throw invalid_parameter_error("search needs --seed");
            if (!budget_opt->count()) throw invalid_parameter_error("search needs --budget");
            const auto spec = build_spec(
                op_kind, sp_opt->count() ? std::optional(p_val) : std::nullopt,
                sr_opt->count() ? std::optional(r_val) : std::nullopt,
                smu_opt->count() ? std::optional(mu_csv) : std::nullopt);
            const auto strategy = strategy_name == "structured" ? search_strategy::structured
                                                                : search_strategy::random;
            const auto records =
                counterexample_search(spec, seed_val, {budget_count, 0.0}, strategy,
                                      load_search_config(config_path));

            std::ofstream record_file(records_path, std::ios::app);
            if (!record_file) throw invalid_parameter_error("cannot open records file: " + records_path);
            for (const auto& rec : records) record_file << to_json(rec).dump() << '\n';

            if (json_mode) {
                auto arr = nlohmann::json::array();
                for (const auto& rec : records) arr.push_back(to_json(rec));
                out << arr.dump(2) << '\n';
            } else {
                out << "records found: " << records.size() << '\n';
            }
            return records.empty() ? 0 : 1;
        }

        if (corpus_cmd->parsed()) {
            if (!cseed_opt->count()) throw invalid_parameter_error("corpus needs --seed");
            const auto colon = degree_spec.find(':');
            if (colon == std::string::npos)
                throw invalid_parameter_error("--degree expects LO:HI");
            const int lo = std::stoi(degree_spec.substr(0, colon));
            const int hi = std::stoi(degree_spec.substr(colon + 1));
            for (const auto& member : random_corpus(seed_val, count_val, {lo, hi}, rho_bound)) {
                auto rhos = nlohmann::json::array();
                for (const auto& rho : member.rhos) rhos.push_back(to_string(rho));
                out << nlohmann::json{{"rhos", rhos}, {"lead", to_string(member.lead)}}.dump()
                    << '\n';
            }
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace polystab
