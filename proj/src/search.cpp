#include "polystab/search.hpp"

#include <chrono>
#include <ctime>
#include <variant>

#include "polystab/rng.hpp"

namespace polystab {

namespace {

std::string now_iso8601() {
    const std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

// fixed grid of (1+x)^a (1+bx)^c products followed by perturbed Jensen
// polynomials; every candidate is screened before it counts as a test
std::vector<polynomial> structured_candidates(std::uint64_t seed, const search_config& config) {
    std::vector<polynomial> out;
    for (const int a : config.pow_a) {
        for (const auto& b : config.pow_b) {
            for (const int c : config.pow_c) {
                polynomial q = polynomial::constant(1);
                for (int i = 0; i < a; ++i) q = mul(q, polynomial({rational(1), rational(1)}));
                for (int i = 0; i < c; ++i) q = mul(q, polynomial({rational(1), b}));
                out.push_back(std::move(q));
            }
        }
    }
    splitmix64 gen(member_seed(seed, 0x6a656e73u));  // jensen substream
    for (const unsigned n : config.jensen_n) {
        taylor_data gammas;
        gammas.gammas.reserve(n + 1);
        for (unsigned k = 0; k <= n; ++k) {
            const long delta = (long)gen.uniform(0, 2) - 1;
            rational g(integer((long)config.perturb_denominator + delta),
                       integer((long)config.perturb_denominator));
            g.canonicalize();
            gammas.gammas.push_back(std::move(g));
        }
        out.push_back(jensen_polynomial(gammas, n, false));
    }
    return out;
}

}  // namespace

std::vector<search_record> counterexample_search(const operator_spec& spec, std::uint64_t seed,
                                                 const search_budget& budget,
                                                 search_strategy strategy,
                                                 const search_config& config) {
    if (std::holds_alternative<tmu_op>(spec))
        throw invalid_parameter_error("search drives Lkp and Sr specs only");
    if (budget.count <= 0 && budget.seconds <= 0)
        throw invalid_parameter_error("budget is empty");

    const auto deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(budget.seconds));
    auto exhausted = [&](long long tested) {
        if (budget.count > 0) return tested >= budget.count;
        return std::chrono::steady_clock::now() >= deadline;
    };

    std::vector<polynomial> prefix;
    if (strategy == search_strategy::structured) prefix = structured_candidates(seed, config);

    std::vector<rooted_product_t> corpus;
    std::size_t next = 0;
    auto next_candidate = [&]() -> polynomial {
        if (next < prefix.size()) return prefix[next++];
        const std::size_t index = next++ - prefix.size();
        while (index >= corpus.size())  // prefix-stable regrowth
            corpus = random_corpus(seed, (unsigned)std::max<std::size_t>(64, corpus.size() * 2),
                                   {config.degree_lo, config.degree_hi}, config.rho_bound);
        return corpus[index].expand();
    };

    std::vector<search_record> records;
    long long tested = 0;
    while (!exhausted(tested)) {
        const polynomial candidate = next_candidate();
        // only certified members of the class are admissible tests
        if (certify_all_real_negative(candidate).verdict != root_verdict::all_real_negative)
            continue;
        ++tested;
        const auto cert = certify_all_real_negative(apply_operator(candidate, spec));
        if (cert.verdict == root_verdict::all_real_negative) continue;
        records.push_back({spec, candidate, cert, seed, now_iso8601()});
    }
    return records;
}

bool revalidate(const search_record& rec) {
    try {
        if (certify_all_real_negative(rec.input).verdict != root_verdict::all_real_negative)
            return false;
        return certify_all_real_negative(apply_operator(rec.input, rec.op)) == rec.certificate;
    } catch (...) {
        return false;
    }
}

}  // namespace polystab
