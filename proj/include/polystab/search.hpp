// Counterexample search: feed negative-rooted inputs to an operator, certify
// the outputs, and record any stability failure with enough data to replay it.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polystab/batch.hpp"
#include "polystab/report.hpp"

namespace polystab {

struct search_record {
    operator_spec op;
    polynomial input;
    root_certificate certificate;  // of the operator output; never all_real_negative
    std::uint64_t seed = 0;
    std::string found_at;  // ISO-8601, informational only
};

enum class search_strategy { random, structured };

struct search_budget {
    // exactly one is active; count <= 0 means "use seconds"
    long long count = 0;
    double seconds = 0;
};

// Structured family grids (configuration, not code): (1+x)^a (1+bx)^c products
// and perturbed Jensen polynomials.
struct search_config {
    std::vector<int> pow_a = {1, 2, 3, 4, 5, 6};
    std::vector<int> pow_c = {1, 2, 3};
    std::vector<rational> pow_b = {rational(2), rational(3), rational(1, 2),
                                   rational(5), rational(1, 3), rational(7)};
    std::vector<unsigned> jensen_n = {4, 6, 8, 10, 12};
    unsigned perturb_denominator = 8;  // gamma_k *= 1 + delta/den, delta in [-1,1]
    int degree_lo = 1;
    int degree_hi = 12;
    unsigned rho_bound = 20;
};

std::vector<search_record> counterexample_search(const operator_spec& spec,
                                                 std::uint64_t seed,
                                                 const search_budget& budget,
                                                 search_strategy strategy,
                                                 const search_config& config = {});

// A record is valid iff its input certifies all_real_negative and re-applying
// the operator reproduces the stored certificate exactly.
bool revalidate(const search_record& rec);

}  // namespace polystab
