// Exact real-root certification: Sturm chains, root counting, the
// "all zeros real and negative" certificate, global nonnegativity,
// and certified root enclosures.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polystab/polynomial.hpp"

namespace polystab {

// p, p', then negated remainders, computed on the squarefree part of the input.
struct sturm_chain_t {
    std::vector<polynomial> chain;
};

sturm_chain_t sturm_chain(const polynomial& p);

// Open-interval endpoints; nullopt means -inf / +inf. Endpoints that are roots
// of the squarefree part get nudged inward by a deterministic separation-bound
// perturbation. Counts DISTINCT roots.
long long count_real_roots(const polynomial& p, std::optional<rational> lo,
                           std::optional<rational> hi);

enum class root_verdict {
    all_real_negative,
    not_all_real,
    real_but_not_all_negative,
    zero_root,
    vacuous_constant,
};

std::string to_string(root_verdict v);

struct isolating_interval {
    rational lo;
    rational hi;
    unsigned multiplicity = 1;

    bool operator==(const isolating_interval&) const = default;
};

struct root_certificate {
    root_verdict verdict = root_verdict::vacuous_constant;
    long long real_root_count = 0;  // with multiplicity
    long long nonreal_count = 0;    // with multiplicity, always even
    std::vector<isolating_interval> intervals;  // disjoint, one distinct root each

    bool operator==(const root_certificate&) const = default;
};

root_certificate certify_all_real_negative(const polynomial& p);

enum class nonnegativity_verdict { nonnegative_everywhere, attains_negative };

struct nonnegativity_certificate {
    nonnegativity_verdict verdict = nonnegativity_verdict::nonnegative_everywhere;
    std::optional<rational> witness;  // present iff attains_negative; eval(p, witness) < 0
};

nonnegativity_certificate certify_nonnegative(const polynomial& p);

// Disjoint intervals of length <= width, one distinct real root each,
// multiplicities attached; deterministic.
std::vector<isolating_interval> approximate_real_roots(const polynomial& p,
                                                       const rational& width);

}  // namespace polystab
