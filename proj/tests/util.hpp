// Shared test helpers: terse constructors and seeded random inputs.
#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "polystab/families.hpp"
#include "polystab/polynomial.hpp"
#include "polystab/rng.hpp"

namespace polystab::testutil {

inline rational Q(const std::string& s) { return parse_rational(s); }

inline polynomial P(std::initializer_list<std::string> coeffs) {
    std::vector<rational> c;
    for (const auto& s : coeffs) c.push_back(parse_rational(s));
    return polynomial(std::move(c));
}

// (1+x)^n
inline polynomial binomial_power(unsigned n) {
    polynomial p = polynomial::constant(1);
    const polynomial onex = P({"1", "1"});
    for (unsigned i = 0; i < n; ++i) p = mul(p, onex);
    return p;
}

// Random polynomial with integer coefficients in [lo, hi], exact degree `deg`.
inline polynomial random_int_poly(splitmix64& gen, unsigned deg, int lo, int hi) {
    std::vector<rational> c(deg + 1);
    for (unsigned k = 0; k <= deg; ++k)
        c[k] = rational(static_cast<long>(lo + static_cast<long long>(gen.uniform(0, hi - lo))));
    while (c[deg] == 0) c[deg] = rational(static_cast<long>(lo + static_cast<long long>(gen.uniform(0, hi - lo))));
    return polynomial(std::move(c));
}

// Nonzero random rational with numerator in [-9,9]\{0}, denominator in [1,9].
inline rational random_nonzero_rational(splitmix64& gen) {
    long num = 0;
    while (num == 0) num = static_cast<long>(gen.uniform(0, 18)) - 9;
    const long den = static_cast<long>(gen.uniform(1, 9));
    rational q(num, den);
    q.canonicalize();
    return q;
}

// Positive random rational with numerator/denominator in [1, bound].
inline rational random_positive_rational(splitmix64& gen, unsigned bound) {
    rational q(static_cast<long>(gen.uniform(1, bound)), static_cast<long>(gen.uniform(1, bound)));
    q.canonicalize();
    return q;
}

// lead * prod(1 + rho x) with random positive rho; all zeros real and negative.
inline polynomial random_rooted_product(splitmix64& gen, unsigned deg, unsigned rho_bound = 9) {
    std::vector<rational> rhos;
    for (unsigned i = 0; i < deg; ++i) rhos.push_back(random_positive_rational(gen, rho_bound));
    return rooted_product(rhos, random_positive_rational(gen, rho_bound));
}

}  // namespace polystab::testutil
