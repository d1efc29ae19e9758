// Input families: rooted products (guaranteed negative zeros), Jensen
// polynomials, the convergence experiment, and the seeded random corpus.
#pragma once

#include <cstdint>
#include <vector>

#include "polystab/polynomial.hpp"
#include "polystab/report.hpp"

namespace polystab {

// lead * prod (1 + rho_k z) with rho_k > 0: all zeros at -1/rho_k < 0.
struct rooted_product_t {
    std::vector<rational> rhos;
    rational lead = 1;

    polynomial expand() const;
};

polynomial rooted_product(const std::vector<rational>& rhos, const rational& lead);

// g_n(z) = sum_{k=0}^n C(n,k) gamma_k z^k; scaled form g_n(z/n)
polynomial jensen_polynomial(const taylor_data& gammas, unsigned n, bool scaled);

// For each n: apply L^p to g_n(z/n), certify real-negative-rootedness, and track
// per-coefficient exact distance to the limit values (L^p applied to a_k = gamma_k/k!).
verification_report jensen_convergence_report(const taylor_data& gammas, unsigned p,
                                              const std::vector<unsigned>& n_values,
                                              unsigned coeff_window);

// Deterministic given seed; member i reproducible independently (seed, i).
std::vector<rooted_product_t> random_corpus(std::uint64_t seed, unsigned count,
                                            std::pair<int, int> degree_range,
                                            unsigned rho_bound);

}  // namespace polystab
