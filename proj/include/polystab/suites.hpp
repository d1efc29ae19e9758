// Named verification suites: each bundles one family of checks into a single
// report. The CLI `verify` subcommand and the acceptance runner share these so
// a pass on the command line and a pass in CI mean the same computation.
#pragma once

#include <cstdint>
#include <vector>

#include "polystab/report.hpp"

namespace polystab {

// Convolution identity for binomial products, exhaustive over 0 <= b <= a <= max_a.
verification_report suite_szily(unsigned max_a);

// Coefficient-wise equality of the auxiliary polynomials with their
// terminating hypergeometric form, n <= max_n, p <= max_p.
verification_report suite_hyper(unsigned max_n, unsigned max_p);

// Real-negative-rootedness of the auxiliary polynomials plus the Jacobi
// substitution identity at floor(n/2)+3 deterministic sample points,
// including the certified root-map check.
verification_report suite_jacobi(unsigned max_n, unsigned max_p);

// Symmetric-function identity on random nonzero tuples, p <= max_p,
// n <= max_n, `tuples` draws per (n, p); also pins the gamma transform of the
// operator mu-sequences to half super Catalan numbers.
verification_report suite_symfun(std::uint64_t seed, unsigned max_p, unsigned max_n,
                                 unsigned tuples);

// Weighted S_r decomposition of L^p on random inputs plus the weight sums.
verification_report suite_prop51(std::uint64_t seed, unsigned count, unsigned max_p);

// Laguerre-expression cross-check of the extended Turan values on random
// polynomials, derivative order <= max_k, p <= max_p.
verification_report suite_turan(std::uint64_t seed, unsigned count, unsigned max_k,
                                unsigned max_p);

// Toeplitz minor scan over operator images of corpus members.
verification_report suite_toeplitz(std::uint64_t seed, unsigned members, unsigned max_p,
                                   unsigned max_order, unsigned window);

// Stability sweep: operator images of seeded rooted products all certify
// real-negative-rooted, p <= max_p.
verification_report suite_stability_images(std::uint64_t seed, unsigned count, unsigned max_p);

// Fixed worked examples with exact expected values; deterministic.
std::vector<verification_report> reproduce_examples();

}  // namespace polystab
