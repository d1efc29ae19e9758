// Batch kernels over corpora: OpenMP-parallel sweeps with serial reference
// implementations kept for testing. Per-item work is pure; results are
// collected in input order so parallel and serial agree element-wise.
#pragma once

#include <cstdint>
#include <vector>

#include "polystab/families.hpp"
#include "polystab/operators.hpp"
#include "polystab/rootcert.hpp"

namespace polystab {

struct certified_application {
    polynomial input;
    polynomial output;
    root_certificate certificate;
};

// Applies `spec` to every expanded member and certifies the output.
std::vector<certified_application> certify_corpus(const std::vector<rooted_product_t>& corpus,
                                                  const operator_spec& spec);
std::vector<certified_application> certify_corpus_serial(
    const std::vector<rooted_product_t>& corpus, const operator_spec& spec);

// Toeplitz minor scans over apply-outputs; returns per-member pass flags.
std::vector<bool> scan_corpus_minors(const std::vector<polynomial>& outputs,
                                     unsigned max_order, unsigned window);
std::vector<bool> scan_corpus_minors_serial(const std::vector<polynomial>& outputs,
                                            unsigned max_order, unsigned window);

}  // namespace polystab
