#include "polystab/batch.hpp"

#include <exception>

#include "polystab/identities.hpp"

namespace polystab {

namespace {

certified_application certify_one(const polynomial& input, const operator_spec& spec) {
    certified_application item;
    item.input = input;
    item.output = apply_operator(input, spec);
    item.certificate = certify_all_real_negative(item.output);
    return item;
}

}  // namespace

std::vector<certified_application> certify_corpus_serial(
    const std::vector<rooted_product_t>& corpus, const operator_spec& spec) {
    std::vector<certified_application> out;
    out.reserve(corpus.size());
    for (const auto& member : corpus) out.push_back(certify_one(member.expand(), spec));
    return out;
}

std::vector<certified_application> certify_corpus(const std::vector<rooted_product_t>& corpus,
                                                  const operator_spec& spec) {
    const long long n = (long long)corpus.size();
    std::vector<polynomial> inputs((std::size_t)n);
    for (long long i = 0; i < n; ++i) inputs[(std::size_t)i] = corpus[(std::size_t)i].expand();

    std::vector<certified_application> out((std::size_t)n);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) {
        try {
            out[(std::size_t)i] = certify_one(inputs[(std::size_t)i], spec);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::vector<bool> scan_corpus_minors_serial(const std::vector<polynomial>& outputs,
                                            unsigned max_order, unsigned window) {
    std::vector<bool> flags;
    flags.reserve(outputs.size());
    for (const auto& q : outputs)
        flags.push_back(toeplitz_minor_scan(q.coeffs(), max_order, window).pass);
    return flags;
}

std::vector<bool> scan_corpus_minors(const std::vector<polynomial>& outputs, unsigned max_order,
                                     unsigned window) {
    if (max_order < 1) throw invalid_parameter_error("need max_order >= 1");
    if (max_order > window) throw invalid_parameter_error("window smaller than max_order");
    const long long n = (long long)outputs.size();
    std::vector<unsigned char> flags((std::size_t)n, 0);  // vector<bool> is not write-safe across threads
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i)
        flags[(std::size_t)i] =
            toeplitz_minor_scan(outputs[(std::size_t)i].coeffs(), max_order, window).pass ? 1 : 0;
    return std::vector<bool>(flags.begin(), flags.end());
}

}  // namespace polystab
