#include "polystab/suites.hpp"

#include "polystab/batch.hpp"
#include "polystab/identities.hpp"
#include "polystab/rng.hpp"
#include "polystab/rootcert.hpp"

namespace polystab {

namespace {

rational random_nonzero(splitmix64& gen) {
    rational x(integer(1 + gen.uniform(0, 8)), integer(1 + gen.uniform(0, 3)));
    x.canonicalize();
    return gen.uniform(0, 1) ? -x : x;
}

polynomial random_int_poly(splitmix64& gen, unsigned degree, int lo, int hi) {
    std::vector<rational> c(degree + 1);
    for (auto& x : c) x = rational((long)lo + (long)gen.uniform(0, (std::uint64_t)(hi - lo)));
    while (c[degree] == 0)
        c[degree] = rational((long)lo + (long)gen.uniform(0, (std::uint64_t)(hi - lo)));
    return polynomial(std::move(c));
}

nlohmann::json coeff_strings(const polynomial& p) {
    auto arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
    return arr;
}

}  // namespace

verification_report suite_szily(unsigned max_a) {
    verification_report rep;
    rep.identity = "szily";
    rep.params = {{"max_a", max_a}};
    rep.pass = true;
    unsigned cases = 0;
    for (unsigned a = 0; a <= max_a && rep.pass; ++a)
        for (unsigned b = 0; b <= a && rep.pass; ++b) {
            const auto sub = szily_check(a, b);
            ++cases;
            if (!sub.pass) {
                rep.pass = false;
                rep.counterexample = sub.counterexample;
                rep.counterexample["a"] = a;
                rep.counterexample["b"] = b;
            }
        }
    rep.data = {{"cases", cases}};
    return rep;
}

verification_report suite_hyper(unsigned max_n, unsigned max_p) {
    verification_report rep;
    rep.identity = "hypergeometric_form";
    rep.params = {{"max_n", max_n}, {"max_p", max_p}};
    rep.pass = true;
    unsigned cases = 0;
    for (unsigned p = 1; p <= max_p && rep.pass; ++p)
        for (unsigned n = 1; n <= max_n && rep.pass; ++n) {
            const polynomial f = gauss_2f1_truncated(
                rational(-(long)n, 2), rational(1 - (long)n, 2), rational(p + 1), rational(4), n);
            const polynomial expected = q_polynomial(n, p);
            ++cases;
            if (scale(f, rational(binomial(2 * p - 1, p))) != expected) {
                rep.pass = false;
                rep.counterexample = {{"n", n}, {"p", p}, {"got", coeff_strings(f)}};
            }
        }
    rep.data = {{"cases", cases}};
    return rep;
}

verification_report suite_jacobi(unsigned max_n, unsigned max_p) {
    verification_report rep;
    rep.identity = "jacobi_relation";
    rep.params = {{"max_n", max_n}, {"max_p", max_p}};
    rep.pass = true;
    unsigned cases = 0;
    for (unsigned p = 1; p <= max_p && rep.pass; ++p)
        for (unsigned n = 1; n <= max_n && rep.pass; ++n) {
            std::vector<rational> samples;
            for (unsigned s = 0; s < n / 2 + 3; ++s) samples.push_back(rational(-(long)(s + 1)));
            const auto sub = verify_jacobi_relation(n, p, samples);
            const auto cert = certify_all_real_negative(q_polynomial(n, p));
            const bool rooted = n == 1 ? cert.verdict == root_verdict::vacuous_constant
                                       : cert.verdict == root_verdict::all_real_negative;
            ++cases;
            if (!sub.pass || !rooted) {
                rep.pass = false;
                rep.counterexample = {{"n", n}, {"p", p}, {"verdict", to_string(cert.verdict)}};
                if (!sub.counterexample.is_null()) rep.counterexample["sample"] = sub.counterexample;
            }
        }
    rep.data = {{"cases", cases}};
    return rep;
}

verification_report suite_symfun(std::uint64_t seed, unsigned max_p, unsigned max_n,
                                 unsigned tuples) {
    verification_report rep;
    rep.identity = "symmetric_function";
    rep.params = {{"seed", seed}, {"max_p", max_p}, {"max_n", max_n}, {"tuples", tuples}};
    rep.pass = true;
    splitmix64 gen(seed);
    unsigned cases = 0;
    for (unsigned p = 1; p <= max_p && rep.pass; ++p) {
        const auto mu = mu_of_lkp(p);
        for (unsigned n = 1; n <= max_n && rep.pass; ++n)
            for (unsigned t = 0; t < tuples && rep.pass; ++t) {
                std::vector<rational> points;
                points.reserve(n);
                for (unsigned i = 0; i < n; ++i) points.push_back(random_nonzero(gen));
                const auto sub = verify_symmetric_identity(mu, points);
                ++cases;
                if (!sub.pass) {
                    rep.pass = false;
                    rep.counterexample = sub.counterexample;
                    rep.counterexample["p"] = p;
                }
            }
        // the gamma transform of these mu-sequences must hit half super Catalans
        for (unsigned k = 0; k <= 8 && rep.pass; ++k) {
            ++cases;
            if (gamma_transform(mu, 2 * k) != super_catalan(p, k) / 2 ||
                gamma_transform(mu, 2 * k + 1) != 0) {
                rep.pass = false;
                rep.counterexample = {{"p", p}, {"k", k}, {"check", "gamma_transform"}};
            }
        }
    }
    rep.data = {{"cases", cases}};
    return rep;
}

verification_report suite_prop51(std::uint64_t seed, unsigned count, unsigned max_p) {
    verification_report rep;
    rep.identity = "sr_decomposition";
    rep.params = {{"seed", seed}, {"count", count}, {"max_p", max_p}};
    rep.pass = true;
    splitmix64 gen(seed);
    for (unsigned trial = 0; trial < count && rep.pass; ++trial) {
        const polynomial psi = random_int_poly(gen, 1 + (unsigned)gen.uniform(0, 9), -9, 9);
        const unsigned p = 1 + (unsigned)gen.uniform(0, max_p - 1);
        polynomial sum;
        for (const auto& [r, weight] : lkp_sr_decomposition(p))
            sum = add(sum, scale(apply_sr(psi, r), weight));
        if (sum != apply_lkp(psi, p)) {
            rep.pass = false;
            rep.counterexample = {{"p", p}, {"psi", coeff_strings(psi)}};
        }
    }
    for (unsigned p = 1; p <= 12 && rep.pass; ++p) {
        rational sum(0);
        for (const auto& [r, weight] : lkp_sr_decomposition(p)) sum += weight;
        if (sum != rational(binomial(2 * p - 1, p))) {
            rep.pass = false;
            rep.counterexample = {{"p", p}, {"check", "weight_sum"}};
        }
    }
    rep.data = {{"cases", count + 12}};
    return rep;
}

verification_report suite_turan(std::uint64_t seed, unsigned count, unsigned max_k,
                                unsigned max_p) {
    verification_report rep;
    rep.identity = "extended_turan";
    rep.params = {{"seed", seed}, {"count", count}, {"max_k", max_k}, {"max_p", max_p}};
    rep.pass = true;
    splitmix64 gen(seed);
    for (unsigned trial = 0; trial < count && rep.pass; ++trial) {
        const unsigned k = (unsigned)gen.uniform(0, max_k);
        const unsigned p = 1 + (unsigned)gen.uniform(0, max_p - 1);
        const polynomial phi = random_int_poly(gen, k + 1 + (unsigned)gen.uniform(0, 8), -9, 9);
        const rational via_laguerre = rational(factorial(2 * p)) / 2 *
                                      eval(laguerre_expression(derivative(phi, k), p), rational(0));
        const rational via_gammas =
            extended_turan_at_zero(taylor_data::of_polynomial(phi), k, p);
        if (via_laguerre != via_gammas) {
            rep.pass = false;
            rep.counterexample = {{"k", k},
                                  {"p", p},
                                  {"phi", coeff_strings(phi)},
                                  {"laguerre", to_string(via_laguerre)},
                                  {"gammas", to_string(via_gammas)}};
        }
    }
    rep.data = {{"cases", count}};
    return rep;
}

verification_report suite_toeplitz(std::uint64_t seed, unsigned members, unsigned max_p,
                                   unsigned max_order, unsigned window) {
    verification_report rep;
    rep.identity = "toeplitz_minors";
    rep.params = {{"seed", seed},
                  {"members", members},
                  {"max_p", max_p},
                  {"max_order", max_order},
                  {"window", window}};
    const auto corpus = random_corpus(seed, members, {3, 12}, 12);
    std::vector<polynomial> outputs;
    outputs.reserve(corpus.size() * max_p);
    for (const auto& member : corpus) {
        const polynomial psi = member.expand();
        for (unsigned p = 1; p <= max_p; ++p) outputs.push_back(apply_lkp(psi, p));
    }
    const auto flags = scan_corpus_minors(outputs, max_order, window);
    rep.pass = true;
    for (std::size_t i = 0; i < flags.size(); ++i)
        if (!flags[i] && rep.pass) {
            rep.pass = false;
            rep.counterexample = {{"member", i / max_p},
                                  {"p", 1 + i % max_p},
                                  {"image", coeff_strings(outputs[i])}};
        }
    rep.data = {{"cases", flags.size()}};
    return rep;
}

verification_report suite_stability_images(std::uint64_t seed, unsigned count, unsigned max_p) {
    verification_report rep;
    rep.identity = "stability_preservation";
    rep.params = {{"seed", seed}, {"count", count}, {"max_p", max_p}};
    rep.pass = true;
    const auto corpus = random_corpus(seed, count, {1, 12}, 20);
    unsigned cases = 0;
    for (unsigned p = 1; p <= max_p; ++p) {
        const auto results = certify_corpus(corpus, lkp_op{p});
        for (std::size_t i = 0; i < results.size(); ++i) {
            ++cases;
            if (results[i].certificate.verdict != root_verdict::all_real_negative && rep.pass) {
                rep.pass = false;
                rep.counterexample = {{"member", i},
                                      {"p", p},
                                      {"input", coeff_strings(results[i].input)},
                                      {"verdict", to_string(results[i].certificate.verdict)}};
            }
        }
    }
    rep.data = {{"cases", cases}};
    return rep;
}

std::vector<verification_report> reproduce_examples() {
    std::vector<verification_report> out;
    auto ipoly = [](std::initializer_list<long> xs) {
        std::vector<rational> c;
        for (const long x : xs) c.push_back(rational(x));
        return polynomial(std::move(c));
    };

    {
        verification_report rep;
        rep.identity = "quintic_image";
        const polynomial got = apply_lkp(ipoly({1, 5, 10, 10, 5, 1}), 2);
        const auto cert = certify_all_real_negative(got);
        rep.pass = got == ipoly({3, 35, 105, 105, 35, 3}) &&
                   cert.verdict == root_verdict::all_real_negative && cert.real_root_count == 5;
        rep.data = {{"coeffs", coeff_strings(got)}, {"verdict", to_string(cert.verdict)}};
        out.push_back(std::move(rep));
    }
    {
        verification_report rep;
        rep.identity = "truncated_quintic_image";
        const auto cert = certify_all_real_negative(ipoly({3, 35, 105, 105, 35}));
        rep.pass = cert.verdict == root_verdict::not_all_real && cert.nonreal_count == 2 &&
                   cert.real_root_count == 2;
        rep.data = {{"verdict", to_string(cert.verdict)}, {"nonreal", cert.nonreal_count}};
        out.push_back(std::move(rep));
    }
    {
        verification_report rep;
        rep.identity = "mixed_cubic_split";
        const auto cert = certify_all_real_negative(ipoly({12, 84, 36, 108}));
        rep.pass = cert.verdict == root_verdict::not_all_real && cert.real_root_count == 1 &&
                   cert.nonreal_count == 2;
        rep.data = {{"verdict", to_string(cert.verdict)}, {"real", cert.real_root_count}};
        out.push_back(std::move(rep));
    }
    {
        verification_report rep;
        rep.identity = "operator_coefficient_tables";
        rep.pass =
            lkp_coefficients(1) == std::vector<rational>{rational(1), rational(-1)} &&
            lkp_coefficients(2) == std::vector<rational>{rational(3), rational(-4), rational(1)} &&
            lkp_coefficients(3) == std::vector<rational>{rational(10), rational(-15), rational(6),
                                                         rational(-1)} &&
            lkp_coefficients(4) == std::vector<rational>{rational(35), rational(-56), rational(28),
                                                         rational(-8), rational(1)};
        rep.data = {{"rows", 4}};
        out.push_back(std::move(rep));
    }
    {
        verification_report rep;
        rep.identity = "first_operator_is_s1";
        const polynomial psi = ipoly({1, 2, 1});
        const polynomial got = apply_sr(psi, 1);
        rep.pass = got == ipoly({1, 3, 1}) && got == apply_lkp(psi, 1);
        rep.data = {{"coeffs", coeff_strings(got)}};
        out.push_back(std::move(rep));
    }
    {
        verification_report rep;
        rep.identity = "auxiliary_polynomial_values";
        rep.pass = q_polynomial(2, 1) == ipoly({1, 1}) && q_polynomial(4, 1) == ipoly({1, 6, 2}) &&
                   szily_check(1, 1).data.at("lhs").get<std::string>() == "2" &&
                   super_catalan(2, 1) == 4;
        rep.data = {{"q21", coeff_strings(q_polynomial(2, 1))},
                    {"q41", coeff_strings(q_polynomial(4, 1))}};
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace polystab
