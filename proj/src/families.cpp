#include "polystab/families.hpp"

#include <algorithm>

#include "polystab/operators.hpp"
#include "polystab/rng.hpp"
#include "polystab/rootcert.hpp"

namespace polystab {

polynomial rooted_product_t::expand() const {
    if (lead == 0) throw invalid_parameter_error("leading value must be nonzero");
    polynomial acc = polynomial::constant(lead);
    for (const auto& rho : rhos) {
        if (!(rho > 0)) throw invalid_parameter_error("root parameters must be positive");
        acc = mul(acc, polynomial({rational(1), rho}));
    }
    return acc;
}

polynomial rooted_product(const std::vector<rational>& rhos, const rational& lead) {
    return rooted_product_t{rhos, lead}.expand();
}

polynomial jensen_polynomial(const taylor_data& gammas, unsigned n, bool scaled) {
    std::vector<rational> c(n + 1);
    rational power(1);
    for (unsigned k = 0; k <= n; ++k) {
        c[k] = rational(binomial(n, k)) * gammas.gamma(k);
        if (scaled && k > 0) {
            power *= rational(n);
            c[k] /= power;
        }
    }
    return polynomial(std::move(c));
}

verification_report jensen_convergence_report(const taylor_data& gammas, unsigned p,
                                              const std::vector<unsigned>& n_values,
                                              unsigned coeff_window) {
    if (p < 1) throw invalid_parameter_error("p must be at least 1");
    for (const auto& g : gammas.gammas)
        if (g < 0) throw negative_gamma_error();
    for (std::size_t i = 0; i + 1 < n_values.size(); ++i)
        if (n_values[i] >= n_values[i + 1])
            throw invalid_parameter_error("n values must be strictly increasing");

    // the target: the operator applied to the limiting coefficients gamma_k / k!
    const auto c = lkp_coefficients(p);
    auto limit_coeff = [&](long long k) {
        auto a = [&](long long i) -> rational {
            if (i < 0) return rational(0);
            return gammas.gamma(i) / rational(factorial((unsigned)i));
        };
        rational acc = c[0] * a(k) * a(k);
        for (unsigned j = 1; j <= p; ++j) acc += c[j] * a(k - (long long)j) * a(k + (long long)j);
        return acc;
    };
    std::vector<rational> limit(coeff_window);
    for (unsigned k = 0; k < coeff_window; ++k) limit[k] = limit_coeff(k);

    verification_report rep;
    rep.identity = "jensen_convergence";
    rep.params = {{"p", p}, {"coeff_window", coeff_window}, {"n_values", n_values}};
    rep.pass = true;

    auto limit_json = nlohmann::json::array();
    for (const auto& x : limit) limit_json.push_back(to_string(x));
    auto rows = nlohmann::json::array();

    std::vector<std::vector<rational>> error_table;
    for (const unsigned n : n_values) {
        const polynomial image = apply_lkp(jensen_polynomial(gammas, n, true), p);
        const auto cert = certify_all_real_negative(image);
        if (cert.verdict != root_verdict::all_real_negative &&
            cert.verdict != root_verdict::vacuous_constant)
            rep.pass = false;

        std::vector<rational> errors(coeff_window);
        auto errors_json = nlohmann::json::array();
        for (unsigned k = 0; k < coeff_window; ++k) {
            errors[k] = abs(image.coeff(k) - limit[k]);
            errors_json.push_back(to_string(errors[k]));
        }
        error_table.push_back(std::move(errors));
        rows.push_back({{"n", n}, {"verdict", to_string(cert.verdict)}, {"errors", errors_json}});
    }

    for (std::size_t i = 0; i + 1 < error_table.size(); ++i)
        for (unsigned k = 0; k < coeff_window; ++k)
            if (error_table[i + 1][k] > error_table[i][k]) rep.pass = false;

    rep.data = {{"limit_coeffs", limit_json}, {"rows", rows}};
    return rep;
}

std::vector<rooted_product_t> random_corpus(std::uint64_t seed, unsigned count,
                                            std::pair<int, int> degree_range,
                                            unsigned rho_bound) {
    if (degree_range.first < 0 || degree_range.first > degree_range.second)
        throw invalid_parameter_error("bad degree range");
    if (rho_bound < 1) throw invalid_parameter_error("rho bound must be at least 1");

    std::vector<rooted_product_t> corpus;
    corpus.reserve(count);
    for (unsigned i = 0; i < count; ++i) {
        splitmix64 gen(member_seed(seed, i));
        rooted_product_t member;
        const unsigned degree =
            (unsigned)gen.uniform((std::uint64_t)degree_range.first,
                                  (std::uint64_t)degree_range.second);
        member.rhos.reserve(degree);
        for (unsigned k = 0; k < degree; ++k) {
            rational rho(integer(1 + gen.uniform(0, 8 * (std::uint64_t)rho_bound - 1)), integer(8));
            rho.canonicalize();
            member.rhos.push_back(std::move(rho));
        }
        member.lead = rational(integer(1 + gen.uniform(0, 19)), integer(2));
        member.lead.canonicalize();
        corpus.push_back(std::move(member));
    }
    return corpus;
}

}  // namespace polystab
