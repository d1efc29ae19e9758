#include "polystab/operators.hpp"

#include <variant>

namespace polystab {

rational mu_sequence::mu(long long k) const {
    if (k < 0 || (std::size_t)k >= mus.size()) return rational(0);
    return mus[(std::size_t)k];
}

std::vector<rational> lkp_coefficients(unsigned p) {
    if (p < 1) throw invalid_parameter_error("p must be at least 1");
    std::vector<rational> c(p + 1);
    c[0] = rational(binomial(2 * p - 1, p));
    for (unsigned j = 1; j <= p; ++j) {
        c[j] = rational(binomial(2 * p, p - j));
        if (j % 2 == 1) c[j] = -c[j];
    }
    return c;
}

mu_sequence mu_of_lkp(unsigned p) {
    const auto c = lkp_coefficients(p);
    mu_sequence mu;
    mu.mus.assign(2 * p + 1, rational(0));
    mu.mus[0] = c[0];
    for (unsigned j = 1; j <= p; ++j) mu.mus[2 * j] = c[j];
    return mu;
}

polynomial apply_lkp(const polynomial& psi, unsigned p) {
    if (psi.is_zero()) throw zero_polynomial_error();
    const auto c = lkp_coefficients(p);
    const long long n = (long long)psi.degree().value();
    std::vector<rational> out((std::size_t)n + 1);
    for (long long k = 0; k <= n; ++k) {
        rational acc = c[0] * psi.coeff(k) * psi.coeff(k);
        for (unsigned j = 1; j <= p; ++j)
            acc += c[j] * psi.coeff(k - (long long)j) * psi.coeff(k + (long long)j);
        out[(std::size_t)k] = acc;
    }
    return polynomial(std::move(out));
}

polynomial apply_sr(const polynomial& psi, unsigned r) {
    if (psi.is_zero()) throw zero_polynomial_error();
    const long long n = (long long)psi.degree().value();
    std::vector<rational> out((std::size_t)n + 1);
    for (long long k = 0; k <= n; ++k)
        out[(std::size_t)k] = psi.coeff(k) * psi.coeff(k) -
                              psi.coeff(k - (long long)r) * psi.coeff(k + (long long)r);
    return polynomial(std::move(out));
}

polynomial apply_tmu(const polynomial& psi, const mu_sequence& mu) {
    if (psi.is_zero()) throw zero_polynomial_error();
    const long long n = (long long)psi.degree().value();
    std::vector<rational> out(2 * (std::size_t)n + 1);
    for (long long i = 0; i <= n; ++i)
        for (long long j = i; j <= n; ++j)
            out[(std::size_t)(i + j)] += mu.mu(j - i) * psi.coeff(i) * psi.coeff(j);
    return polynomial(std::move(out));
}

polynomial apply_operator(const polynomial& psi, const operator_spec& spec) {
    return std::visit(
        [&](const auto& op) {
            using T = std::decay_t<decltype(op)>;
            if constexpr (std::is_same_v<T, lkp_op>) return apply_lkp(psi, op.p);
            else if constexpr (std::is_same_v<T, sr_op>) return apply_sr(psi, op.r);
            else return apply_tmu(psi, op.mu);
        },
        spec);
}

rational gamma_transform(const mu_sequence& mu, unsigned k) {
    rational acc(0);
    for (unsigned j = 0; 2 * j <= k; ++j) acc += rational(binomial(k, j)) * mu.mu(k - 2 * j);
    return acc;
}

polynomial laguerre_expression(const polynomial& phi, unsigned p) {
    if (phi.is_zero()) throw zero_polynomial_error();
    std::vector<polynomial> ders(2 * p + 1);
    ders[0] = phi;
    for (unsigned j = 1; j <= 2 * p; ++j) ders[j] = derivative(ders[j - 1]);
    polynomial acc;
    for (unsigned j = 0; j <= 2 * p; ++j) {
        if (ders[j].is_zero() || ders[2 * p - j].is_zero()) continue;
        rational w(binomial(2 * p, j), factorial(2 * p));
        w.canonicalize();
        if ((p + j) % 2 == 1) w = -w;
        acc = add(acc, scale(mul(ders[j], ders[2 * p - j]), w));
    }
    return acc;
}

rational extended_turan_at_zero(const taylor_data& gammas, unsigned k, unsigned p) {
    const auto c = lkp_coefficients(p);
    rational acc = c[0] * gammas.gamma(k + p) * gammas.gamma(k + p);
    for (unsigned j = 1; j <= p; ++j)
        acc += c[j] * gammas.gamma((long long)k + p - j) * gammas.gamma(k + p + j);
    return acc;
}

}  // namespace polystab
