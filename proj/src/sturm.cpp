#include <optional>

#include "intpoly.hpp"
#include "polystab/rootcert.hpp"

namespace polystab {

namespace {

// remainder of rational polynomial division
polynomial poly_rem(const polynomial& n, const polynomial& d) {
    polynomial rem = n;
    while (!rem.is_zero() && rem.coeffs().size() >= d.coeffs().size()) {
        const std::size_t shift = rem.coeffs().size() - d.coeffs().size();
        rem = sub(rem, mul(polynomial::monomial((unsigned)shift, rem.leading() / d.leading()), d));
    }
    return rem;
}

}  // namespace

sturm_chain_t sturm_chain(const polynomial& p) {
    if (p.is_zero()) throw zero_polynomial_error();
    if (p.degree().value() == 0) return {{p}};

    // start from p itself when already squarefree, else from the monic radical
    const auto v = detail::iprimitive(detail::iclear(p));
    const auto g = detail::igcd(v, detail::iderivative(v));
    polynomial start = p;
    if (g.size() > 1) {
        const polynomial radical = detail::to_polynomial(detail::idiv_exact(v, g));
        start = scale(radical, 1 / radical.leading());
    }

    sturm_chain_t out{{start}};
    out.chain.push_back(derivative(start));
    while (out.chain.back().degree().value() > 0) {
        polynomial next = poly_rem(out.chain[out.chain.size() - 2], out.chain.back());
        if (next.is_zero()) break;  // cannot happen for squarefree starts
        out.chain.push_back(scale(next, -1));
    }
    return out;
}

long long count_real_roots(const polynomial& p, std::optional<rational> lo,
                           std::optional<rational> hi) {
    if (p.is_zero()) throw zero_polynomial_error();
    if (lo && hi && *lo >= *hi) throw invalid_parameter_error("need lo < hi");
    if (p.degree().value() == 0) return 0;

    const auto v = detail::iprimitive(detail::iclear(p));
    const auto g = detail::igcd(v, detail::iderivative(v));
    const auto radical = g.size() > 1 ? detail::idiv_exact(v, g) : v;
    const auto chain = detail::isturm(radical);

    // nudge root endpoints inward by less than the minimal root gap
    rational delta;
    if (radical.size() > 2) {
        delta = rational(1);
        const unsigned long s = detail::iseparation_exp(radical);
        delta /= rational(integer(1) << s);
    } else {
        delta = rational(1, 2);
    }
    if (lo && hi) {
        const rational quarter = (*hi - *lo) / 4;
        if (quarter < delta) delta = quarter;
    }

    long long at_lo, at_hi;
    if (lo) {
        rational a = *lo;
        if (detail::isign_at(radical, a) == 0) a += delta;
        at_lo = detail::ivariations_at(chain, a);
    } else {
        at_lo = detail::ivariations_neg_inf(chain);
    }
    if (hi) {
        rational b = *hi;
        if (detail::isign_at(radical, b) == 0) b -= delta;
        at_hi = detail::ivariations_at(chain, b);
    } else {
        at_hi = detail::ivariations_pos_inf(chain);
    }
    return at_lo - at_hi;
}

std::string to_string(root_verdict v) {
    switch (v) {
        case root_verdict::all_real_negative: return "all_real_negative";
        case root_verdict::not_all_real: return "not_all_real";
        case root_verdict::real_but_not_all_negative: return "real_but_not_all_negative";
        case root_verdict::zero_root: return "zero_root";
        case root_verdict::vacuous_constant: return "vacuous_constant";
    }
    return "unknown";
}

}  // namespace polystab
