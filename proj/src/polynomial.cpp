#include "polystab/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "intpoly.hpp"

namespace polystab {

polynomial::polynomial(std::vector<rational> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

polynomial polynomial::constant(const rational& c) { return polynomial({c}); }

polynomial polynomial::monomial(unsigned k, const rational& c) {
    std::vector<rational> v(k + 1, rational(0));
    v[k] = c;
    return polynomial(std::move(v));
}

std::optional<std::size_t> polynomial::degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
}

rational polynomial::coeff(long long k) const {
    if (k < 0 || (std::size_t)k >= c_.size()) return 0;
    return c_[(std::size_t)k];
}

const rational& polynomial::leading() const {
    if (c_.empty()) throw zero_polynomial_error();
    return c_.back();
}

polynomial add(const polynomial& lhs, const polynomial& rhs) {
    std::vector<rational> out(std::max(lhs.coeffs().size(), rhs.coeffs().size()), rational(0));
    for (std::size_t i = 0; i < lhs.coeffs().size(); ++i) out[i] += lhs.coeffs()[i];
    for (std::size_t i = 0; i < rhs.coeffs().size(); ++i) out[i] += rhs.coeffs()[i];
    return polynomial(std::move(out));
}

polynomial sub(const polynomial& lhs, const polynomial& rhs) {
    std::vector<rational> out(std::max(lhs.coeffs().size(), rhs.coeffs().size()), rational(0));
    for (std::size_t i = 0; i < lhs.coeffs().size(); ++i) out[i] += lhs.coeffs()[i];
    for (std::size_t i = 0; i < rhs.coeffs().size(); ++i) out[i] -= rhs.coeffs()[i];
    return polynomial(std::move(out));
}

polynomial mul(const polynomial& lhs, const polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<rational> out(lhs.coeffs().size() + rhs.coeffs().size() - 1, rational(0));
    for (std::size_t i = 0; i < lhs.coeffs().size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs().size(); ++j)
            out[i + j] += lhs.coeffs()[i] * rhs.coeffs()[j];
    return polynomial(std::move(out));
}

polynomial scale(const polynomial& p, const rational& c) {
    std::vector<rational> out;
    out.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) out.push_back(a * c);
    return polynomial(std::move(out));
}

polynomial substitute_scaled_arg(const polynomial& p, const rational& c) {
    std::vector<rational> out;
    out.reserve(p.coeffs().size());
    rational pow = 1;
    for (const auto& a : p.coeffs()) {
        out.push_back(a * pow);
        pow *= c;
    }
    return polynomial(std::move(out));
}

polynomial derivative(const polynomial& p, unsigned order) {
    polynomial d = p;
    for (unsigned pass = 0; pass < order; ++pass) {
        if (d.is_zero()) return {};
        std::vector<rational> out;
        out.reserve(d.coeffs().size());
        for (std::size_t k = 1; k < d.coeffs().size(); ++k)
            out.push_back(d.coeffs()[k] * rational((unsigned long)k));
        d = polynomial(std::move(out));
    }
    return d;
}

rational eval(const polynomial& p, const rational& x) {
    rational acc = 0;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + p.coeffs()[i];
    return acc;
}

std::vector<rational> elementary_symmetric_all(const std::vector<rational>& points) {
    std::vector<rational> e{rational(1)};
    e.reserve(points.size() + 1);
    for (const auto& x : points) {
        e.push_back(0);
        for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] += x * e[k - 1];
    }
    return e;
}

rational elementary_symmetric(const std::vector<rational>& points, long long k) {
    if (k < 0 || (std::size_t)k > points.size()) return 0;
    return elementary_symmetric_all(points)[(std::size_t)k];
}

namespace {

polynomial monic(const polynomial& p) { return scale(p, 1 / p.leading()); }

// exact n / d over the rationals; remainder must vanish
polynomial divide_exact(const polynomial& n, const polynomial& d) {
    polynomial rem = n;
    std::vector<rational> quot(
        n.is_zero() ? 0 : n.coeffs().size() - d.coeffs().size() + 1, rational(0));
    while (!rem.is_zero() && rem.coeffs().size() >= d.coeffs().size()) {
        const std::size_t shift = rem.coeffs().size() - d.coeffs().size();
        const rational q = rem.leading() / d.leading();
        quot[shift] = q;
        rem = sub(rem, mul(polynomial::monomial((unsigned)shift, q), d));
    }
    if (!rem.is_zero()) throw integrality_violation_error("inexact polynomial division");
    return polynomial(std::move(quot));
}

polynomial gcd_monic(const polynomial& a, const polynomial& b) {
    const auto g = detail::igcd(detail::iclear(a), detail::iclear(b));
    if (g.empty()) return {};
    const polynomial gp = detail::to_polynomial(g);
    if (gp.degree().value() == 0) return polynomial::constant(1);
    return monic(gp);
}

}  // namespace

squarefree_decomposition_result squarefree_decomposition(const polynomial& p) {
    if (p.is_zero()) throw zero_polynomial_error();
    squarefree_decomposition_result out;
    out.lead = p.leading();
    if (p.degree().value() == 0) return out;

    // Yun's algorithm on the monic normalization
    const polynomial f = monic(p);
    const polynomial fp = derivative(f);
    polynomial g = gcd_monic(f, fp);
    polynomial b = divide_exact(f, g);
    polynomial c = divide_exact(fp, g);
    polynomial d = sub(c, derivative(b));
    unsigned multiplicity = 1;
    while (!b.is_zero() && b.degree().value() > 0) {
        const polynomial a = gcd_monic(b, d);
        if (a.degree().value() > 0) out.factors.push_back({a, multiplicity});
        b = divide_exact(b, a);
        c = divide_exact(d, a);
        d = sub(c, derivative(b));
        ++multiplicity;
    }

    std::sort(out.factors.begin(), out.factors.end(),
              [](const squarefree_factor& lhs, const squarefree_factor& rhs) {
                  if (lhs.multiplicity != rhs.multiplicity)
                      return lhs.multiplicity > rhs.multiplicity;
                  if (lhs.factor.coeffs().size() != rhs.factor.coeffs().size())
                      return lhs.factor.coeffs().size() < rhs.factor.coeffs().size();
                  return std::lexicographical_compare(
                      lhs.factor.coeffs().begin(), lhs.factor.coeffs().end(),
                      rhs.factor.coeffs().begin(), rhs.factor.coeffs().end());
              });
    return out;
}

std::string to_string(const polynomial& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) out += ", ";
        out += to_string(p.coeffs()[i]);
    }
    out += "]";
    return out;
}

std::ostream& operator<<(std::ostream& os, const polynomial& p) { return os << to_string(p); }

rational taylor_data::gamma(long long k) const {
    if (k < 0 || (std::size_t)k >= gammas.size()) return 0;
    return gammas[(std::size_t)k];
}

polynomial taylor_data::to_polynomial() const {
    std::vector<rational> c;
    c.reserve(gammas.size());
    for (std::size_t k = 0; k < gammas.size(); ++k)
        c.push_back(gammas[k] / rational(factorial((unsigned)k)));
    return polynomial(std::move(c));
}

taylor_data taylor_data::of_polynomial(const polynomial& p) {
    taylor_data out;
    out.gammas.reserve(p.coeffs().size());
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
        out.gammas.push_back(p.coeffs()[k] * rational(factorial((unsigned)k)));
    return out;
}

}  // namespace polystab
