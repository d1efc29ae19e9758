#include "polystab/identities.hpp"

#include <algorithm>
#include <set>

#include "polystab/rootcert.hpp"

namespace polystab {

namespace {

nlohmann::json rational_array(const std::vector<rational>& xs) {
    auto arr = nlohmann::json::array();
    for (const auto& x : xs) arr.push_back(to_string(x));
    return arr;
}

}  // namespace

rational pochhammer(const rational& base, unsigned length) {
    rational acc(1);
    for (unsigned i = 0; i < length; ++i) acc *= base + rational(i);
    return acc;
}

rational super_catalan(unsigned p, unsigned k) {
    rational s(binomial(2 * p, p) * binomial(2 * k, k), binomial(p + k, p));
    s.canonicalize();
    if (s.get_den() != 1) throw integrality_violation_error("super Catalan value is not an integer");
    return s;
}

verification_report szily_check(unsigned a, unsigned b) {
    if (b > a) throw invalid_parameter_error("need b <= a");
    rational lhs(0);
    for (long long r = -(long long)b; r <= (long long)b; ++r) {
        const integer term =
            binomial(2 * a, (unsigned long)((long long)a - r)) *
            binomial(2 * b, (unsigned long)((long long)b - r));
        if (r % 2 == 0)
            lhs += rational(term);
        else
            lhs -= rational(term);
    }
    const rational rhs = super_catalan(a, b);

    verification_report rep;
    rep.identity = "szily";
    rep.params = {{"a", a}, {"b", b}};
    rep.pass = lhs == rhs;
    rep.data = {{"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
    if (!rep.pass) rep.counterexample = rep.data;
    return rep;
}

verification_report verify_symmetric_identity(const mu_sequence& mu,
                                              const std::vector<rational>& points) {
    for (const auto& z : points)
        if (z == 0) throw zero_point_error();
    const std::size_t n = points.size();

    const auto e = elementary_symmetric_all(points);
    std::vector<rational> shifted(n);
    for (std::size_t i = 0; i < n; ++i) shifted[i] = points[i] + rational(1) / points[i];
    const auto es = elementary_symmetric_all(shifted);

    rational lhs(0);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) lhs += mu.mu((long long)(j - i)) * e[i] * e[j];

    rational rhs(0);
    for (std::size_t k = 0; k <= n; ++k)
        rhs += gamma_transform(mu, (unsigned)k) * es[n - k];
    rhs *= e[n];

    verification_report rep;
    rep.identity = "symmetric_function";
    rep.params = {{"n", n}, {"mu", rational_array(mu.mus)}};
    rep.pass = lhs == rhs;
    rep.data = {{"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
    if (!rep.pass)
        rep.counterexample = {{"points", rational_array(points)},
                              {"lhs", to_string(lhs)},
                              {"rhs", to_string(rhs)}};
    return rep;
}

polynomial q_polynomial(unsigned n, unsigned p) {
    if (n < 1) throw invalid_parameter_error("need n >= 1");
    if (p < 1) throw invalid_parameter_error("need p >= 1");
    std::vector<rational> c(n / 2 + 1);
    for (unsigned k = 0; 2 * k <= n; ++k)
        c[k] = super_catalan(p, k) / 2 * rational(binomial(n, 2 * k));
    return polynomial(std::move(c));
}

polynomial gauss_2f1_truncated(const rational& a, const rational& b, const rational& c,
                               const rational& scale, unsigned n_cap) {
    // callers may hand over unreduced fractions; GMP comparisons need canonical form
    rational ca = a, cb = b, cc = c;
    ca.canonicalize();
    cb.canonicalize();
    cc.canonicalize();
    std::vector<rational> coeffs{rational(1)};
    rational term(1);
    for (unsigned k = 0;; ++k) {
        const rational fa = ca + rational(k), fb = cb + rational(k);
        if (fa == 0 || fb == 0) break;  // series terminates here
        if (k >= n_cap) throw non_terminating_error("hypergeometric series did not terminate");
        const rational fc = cc + rational(k);
        if (fc == 0) throw invalid_parameter_error("lower parameter hits a nonpositive integer");
        term *= fa * fb * scale / (rational(k + 1) * fc);
        coeffs.push_back(term);
    }
    return polynomial(std::move(coeffs));
}

polynomial jacobi_polynomial(unsigned m, const rational& alpha, const rational& beta) {
    // (1+alpha)_m/m! * 2F1(-m, 1+alpha+beta+m; 1+alpha; (1-x)/2), expanded exactly
    const polynomial half_arg({rational(1, 2), rational(-1, 2)});
    polynomial acc;
    rational coeff = pochhammer(alpha + 1, m) / rational(factorial(m));
    polynomial arg_power = polynomial::constant(1);
    for (unsigned s = 0;; ++s) {
        acc = add(acc, scale(arg_power, coeff));
        if (s == m) break;
        const rational fc = alpha + 1 + rational(s);
        if (fc == 0) throw invalid_parameter_error("alpha makes the expansion singular");
        coeff *= (rational(-(long)m) + rational(s)) * (alpha + beta + 1 + rational(m) + rational(s)) /
                 (rational(s + 1) * fc);
        arg_power = mul(arg_power, half_arg);
    }
    return acc;
}

verification_report verify_jacobi_relation(unsigned n, unsigned p,
                                           const std::vector<rational>& samples) {
    if (n < 1) throw invalid_parameter_error("need n >= 1");
    if (p < 1) throw invalid_parameter_error("need p >= 1");
    const unsigned d = n / 2;
    const std::set<rational> distinct(samples.begin(), samples.end());
    if (distinct.size() < (std::size_t)d + 1)
        throw invalid_parameter_error("need more distinct samples than the degree");
    const rational pole(1, 4);
    for (const auto& z : samples)
        if (z == pole) throw sample_at_pole_error();

    // even n uses beta = -1/2, odd n beta = +1/2; both reduce the relation to
    // polynomials of degree d on each side
    const rational beta = n % 2 == 0 ? rational(-1, 2) : rational(1, 2);
    const polynomial jac = jacobi_polynomial(d, rational(p), beta);
    const polynomial q = q_polynomial(n, p);
    const rational scaling =
        pochhammer(rational(p + 1), d) / rational(factorial(d)) / rational(binomial(2 * p - 1, p));

    verification_report rep;
    rep.identity = "jacobi_relation";
    rep.params = {{"n", n}, {"p", p}};
    rep.pass = true;

    for (const auto& z : distinct) {
        const rational one_minus = rational(1) - 4 * z;
        const rational x = (rational(1) + 4 * z) / one_minus;
        rational lhs = eval(jac, x);
        for (unsigned i = 0; i < d; ++i) lhs *= one_minus;
        const rational rhs = scaling * eval(q, z);
        if (lhs != rhs) {
            rep.pass = false;
            rep.counterexample = {
                {"z", to_string(z)}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
            break;
        }
    }

    // the root map gamma -> (gamma-1)/(4(gamma+1)) must carry each zero of the
    // Jacobi polynomial into its own negative zero of Q
    unsigned mapped = 0;
    if (rep.pass && d > 0) {
        rational width(1, 1024);
        for (int attempt = 0; attempt < 8 && mapped < d; ++attempt, width /= 16) {
            const auto intervals = approximate_real_roots(jac, width);
            if (intervals.size() != d) break;
            mapped = 0;
            for (const auto& iv : intervals) {
                if (!(iv.lo > -1) || !(iv.hi < 1)) continue;
                const rational zlo = (iv.lo - 1) / (4 * (iv.lo + 1));
                const rational zhi = (iv.hi - 1) / (4 * (iv.hi + 1));
                if (!(zhi < 0)) continue;
                if (count_real_roots(q, zlo, zhi) == 1) ++mapped;
            }
        }
        if (mapped != d) {
            rep.pass = false;
            rep.counterexample = {{"mapped_roots", mapped}, {"expected", d}};
        }
    }

    rep.data = {{"degree", d},
                {"distinct_samples", distinct.size()},
                {"mapped_roots", d == 0 ? 0 : mapped}};
    return rep;
}

std::vector<sr_weight> lkp_sr_decomposition(unsigned p) {
    if (p < 1) throw invalid_parameter_error("p must be at least 1");
    std::vector<sr_weight> out;
    out.reserve(p);
    for (unsigned j = 1; j <= p; ++j) {
        rational w(binomial(2 * p, p - j));
        if (j % 2 == 0) w = -w;
        out.push_back({j, w});
    }
    return out;
}

rational toeplitz_window::entry(unsigned i, unsigned j) const {
    const long long idx = (long long)center + (long long)i - (long long)j;
    if (idx < 0 || (std::size_t)idx >= seq.size()) return rational(0);
    return seq[(std::size_t)idx];
}

rational toeplitz_window::determinant() const {
    std::vector<std::vector<rational>> m(order, std::vector<rational>(order));
    for (unsigned i = 0; i < order; ++i)
        for (unsigned j = 0; j < order; ++j) m[i][j] = entry(i, j);

    rational det(1);
    for (unsigned col = 0; col < order; ++col) {
        unsigned pivot = col;
        while (pivot < order && m[pivot][col] == 0) ++pivot;
        if (pivot == order) return rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (unsigned row = col + 1; row < order; ++row) {
            if (m[row][col] == 0) continue;
            const rational f = m[row][col] / m[col][col];
            for (unsigned j = col; j < order; ++j) m[row][j] -= f * m[col][j];
        }
    }
    return det;
}

verification_report toeplitz_minor_scan(const std::vector<rational>& seq, unsigned max_order,
                                        unsigned window) {
    if (max_order < 1) throw invalid_parameter_error("need max_order >= 1");
    if (max_order > window) throw invalid_parameter_error("window smaller than max_order");

    verification_report rep;
    rep.identity = "toeplitz_minors";
    rep.params = {{"length", seq.size()}, {"max_order", max_order}, {"window", window}};
    rep.pass = true;

    rational minimum;
    bool first = true;
    for (unsigned order = 1; order <= max_order; ++order) {
        for (int center = -(int)window; center <= (int)window; ++center) {
            const rational det = toeplitz_window{seq, center, order}.determinant();
            if (first || det < minimum) minimum = det;
            first = false;
            if (det < 0 && rep.pass) {
                rep.pass = false;
                rep.counterexample = {
                    {"order", order}, {"center", center}, {"determinant", to_string(det)}};
            }
        }
    }
    rep.data = {{"minimum", to_string(minimum)}};
    return rep;
}

}  // namespace polystab
