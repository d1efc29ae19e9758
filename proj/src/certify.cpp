#include <mpfr.h>

#include <algorithm>
#include <vector>

#include "intpoly.hpp"
#include "polystab/rootcert.hpp"

namespace polystab {

namespace {

using detail::ivec;

rational pow2_inv(unsigned long s) { return rational(integer(1), integer(1) << s); }

// One isolated distinct real root. Non-exact enclosures carry a sign change of
// their factor across (lo, hi); exact ones are centered on a known rational root.
struct enclosure {
    rational lo, hi;
    bool exact = false;
    rational root;  // meaningful iff exact
    unsigned multiplicity = 1;
    std::size_t factor_index = 0;
};

struct isolation_context {
    std::vector<ivec> factors;
    // strictly less than half the minimal distance between distinct roots of
    // the whole input, so a ball of this radius around a root contains no other
    rational exact_guard;
};

void center_on_root(enclosure& e, const rational& r, const isolation_context& ctx) {
    rational d = ctx.exact_guard;
    const rational w = (e.hi - e.lo) / 8;
    if (w < d) d = w;
    e.exact = true;
    e.root = r;
    e.lo = r - d;
    e.hi = r + d;
}

// halve the enclosure, keeping exactly one root inside and endpoints off roots
void refine(enclosure& e, const isolation_context& ctx) {
    if (e.exact) {
        const rational d = (e.hi - e.lo) / 4;
        e.lo = e.root - d;
        e.hi = e.root + d;
        return;
    }
    const ivec& f = ctx.factors[e.factor_index];
    const rational mid = (e.lo + e.hi) / 2;
    const int sm = detail::isign_at(f, mid);
    if (sm == 0) {
        center_on_root(e, mid, ctx);
        return;
    }
    if (sm == detail::isign_at(f, e.lo))
        e.lo = mid;
    else
        e.hi = mid;
}

void isolate_factor(std::size_t factor_index, unsigned multiplicity,
                    const isolation_context& ctx, std::vector<enclosure>& out) {
    const ivec& f = ctx.factors[factor_index];
    if (f.size() <= 1) return;
    const auto chain = detail::isturm(f);
    if (detail::ivariations_neg_inf(chain) == detail::ivariations_pos_inf(chain)) return;

    const rational bound(integer(1) << detail::iroot_bound_exp(f));
    struct segment {
        rational lo, hi;
        long long vlo, vhi;
    };
    std::vector<segment> work;
    work.push_back({-bound, bound, detail::ivariations_at(chain, -bound),
                    detail::ivariations_at(chain, bound)});
    while (!work.empty()) {
        segment s = std::move(work.back());
        work.pop_back();
        const long long count = s.vlo - s.vhi;
        if (count <= 0) continue;
        enclosure e;
        e.multiplicity = multiplicity;
        e.factor_index = factor_index;
        e.lo = s.lo;
        e.hi = s.hi;
        if (count == 1) {
            out.push_back(std::move(e));
            continue;
        }
        const rational mid = (s.lo + s.hi) / 2;
        if (detail::isign_at(f, mid) == 0) {
            center_on_root(e, mid, ctx);
            const rational gl = e.lo, gr = e.hi;
            out.push_back(std::move(e));
            // no other root hides inside the guarded hole around mid
            work.push_back({s.lo, gl, s.vlo, detail::ivariations_at(chain, gl)});
            work.push_back({gr, s.hi, detail::ivariations_at(chain, gr), s.vhi});
        } else {
            const long long vm = detail::ivariations_at(chain, mid);
            work.push_back({s.lo, mid, s.vlo, vm});
            work.push_back({mid, s.hi, vm, s.vhi});
        }
    }
}

struct analysis {
    isolation_context ctx;
    std::vector<enclosure> enclosures;
    long long real_with_multiplicity = 0;
};

// isolate every distinct real root of p (p nonzero, degree >= 1)
analysis isolate_all(const polynomial& p) {
    analysis a;

    const ivec cleared = detail::iprimitive(detail::iclear(p));
    const ivec gcd = detail::igcd(cleared, detail::iderivative(cleared));
    const ivec radical = gcd.size() > 1 ? detail::idiv_exact(cleared, gcd) : cleared;
    a.ctx.exact_guard = radical.size() > 2
                            ? pow2_inv(detail::iseparation_exp(radical) + 1)
                            : rational(1, 2);

    const auto decomposition = squarefree_decomposition(p);
    std::vector<unsigned> multiplicities;
    for (const auto& [factor, multiplicity] : decomposition.factors) {
        a.ctx.factors.push_back(detail::iprimitive(detail::iclear(factor)));
        multiplicities.push_back(multiplicity);
    }
    for (std::size_t i = 0; i < a.ctx.factors.size(); ++i)
        isolate_factor(i, multiplicities[i], a.ctx, a.enclosures);

    for (const auto& e : a.enclosures) a.real_with_multiplicity += e.multiplicity;

    std::sort(a.enclosures.begin(), a.enclosures.end(),
              [](const enclosure& x, const enclosure& y) {
                  return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
              });
    return a;
}

// shrink until strictly pairwise disjoint (their roots are distinct, so this converges)
void separate_enclosures(analysis& a) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(a.enclosures.begin(), a.enclosures.end(),
                  [](const enclosure& x, const enclosure& y) {
                      return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
                  });
        for (std::size_t i = 0; i + 1 < a.enclosures.size(); ++i) {
            enclosure& left = a.enclosures[i];
            enclosure& right = a.enclosures[i + 1];
            if (left.hi < right.lo) continue;
            enclosure& wider = (left.hi - left.lo) >= (right.hi - right.lo) ? left : right;
            refine(wider, a.ctx);
            changed = true;
        }
    }
}

void separate_from_zero(analysis& a) {
    for (auto& e : a.enclosures)
        while (!(e.hi < 0) && !(e.lo > 0)) refine(e, a.ctx);
}

polynomial strip_zero_roots(const polynomial& p, std::size_t v) {
    std::vector<rational> c(p.coeffs().begin() + (std::ptrdiff_t)v, p.coeffs().end());
    return polynomial(std::move(c));
}

// ---- fast path: floating approximation, exact dyadic separator certificate ----

class mpfr_vec {
  public:
    mpfr_vec(std::size_t n, mpfr_prec_t prec) : xs_(n) {
        for (auto& x : xs_) mpfr_init2(&x, prec);
    }
    mpfr_vec(const mpfr_vec&) = delete;
    mpfr_vec& operator=(const mpfr_vec&) = delete;
    ~mpfr_vec() {
        for (auto& x : xs_) mpfr_clear(&x);
    }
    mpfr_ptr operator[](std::size_t i) { return &xs_[i]; }
    std::size_t size() const { return xs_.size(); }

  private:
    std::vector<__mpfr_struct> xs_;
};

void eval_horner(mpfr_ptr out, const ivec& c, mpfr_srcptr x) {
    mpfr_set_zero(out, 1);
    for (std::size_t i = c.size(); i-- > 0;) {
        mpfr_mul(out, out, x, MPFR_RNDN);
        mpfr_add_z(out, out, c[i].get_mpz_t(), MPFR_RNDN);
    }
}

// Gauss-Seidel Aberth sweep on real iterates; true once every relative move
// drops below 2^-80 within maxit sweeps
bool aberth(const ivec& f, const polynomial& q, mpfr_prec_t prec, unsigned maxit,
            mpfr_vec& x) {
    const std::size_t d = f.size() - 1;
    const ivec df = detail::iderivative(f);
    mpfr_vec t(5, prec);
    mpfr_ptr pv = t[0], dv = t[1], sum = t[2], diff = t[3], w = t[4];

    for (std::size_t k = 0; k < d; ++k) {
        // -(q_k / q_{k+1}) (1 + 2^-30 ((k mod 7) - 3)): spread starts along the
        // coefficient-ratio profile, deterministically detuned
        rational guess = -(q.coeffs()[k] / q.coeffs()[k + 1]);
        guess *= rational(integer(1) << 30) + rational((long)(k % 7) - 3);
        guess /= rational(integer(1) << 30);
        mpfr_set_q(x[k], guess.get_mpq_t(), MPFR_RNDN);
    }

    for (unsigned it = 0; it < maxit; ++it) {
        bool settled = true;
        for (std::size_t k = 0; k < d; ++k) {
            eval_horner(pv, f, x[k]);
            eval_horner(dv, df, x[k]);
            if (mpfr_zero_p(dv)) return false;
            mpfr_div(pv, pv, dv, MPFR_RNDN);  // pv = P/P'
            mpfr_set_zero(sum, 1);
            for (std::size_t j = 0; j < d; ++j) {
                if (j == k) continue;
                mpfr_sub(diff, x[k], x[j], MPFR_RNDN);
                if (mpfr_zero_p(diff)) return false;
                mpfr_ui_div(diff, 1, diff, MPFR_RNDN);
                mpfr_add(sum, sum, diff, MPFR_RNDN);
            }
            mpfr_mul(sum, sum, pv, MPFR_RNDN);
            mpfr_ui_sub(sum, 1, sum, MPFR_RNDN);
            if (mpfr_zero_p(sum)) return false;
            mpfr_div(w, pv, sum, MPFR_RNDN);
            mpfr_sub(x[k], x[k], w, MPFR_RNDN);
            if (mpfr_zero_p(x[k])) return false;
            // relative move: |w| >= |x_k| * 2^-80 means not settled yet
            if (!mpfr_zero_p(w) &&
                mpfr_get_exp(w) + 80 >= mpfr_get_exp(x[k]))
                settled = false;
        }
        if (settled) return true;
    }
    return false;
}

// round m to a dyadic rational with denominator 2^scale
rational dyadic_round(mpfr_srcptr m, unsigned long scale, mpfr_prec_t prec) {
    mpfr_vec t(1, prec + scale + 8);
    mpfr_mul_2ui(t[0], m, scale, MPFR_RNDN);
    integer z;
    mpfr_get_z(z.get_mpz_t(), t[0], MPFR_RNDN);
    rational out(z, integer(1) << scale);
    out.canonicalize();
    return out;
}

// d+1 exact separators with alternating signs pin down d distinct negative
// real roots; fills the certificate and returns true, or bails to the caller
bool fast_path(const polynomial& q, root_certificate& cert) {
    const ivec f = detail::iprimitive(detail::iclear(q));
    const std::size_t d = f.size() - 1;
    const mpfr_prec_t base_prec = (mpfr_prec_t)(384 + 4 * d);

    for (int attempt = 0; attempt < 2; ++attempt) {
        const mpfr_prec_t prec = base_prec << attempt;
        mpfr_vec x(d, prec);
        if (!aberth(f, q, prec, 80, x)) continue;

        std::vector<std::size_t> order(d);
        for (std::size_t i = 0; i < d; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
            return mpfr_cmp(x[i], x[j]) < 0;
        });

        std::vector<rational> separators(d + 1);
        separators[0] = -rational(integer(1) << detail::iroot_bound_exp(f));
        separators[d] = 0;
        bool ok = detail::isign_at(f, separators[0]) == (d % 2 == 0 ? 1 : -1) &&
                  sgn(q.coeffs()[0]) > 0;
        mpfr_vec t(2, prec);
        for (std::size_t i = 1; ok && i < d; ++i) {
            mpfr_sub(t[0], x[order[i]], x[order[i - 1]], MPFR_RNDN);
            if (!(mpfr_sgn(t[0]) > 0)) {
                ok = false;
                break;
            }
            const long gap_exp = mpfr_get_exp(t[0]);
            const unsigned long scale = (unsigned long)std::max<long>(0, 2 - gap_exp);
            mpfr_add(t[1], x[order[i - 1]], x[order[i]], MPFR_RNDN);
            mpfr_div_2ui(t[1], t[1], 1, MPFR_RNDN);
            const int expected = (d - i) % 2 == 0 ? 1 : -1;
            bool placed = false;
            for (unsigned long extra = 0; extra <= 128; extra += 24) {
                const rational sep = dyadic_round(t[1], scale + extra, prec);
                if (sep <= separators[i - 1] || sep >= 0) continue;
                if (detail::isign_at(f, sep) == expected) {
                    separators[i] = sep;
                    placed = true;
                    break;
                }
            }
            ok = placed;
        }
        if (!ok) continue;
        if (d >= 2 && separators[d - 1] >= 0) continue;

        cert.verdict = root_verdict::all_real_negative;
        cert.real_root_count = (long long)d;
        cert.nonreal_count = 0;
        cert.intervals.clear();
        for (std::size_t i = 0; i < d; ++i)
            cert.intervals.push_back({separators[i], separators[i + 1], 1});

        // the rightmost bracket ends at 0; tighten until it certifies negativity
        auto& last = cert.intervals.back();
        while (!(last.hi < 0)) {
            const rational mid = (last.lo + last.hi) / 2;
            const int sm = detail::isign_at(f, mid);
            if (sm == 0) {  // landed on the root itself; flank it inside the bracket
                last.lo = (last.lo + mid) / 2;
                last.hi = mid / 2;
                break;
            }
            if (sm > 0)
                last.hi = mid;  // sign at 0 is +; root is further left
            else
                last.lo = mid;
        }
        return true;
    }
    return false;
}

void general_path(const polynomial& q, root_certificate& cert) {
    analysis a = isolate_all(q);
    separate_from_zero(a);
    separate_enclosures(a);

    cert.real_root_count = a.real_with_multiplicity;
    cert.nonreal_count = (long long)q.degree().value() - a.real_with_multiplicity;
    cert.intervals.clear();
    bool all_negative = true;
    for (const auto& e : a.enclosures) {
        cert.intervals.push_back({e.lo, e.hi, e.multiplicity});
        if (!(e.hi < 0)) all_negative = false;
    }
    if (cert.nonreal_count > 0)
        cert.verdict = root_verdict::not_all_real;
    else if (!all_negative)
        cert.verdict = root_verdict::real_but_not_all_negative;
    else
        cert.verdict = root_verdict::all_real_negative;
}

}  // namespace

root_certificate certify_all_real_negative(const polynomial& p) {
    if (p.is_zero()) throw zero_polynomial_error();
    root_certificate cert;
    if (p.degree().value() == 0) return cert;  // vacuous_constant default

    std::size_t zeros = 0;
    while (p.coeff((long long)zeros) == 0) ++zeros;
    polynomial q = zeros ? strip_zero_roots(p, zeros) : p;

    if (q.degree().value() == 0) {  // pure monomial c x^v
        cert.verdict = root_verdict::zero_root;
        cert.real_root_count = (long long)zeros;
        cert.intervals.push_back({rational(0), rational(0), (unsigned)zeros});
        return cert;
    }
    if (q.leading() < 0) q = scale(q, -1);

    bool certified = false;
    if (q.degree().value() >= 16) {
        bool positive = true;
        for (const auto& c : q.coeffs())
            if (!(c > 0)) positive = false;
        if (positive && detail::isquarefree_probe(q)) certified = fast_path(q, cert);
    }
    if (!certified) general_path(q, cert);

    if (zeros > 0) {
        cert.verdict = root_verdict::zero_root;
        cert.real_root_count += (long long)zeros;
        isolating_interval origin{rational(0), rational(0), (unsigned)zeros};
        auto pos = std::lower_bound(cert.intervals.begin(), cert.intervals.end(), origin,
                                    [](const isolating_interval& x, const isolating_interval& y) {
                                        return x.lo < y.lo;
                                    });
        cert.intervals.insert(pos, origin);
    }
    return cert;
}

std::vector<isolating_interval> approximate_real_roots(const polynomial& p,
                                                       const rational& width) {
    if (p.is_zero()) throw zero_polynomial_error();
    if (!(width > 0)) throw invalid_parameter_error("width must be positive");
    if (p.degree().value() == 0) return {};

    analysis a = isolate_all(p);
    for (auto& e : a.enclosures)
        while (e.hi - e.lo > width) refine(e, a.ctx);
    separate_enclosures(a);

    std::vector<isolating_interval> out;
    out.reserve(a.enclosures.size());
    for (const auto& e : a.enclosures) out.push_back({e.lo, e.hi, e.multiplicity});
    return out;
}

nonnegativity_certificate certify_nonnegative(const polynomial& p) {
    if (p.is_zero()) throw zero_polynomial_error();
    if (p.degree().value() == 0) {
        if (p.coeffs()[0] >= 0) return {};
        return {nonnegativity_verdict::attains_negative, rational(0)};
    }

    const ivec cleared = detail::iprimitive(detail::iclear(p));
    const rational bound(integer(1) << detail::iroot_bound_exp(cleared));
    if (p.leading() < 0)
        return {nonnegativity_verdict::attains_negative, bound};  // sign of the lead wins out there
    if (p.degree().value() % 2 == 1)
        return {nonnegativity_verdict::attains_negative, -bound};

    // even degree, positive lead: negative values exist iff some real root has
    // odd multiplicity (the sign flips across it)
    rational width(1, 16);
    for (;;) {
        bool any_odd = false;
        for (const auto& iv : approximate_real_roots(p, width)) {
            if (iv.multiplicity % 2 == 0) continue;
            any_odd = true;
            // endpoints straddle the sign flip; an endpoint can only fail to
            // witness by landing on another root, which shrinking rules out
            if (eval(p, iv.lo) < 0) return {nonnegativity_verdict::attains_negative, iv.lo};
            if (eval(p, iv.hi) < 0) return {nonnegativity_verdict::attains_negative, iv.hi};
        }
        if (!any_odd) return {};
        width /= 16;
    }
}

}  // namespace polystab
