#include "intpoly.hpp"

#include <algorithm>
#include <cstdint>

namespace polystab::detail {

namespace {

void strip(ivec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

integer content_abs(const ivec& v) {
    integer g = 0;
    for (const auto& c : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;  // zero only for the zero polynomial
}

unsigned long bitlen(const integer& z) { return mpz_sizeinbase(z.get_mpz_t(), 2); }

unsigned long clog2(unsigned long n) {  // ceil(log2 n), n >= 1
    unsigned long bits = 0;
    for (unsigned long v = n - 1; v > 0; v >>= 1) ++bits;
    return bits;
}

}  // namespace

ivec iclear(const polynomial& p) {
    integer lcm = 1;
    for (const auto& c : p.coeffs())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    ivec v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(integer(c.get_num() * (lcm / c.get_den())));
    strip(v);
    return v;
}

polynomial to_polynomial(const ivec& v) {
    std::vector<rational> c;
    c.reserve(v.size());
    for (const auto& z : v) c.emplace_back(z);
    return polynomial(std::move(c));
}

ivec iprimitive(ivec v) {
    const integer g = content_abs(v);
    if (g > 1)
        for (auto& c : v) c /= g;
    return v;
}

ivec iderivative(const ivec& v) {
    ivec d;
    for (std::size_t k = 1; k < v.size(); ++k) d.push_back(v[k] * (unsigned long)k);
    strip(d);
    return d;
}

ivec inegate(ivec v) {
    for (auto& c : v) c = -c;
    return v;
}

int isign_at(const ivec& v, const rational& x) {
    // sum v_k num^k den^(d-k), accumulated Horner-style from the top
    const integer& num = x.get_num();
    const integer& den = x.get_den();
    integer acc = 0, dpow = 1;
    for (std::size_t i = v.size(); i-- > 0;) {
        acc = acc * num + v[i] * dpow;
        if (i > 0) dpow *= den;
    }
    return sgn(acc);
}

int isign_neg_inf(const ivec& v) {
    if (v.empty()) return 0;
    const int lead = sgn(v.back());
    return (v.size() - 1) % 2 == 0 ? lead : -lead;
}

int isign_pos_inf(const ivec& v) { return v.empty() ? 0 : sgn(v.back()); }

ivec iprem(ivec a, const ivec& b) {
    const integer& lb = b.back();
    long long spare = (long long)a.size() - (long long)b.size() + 1;
    while (!a.empty() && a.size() >= b.size()) {
        const integer la = a.back();
        const std::size_t shift = a.size() - b.size();
        ivec next(a.size() - 1);
        for (std::size_t i = 0; i < next.size(); ++i) {
            next[i] = lb * a[i];
            if (i >= shift) next[i] -= la * b[i - shift];
        }
        strip(next);
        a = std::move(next);
        --spare;
    }
    // top up to the canonical lc(b)^(deg a - deg b + 1) multiplier
    for (; spare > 0 && !a.empty(); --spare)
        for (auto& c : a) c *= lb;
    return a;
}

ivec igcd(ivec a, ivec b) {
    strip(a);
    strip(b);
    a = iprimitive(std::move(a));
    b = iprimitive(std::move(b));
    if (a.size() < b.size()) a.swap(b);
    while (!b.empty()) {
        ivec r = iprem(a, b);
        a = std::move(b);
        b = iprimitive(std::move(r));
    }
    if (!a.empty() && sgn(a.back()) < 0) a = inegate(std::move(a));
    return a;
}

ivec idiv_exact(const ivec& n, const ivec& d) {
    if (n.empty()) return {};
    ivec rem = n;
    ivec quot(n.size() - d.size() + 1, integer(0));
    while (!rem.empty() && rem.size() >= d.size()) {
        const std::size_t shift = rem.size() - d.size();
        integer q = rem.back() / d.back();  // exact by contract
        quot[shift] = q;
        for (std::size_t i = 0; i < d.size(); ++i) rem[shift + i] -= q * d[i];
        strip(rem);
    }
    strip(quot);
    return quot;
}

std::vector<ivec> isturm(const ivec& squarefree) {
    std::vector<ivec> chain{squarefree};
    if (squarefree.size() <= 1) return chain;
    chain.push_back(iprimitive(iderivative(squarefree)));
    while (chain.back().size() > 1) {
        const ivec& a = chain[chain.size() - 2];
        const ivec& b = chain.back();
        ivec r = iprem(a, b);
        if (r.empty()) break;  // nonconstant gcd; callers pass squarefree inputs
        // prem multiplied by lc(b)^(delta+1); a negative multiplier already
        // flipped the remainder's sign, so only flip for positive multipliers
        const bool negative_multiplier =
            sgn(b.back()) < 0 && (a.size() - b.size() + 1) % 2 == 1;
        r = iprimitive(std::move(r));
        if (!negative_multiplier) r = inegate(std::move(r));
        chain.push_back(std::move(r));
    }
    return chain;
}

namespace {

template <typename SignAt>
long long variations(const std::vector<ivec>& chain, SignAt&& sign_at) {
    long long count = 0;
    int prev = 0;
    for (const auto& f : chain) {
        const int s = sign_at(f);
        if (s != 0) {
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
    }
    return count;
}

}  // namespace

long long ivariations_at(const std::vector<ivec>& chain, const rational& x) {
    return variations(chain, [&](const ivec& f) { return isign_at(f, x); });
}

long long ivariations_neg_inf(const std::vector<ivec>& chain) {
    return variations(chain, [](const ivec& f) { return isign_neg_inf(f); });
}

long long ivariations_pos_inf(const std::vector<ivec>& chain) {
    return variations(chain, [](const ivec& f) { return isign_pos_inf(f); });
}

long long icount_open(const std::vector<ivec>& chain, const rational& lo, const rational& hi) {
    return ivariations_at(chain, lo) - ivariations_at(chain, hi);
}

unsigned long iroot_bound_exp(const ivec& v) {
    const unsigned long lead_bits = bitlen(v.back());
    long long best = -1;  // max over k of ceil((bl(a_{n-k}) - bl(a_n) + 1) / k)
    const std::size_t n = v.size() - 1;
    for (std::size_t k = 1; k <= n; ++k) {
        const integer& c = v[n - k];
        if (c == 0) continue;
        const long long x = (long long)bitlen(c) - (long long)lead_bits + 1;
        const long long q = x > 0 ? (x + (long long)k - 1) / (long long)k : x / (long long)k;
        if (q > best) best = q;
    }
    if (best < 0) return 0;  // pure monomial: only root is 0
    return (unsigned long)(best > 0 ? best : 0) + 1;
}

unsigned long iseparation_exp(const ivec& v) {
    const unsigned long d = v.size() - 1;
    unsigned long maxbits = 0;
    for (const auto& c : v) maxbits = std::max(maxbits, bitlen(c));
    // Mahler-type bound: sep > sqrt(3) d^{-(d+2)/2} ||v||_2^{-(d-1)}
    return ((d + 2) * clog2(d) + 1) / 2 + (d - 1) * (maxbits + clog2(d + 1)) + 2;
}

namespace {

constexpr std::uint64_t kProbePrime = (std::uint64_t(1) << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return (std::uint64_t)((unsigned __int128)a * b % kProbePrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kProbePrime - 2); }

using mvec = std::vector<std::uint64_t>;

void mstrip(mvec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

bool isquarefree_probe(const polynomial& p) {
    const ivec v = iclear(p);
    if (v.size() <= 2) return true;  // constants and linears are squarefree

    mvec f;
    f.reserve(v.size());
    for (const auto& c : v) {
        integer r = c % integer((unsigned long)kProbePrime);
        if (r < 0) r += integer((unsigned long)kProbePrime);
        f.push_back(r.get_ui());
    }
    mstrip(f);
    if (f.size() != v.size()) return false;  // leading coefficient vanished: inconclusive

    mvec fp;
    for (std::size_t k = 1; k < f.size(); ++k)
        fp.push_back(mulmod(f[k], k % kProbePrime));
    mstrip(fp);
    if (fp.size() + 1 != f.size()) return false;  // derivative degree dropped: inconclusive

    // Euclid in GF(q)[x]
    mvec a = f, b = fp;
    while (!b.empty()) {
        // a mod b
        const std::uint64_t inv_lead = invmod(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            const std::uint64_t q = mulmod(a.back(), inv_lead);
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                const std::uint64_t sub = mulmod(q, b[i]);
                std::uint64_t& t = a[shift + i];
                t = t >= sub ? t - sub : t + kProbePrime - sub;
            }
            mstrip(a);
        }
        a.swap(b);
    }
    return a.size() == 1;  // constant gcd -> squarefree over Q
}

}  // namespace polystab::detail
