// Combinatorial and special-function identities: super Catalan numbers,
// Szily's formula, the symmetric-function identity, Q_n^p, terminating 2F1,
// Jacobi polynomials, the S_r decomposition, and Toeplitz minor scans.
#pragma once

#include <utility>
#include <vector>

#include "polystab/operators.hpp"
#include "polystab/report.hpp"

namespace polystab {

// (base)(base+1)...(base+length-1); empty product = 1
rational pochhammer(const rational& base, unsigned length);

// S(p,k) = C(2p,p) C(2k,k) / C(p+k,p); asserts integrality.
rational super_catalan(unsigned p, unsigned k);

// Brute-force sum_{r=-b}^{b} (-1)^r C(2a,a-r) C(2b,b-r) against C(2a,a)C(2b,b)/C(a+b,a).
verification_report szily_check(unsigned a, unsigned b);

// LHS sum_{i<=j} mu_{j-i} e_i(z) e_j(z) vs RHS e_n(z) * sum_k gamma_k e_{n-k}(z_i + 1/z_i).
verification_report verify_symmetric_identity(const mu_sequence& mu,
                                              const std::vector<rational>& points);

// Q_n^p(z) = sum_k (S(p,k)/2) C(n,2k) z^k, degree floor(n/2)
polynomial q_polynomial(unsigned n, unsigned p);

// sum_k ((a)_k (b)_k / (k! (c)_k)) scale^k z^k; must terminate by n_cap.
polynomial gauss_2f1_truncated(const rational& a, const rational& b, const rational& c,
                               const rational& scale, unsigned n_cap);

// P_m^{(alpha,beta)}(x), exact rational coefficients
polynomial jacobi_polynomial(unsigned m, const rational& alpha, const rational& beta);

// Parity-dispatched identity between Q_n^p and the Jacobi polynomial at each sample,
// plus the root map gamma -> z = (gamma-1)/(4(gamma+1)) landing in (-inf, 0) on Q's roots.
verification_report verify_jacobi_relation(unsigned n, unsigned p,
                                           const std::vector<rational>& samples);

struct sr_weight {
    unsigned r = 0;
    rational weight;
};

// L_k^p = sum_j w_j S_j with w_j = (-1)^{j+1} C(2p,p-j), j = 1..p; sum w_j = C(2p-1,p).
std::vector<sr_weight> lkp_sr_decomposition(unsigned p);

// Toeplitz section entries (i,j) = seq[t + i - j] (out of range -> 0).
struct toeplitz_window {
    std::vector<rational> seq;
    int center = 0;
    unsigned order = 1;

    rational entry(unsigned i, unsigned j) const;
    rational determinant() const;
};

// All contiguous square minors of order <= max_order with diagonal offsets
// |t| <= window; reports the minimum and the first negative minor found.
verification_report toeplitz_minor_scan(const std::vector<rational>& seq,
                                        unsigned max_order, unsigned window);

}  // namespace polystab
