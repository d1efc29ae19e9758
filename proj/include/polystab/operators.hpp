// The non-linear coefficient operators (L_k^p, S_r, T_mu) and the
// Laguerre / extended Turan expressions they quantize.
#pragma once

#include <variant>
#include <vector>

#include "polystab/polynomial.hpp"

namespace polystab {

// Finitely supported mu_0, mu_1, ... ; mu_k = 0 beyond the stored prefix.
struct mu_sequence {
    std::vector<rational> mus;

    rational mu(long long k) const;
};

struct lkp_op {
    unsigned p = 1;
};
struct sr_op {
    unsigned r = 0;
};
struct tmu_op {
    mu_sequence mu;
};

using operator_spec = std::variant<lkp_op, sr_op, tmu_op>;

// (c_0, ..., c_p): c_0 = C(2p-1,p), c_j = (-1)^j C(2p,p-j). Throws for p < 1.
std::vector<rational> lkp_coefficients(unsigned p);

// mu of L^p: mu_0 = C(2p-1,p), mu_{2j} = (-1)^j C(2p,p-j) for 1 <= j <= p, odd entries 0.
mu_sequence mu_of_lkp(unsigned p);

// Coefficient k of the result is
//   C(2p-1,p) a_k^2 + sum_{j=1}^p (-1)^j C(2p,p-j) a_{k-j} a_{k+j},
// indices clipped to 0 outside the support; result indexed k = 0..deg psi, then normalized.
polynomial apply_lkp(const polynomial& psi, unsigned p);

// a_k -> a_k^2 - a_{k-r} a_{k+r}; r = 0 produces the zero polynomial.
polynomial apply_sr(const polynomial& psi, unsigned r);

// sum_{i<=j} mu_{j-i} a_i a_j z^{i+j}
polynomial apply_tmu(const polynomial& psi, const mu_sequence& mu);

polynomial apply_operator(const polynomial& psi, const operator_spec& spec);

// gamma_k = sum_{j=0}^{floor(k/2)} C(k,j) mu_{k-2j}
rational gamma_transform(const mu_sequence& mu, unsigned k);

// L_p(phi) = sum_{j=0}^{2p} ((-1)^{p+j}/(2p)!) C(2p,j) phi^(j) phi^(2p-j)
polynomial laguerre_expression(const polynomial& phi, unsigned p);

// C(2p-1,p) g_{k+p}^2 + sum_{j=1}^p (-1)^j C(2p,p-j) g_{k+p-j} g_{k+p+j}
// = ((2p)!/2) * L_p(phi^(k)) at 0, in the gamma presentation.
rational extended_turan_at_zero(const taylor_data& gammas, unsigned k, unsigned p);

}  // namespace polystab
