// Integer-cleared polynomial kernels for the certification machinery: primitive
// PRS gcd, sign-exact Sturm chains, root bounds, and the modular squarefree
// probe. Everything here is internal to the library.
#pragma once

#include <vector>

#include "polystab/polynomial.hpp"

namespace polystab::detail {

// ascending coefficients, trailing zeros stripped; empty = zero
using ivec = std::vector<integer>;

ivec iclear(const polynomial& p);  // denominators cleared; same roots
polynomial to_polynomial(const ivec& v);

ivec iprimitive(ivec v);  // divided by positive content; sign preserved
ivec iderivative(const ivec& v);
ivec inegate(ivec v);

// sign of v at x, at -inf, at +inf (exact homogeneous evaluation)
int isign_at(const ivec& v, const rational& x);
int isign_neg_inf(const ivec& v);
int isign_pos_inf(const ivec& v);

// pseudo-remainder lc(B)^(deg A - deg B + 1) * A mod B (B nonconstant or not,
// both handled); A, B nonzero
ivec iprem(ivec a, const ivec& b);

// primitive, positive leading coefficient; gcd(0, b) = normalized b
ivec igcd(ivec a, ivec b);

// exact quotient n / d; requires exact divisibility
ivec idiv_exact(const ivec& n, const ivec& d);

// Sign-exact Sturm chain of a squarefree input (primitive rescaling per element).
std::vector<ivec> isturm(const ivec& squarefree);

long long ivariations_at(const std::vector<ivec>& chain, const rational& x);
long long ivariations_neg_inf(const std::vector<ivec>& chain);
long long ivariations_pos_inf(const std::vector<ivec>& chain);

// distinct real roots of the squarefree poly behind `chain` in (lo, hi];
// callers arrange endpoints to be non-roots
long long icount_open(const std::vector<ivec>& chain, const rational& lo, const rational& hi);

// all roots satisfy |x| < 2^e; e = 0 when only the leading coefficient is nonzero
unsigned long iroot_bound_exp(const ivec& v);

// 2^-s strictly under-approximates the minimal distance between distinct
// roots; valid for squarefree v with deg >= 2
unsigned long iseparation_exp(const ivec& v);

// true -> p is certainly squarefree over Q (one-sided; false is inconclusive)
bool isquarefree_probe(const polynomial& p);

}  // namespace polystab::detail
