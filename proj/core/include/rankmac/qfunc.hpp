#pragma once

#include "rankmac/exact.hpp"

namespace rankmac {

/// Triangular number i(i-1)/2.
long sigma(long i);

/// alpha(m,u) = prod_{i<u} (q^m - q^i): the number of ordered u-tuples of
/// GF(q)-linearly independent vectors in GF(q)^m. Zero when u > m.
Int alpha(long q, long m, long u);

/// Gaussian binomial [n u]_q = alpha(n,u)/alpha(u,u): the number of
/// u-dimensional subspaces of GF(q)^n. Zero for u < 0 or u > n.
Int gaussian(long q, long n, long u);

/// beta(m,u) = prod_{i<u} [m-i 1]_q.
Int beta(long q, long m, long u);

/// Ordinary binomial coefficient.
Int binomial(long n, long k);

// The same product functions over an arbitrary exact rational base b > 0.
// Used with b = 1/q for the p-variants, and with negative first arguments
// (b^m is then a genuine rational) inside transform kernels.
Rat alpha_b(const Rat& b, long m, long u);
Rat gaussian_b(const Rat& b, long n, long u);
Rat beta_b(const Rat& b, long m, long u);

/// q-Stirling number of the second kind over base b:
///   S_b(nu,l) = b^{-sigma_l}/beta_b(l,l) * sum_i (-1)^i b^{sigma_i} [l i]_b [l-i 1]_b^nu.
/// Satisfies [m 1]_b^nu = sum_l b^{sigma_l} S_b(nu,l) beta_b(m,l).
Rat stirling2_b(const Rat& b, long nu, long l);

// p = 1/q variants. They relate to the base-q functions by
//   alpha(m,u)    = p^{-mu-sigma_u} (-1)^u alpha_p(m,u)
//   [n u]         = p^{-u(n-u)} [n u]_p
//   beta(m,u)     = p^{-u(m-u)-sigma_u} beta_p(m,u).
Rat alpha_p(long q, long m, long u);
Rat gaussian_p(long q, long n, long u);
Rat beta_p(long q, long m, long u);

Rat q_stirling2(long q, long nu, long l);
Rat p_stirling2(long q, long nu, long l);

}  // namespace rankmac
