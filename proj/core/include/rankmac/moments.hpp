#pragma once

#include <string>
#include <vector>

#include "rankmac/codes.hpp"
#include "rankmac/exact.hpp"

namespace rankmac {

/// One evaluated identity instance: both sides computed exactly, plus whether
/// the hypothesis of the identity was met at all (inapplicable instances are
/// reported as skipped, never as failures).
struct MomentCheck {
    std::string identity;
    Rat lhs{0};
    Rat rhs{0};
    bool applicable = true;
    std::string reason;  // set when not applicable

    bool holds() const { return applicable && lhs == rhs; }
    bool skipped() const { return !applicable; }
};

/// Convention for the minimum rank distance of the dual when it is the zero
/// code: n+1, so every nu is applicable.
int dual_min_distance(const RankDistribution& B);
/// Diameter of the dual; 0 for the zero code.
int dual_diameter(const RankDistribution& B);

// Binomial moment with respect to x:
//   sum_{i<=n-nu} [n-i nu] A_i = q^{m(k-nu)} sum_{j<=nu} [n-j n-nu] B_j.
MomentCheck binomial_moment_x(long q, int m, int k, const RankDistribution& A,
                              const RankDistribution& B, int nu);
// Simplified form for nu < d'_R: rhs = q^{m(k-nu)} [n nu].
MomentCheck binomial_moment_x_simplified(long q, int m, int k, const RankDistribution& A, int nu,
                                         int d_dual);

// Binomial moment with respect to y:
//   sum_{i>=nu} [i nu] q^{nu(n-i)} A_i
//     = q^{m(k-nu)} sum_{j<=nu} [n-j n-nu] (-1)^j q^{sigma_j + j(nu-j)} alpha(m-j,nu-j) B_j.
MomentCheck binomial_moment_y(long q, int m, int k, const RankDistribution& A,
                              const RankDistribution& B, int nu);
// Simplified for nu < d'_R: rhs = q^{m(k-nu)} [n nu] alpha(m,nu).
MomentCheck binomial_moment_y_min_dist(long q, int m, int k, const RankDistribution& A, int nu,
                                       int d_dual);
// For nu > diameter of the dual: the alternating sum over A vanishes.
MomentCheck binomial_moment_y_diameter(long q, int m, const RankDistribution& A, int nu,
                                       int diam_dual);

// Pless analogue with respect to x:
//   q^{-mk} sum_i [n-i 1]^nu A_i
//     = sum_{j<=nu} B_j sum_{l<=nu} [n-j n-l] beta(l,l) S_q(nu,l) q^{-ml+sigma_l}.
MomentCheck pless_x(long q, int m, int k, const RankDistribution& A, const RankDistribution& B,
                    int nu);
// Both closed forms for nu < d'_R, checked against the lhs and each other.
MomentCheck pless_x_simplified(long q, int m, int k, const RankDistribution& A, int nu, int d_dual);

// Pless analogue with respect to y, in p = 1/q arithmetic:
//   p^{mk} sum_i [i 1]_p^nu A_i
//     = sum_{j<=nu} B_j p^{j(m+n-j)} sum_{l=j}^{nu} beta_p(l,l) S_p(nu,l) (-1)^l [n-j n-l]_p alpha_p(m-j,l-j).
MomentCheck pless_y(long q, int m, int k, const RankDistribution& A, const RankDistribution& B,
                    int nu);
MomentCheck pless_y_simplified(long q, int m, int k, const RankDistribution& A, int nu, int d_dual);

/// T_{lambda,mu,nu}(C) = q^{-mk} sum_i [i lambda]^mu q^{nu(n-i)} A_i.
/// nu may be negative (rational q-powers).
Rat t_moment(long q, int m, int k, const RankDistribution& A, int lambda, int mu, long nu);

// T_{lambda,1,nu} through the nu-th q-moments (binomial-type reduction).
MomentCheck t_reduction_lambda(long q, int m, int k, const RankDistribution& A, int lambda, long nu);
// T_{1,mu,nu} through the nu-th q-moments.
MomentCheck t_reduction_mu(long q, int m, int k, const RankDistribution& A, int mu, long nu);

// For nu < d'_R, T_{0,0,nu} equals three code-transparent closed forms; all
// four values are compared.
MomentCheck t_closed_forms(long q, int m, int k, const RankDistribution& A, int nu, int d_dual);
// Code-transparent forms of T_{lambda,1,nu} and T_{1,mu,nu} for
// 0 <= lambda, mu <= nu < d'_R.
MomentCheck t_transparent_lambda(long q, int m, int k, const RankDistribution& A, int lambda,
                                 int nu, int d_dual);
MomentCheck t_transparent_mu(long q, int m, int k, const RankDistribution& A, int mu, int nu,
                             int d_dual);

/// delta(m,nu,j) = sum_{i<=j} [j i] (-1)^i q^{sigma_i} alpha(m-i,nu);
/// equals alpha(nu,j) alpha(m-j,nu-j) q^{j(m-j)}. Rational when j > m.
Rat delta_sum(long q, long m, long nu, long j);
Rat delta_closed(long q, long m, long nu, long j);

/// theta(n,nu,j) = sum_{l<=j} [j l][n-j nu-l] q^{l(n-nu)} (-1)^l q^{sigma_l} alpha(nu-l,j-l);
/// equals (-1)^j q^{sigma_j} [n-j n-nu].
Rat theta_sum(long q, long n, long nu, long j);
Rat theta_closed(long q, long n, long nu, long j);

}  // namespace rankmac
