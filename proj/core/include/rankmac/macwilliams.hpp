#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rankmac/codes.hpp"
#include "rankmac/qpoly.hpp"

namespace rankmac {

/// Thrown when a transform that must produce integer counts does not; this
/// proves the input was not a genuine code distribution.
struct NonIntegralDistribution : std::domain_error {
    using std::domain_error::domain_error;
};

/// (x-y)^{[i]} * [x+(q^m-1)y]^{[n-i]}: the kernel of the dual transform, as a
/// symbolic polynomial in Q = q^m. Its y^j coefficient at concrete (m,n) is
/// the generalized Krawtchouk value P_j(i;m,n).
HomogPoly krawtchouk_kernel(long q, int i, int n);

/// Rank weight enumerator of any (r, r-1, 2) MRD code,
/// q^{-m} { [x+(q^m-1)y]^{[r]} + (q^m-1)(x-y)^{[r]} }, at concrete m.
/// Requires r <= m (no rank-r vector exists otherwise).
HomogPoly mrd_dual_vector_enum(long q, int r, int m);

/// Rank weight enumerator of <v>^perp for any v of rank r in GF(q^m)^n:
/// q^{-m} { a_n + (q^m-1) b_r * a_{n-r} }, at concrete m. Requires
/// 0 <= r <= min(m,n).
HomogPoly dual_vector_enum(long q, int n, int r, int m);

/// Generalized Krawtchouk polynomial
///   P_j(i;m,n) = sum_l [i l][n-i j-l] (-1)^l q^{sigma_l + l(n-i)} alpha(m-l,j-l),
/// evaluated exactly (intermediate terms may be rational; the value is an integer).
Rat krawtchouk_rat(long q, int j, int i, int m, int n);
Int krawtchouk(long q, int j, int i, int m, int n);

/// Dual rank distribution through the functional transform:
/// B_j = q^{-mk} [y^j x^{n-j}] sum_i A_i (x-y)^{[i]} * [x+(q^m-1)y]^{[n-i]}.
/// A must have length n+1. Throws NonIntegralDistribution when the exact
/// division leaves non-integers.
RankDistribution macwilliams_functional(long q, int m, int k, const RankDistribution& A);

/// Same transform through the Krawtchouk coefficient form
/// B_j = q^{-mk} sum_i A_i P_j(i;m,n). Identical output on every input.
RankDistribution macwilliams_krawtchouk(long q, int m, int k, const RankDistribution& A);

/// One dual-distribution computation with its provenance, for reporting.
struct TransformReport {
    long q = 0;
    int m = 0, n = 0, k = 0;
    RankDistribution input;
    RankDistribution output;
    std::string method;  // "functional" | "krawtchouk" | "brute"
};

}  // namespace rankmac
