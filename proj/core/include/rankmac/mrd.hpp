#pragma once

#include <vector>

#include "rankmac/codes.hpp"
#include "rankmac/exact.hpp"

namespace rankmac {

/// Singleton bound for the rank metric:
/// min{ q^{m(n-d+1)}, q^{n(m-d+1)} } for 1 <= d <= min(m,n).
Int singleton_bound(long q, int m, int n, int d);

/// True iff the code attains the Singleton bound at its minimum rank
/// distance. The zero code has no distance and is not MRD.
bool is_mrd(const LinearCode& c, std::uint64_t cap = kDefaultCap);

/// Analytic rank distribution of an (n,k) linear Class-I MRD code over
/// GF(q^m), n <= m: A_0 = 1, A_i = 0 for 0 < i < d = n-k+1, and
/// A_{d+i} = [n d+i] sum_{j<=i} (-1)^{i-j} q^{sigma_{i-j}} [d+i d+j] (q^{m(j+1)} - 1).
RankDistribution mrd_distribution(long q, int m, int n, int k);

/// Rank distribution of a Class-II MRD code of length n > m over GF(q^m),
/// obtained by transposing an (m, k_eff) Class-I MRD code over GF(q^n)
/// (transposition preserves rank). Total count q^{n * k_eff}. Accepts n = m,
/// where it coincides with the Class-I distribution.
RankDistribution class2_distribution(long q, int m, int n, int k_eff);

/// a_j = sum_{i<=j} [l-i l-j] b_i for 0 <= j <= l, and its exact inverse
/// b_i = sum_{j<=i} (-1)^{i-j} q^{sigma_{i-j}} [l-j l-i] a_j (the inversion
/// used to solve the MRD moment equations).
std::vector<Rat> gauss_binom_transform(long q, const std::vector<Rat>& b);
std::vector<Rat> gauss_binom_inverse(long q, const std::vector<Rat>& a);

}  // namespace rankmac
