#include "rankmac/mrd.hpp"

#include <algorithm>

#include "rankmac/qfunc.hpp"

namespace rankmac {

Int singleton_bound(long q, int m, int n, int d) {
    if (d < 1 || d > std::min(m, n))
        throw std::invalid_argument("singleton_bound: need 1 <= d <= min(m,n)");
    Int a = pow_int(q, static_cast<unsigned long>(m) * static_cast<unsigned long>(n - d + 1));
    Int b = pow_int(q, static_cast<unsigned long>(n) * static_cast<unsigned long>(m - d + 1));
    return std::min(a, b);
}

bool is_mrd(const LinearCode& c, std::uint64_t cap) {
    auto d = min_rank_distance(c, cap);
    if (!d) return false;
    return c.cardinality() == singleton_bound(c.field().q(), c.field().m(), c.n(), *d);
}

RankDistribution mrd_distribution(long q, int m, int n, int k) {
    if (!(1 <= k && k <= n && n <= m))
        throw std::invalid_argument("mrd_distribution: need 1 <= k <= n <= m");
    const int d = n - k + 1;
    RankDistribution A(static_cast<size_t>(n) + 1, Int(0));
    A[0] = 1;
    for (int i = 0; i <= n - d; ++i) {
        Int s = 0;
        for (int j = 0; j <= i; ++j) {
            Int term = pow_int(q, static_cast<unsigned long>(sigma(i - j))) * gaussian(q, d + i, d + j) *
                       (pow_int(q, static_cast<unsigned long>(m) * static_cast<unsigned long>(j + 1)) - 1);
            if ((i - j) % 2 != 0) term = -term;
            s += term;
        }
        A[static_cast<size_t>(d + i)] = gaussian(q, n, d + i) * s;
    }
    return A;
}

RankDistribution class2_distribution(long q, int m, int n, int k_eff) {
    if (n < m) throw std::invalid_argument("class2_distribution: need n >= m (use mrd_distribution)");
    if (!(1 <= k_eff && k_eff <= m))
        throw std::invalid_argument("class2_distribution: need 1 <= k_eff <= m");
    // transpose: (m, k_eff) Class-I code over GF(q^n); ranks are preserved
    RankDistribution swapped = mrd_distribution(q, n, m, k_eff);
    RankDistribution out(static_cast<size_t>(n) + 1, Int(0));
    for (size_t i = 0; i < swapped.size(); ++i) out[i] = swapped[i];
    return out;
}

std::vector<Rat> gauss_binom_transform(long q, const std::vector<Rat>& b) {
    const long l = static_cast<long>(b.size()) - 1;
    std::vector<Rat> a(b.size(), Rat(0));
    for (long j = 0; j <= l; ++j)
        for (long i = 0; i <= j; ++i) a[static_cast<size_t>(j)] += Rat(gaussian(q, l - i, l - j)) * b[static_cast<size_t>(i)];
    return a;
}

std::vector<Rat> gauss_binom_inverse(long q, const std::vector<Rat>& a) {
    const long l = static_cast<long>(a.size()) - 1;
    std::vector<Rat> b(a.size(), Rat(0));
    for (long i = 0; i <= l; ++i)
        for (long j = 0; j <= i; ++j) {
            Rat term = Rat(gaussian(q, l - j, l - i) * pow_int(q, static_cast<unsigned long>(sigma(i - j)))) *
                       a[static_cast<size_t>(j)];
            if ((i - j) % 2 != 0) term = -term;
            b[static_cast<size_t>(i)] += term;
        }
    return b;
}

}  // namespace rankmac
