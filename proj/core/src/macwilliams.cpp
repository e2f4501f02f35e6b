#include "rankmac/macwilliams.hpp"

#include "rankmac/qfunc.hpp"

namespace rankmac {

HomogPoly krawtchouk_kernel(long q, int i, int n) {
    if (i < 0 || i > n) throw std::invalid_argument("krawtchouk_kernel: need 0 <= i <= n");
    return q_product(alternating_enum(q, i), full_space_enum(q, n - i));
}

HomogPoly mrd_dual_vector_enum(long q, int r, int m) {
    if (r < 0 || r > m) throw std::invalid_argument("mrd_dual_vector_enum: need 0 <= r <= m");
    const Rat qm = pow_rat(Rat(q), m);
    HomogPoly sum = full_space_enum(q, r) + alternating_enum(q, r).scaled(qm - 1);
    std::vector<Int> counts;
    for (const Rat& c : sum.coeffs_at(m)) counts.push_back(to_int(c / qm));
    return HomogPoly::from_counts(q, counts);
}

HomogPoly dual_vector_enum(long q, int n, int r, int m) {
    if (r < 0 || r > std::min(m, n))
        throw std::invalid_argument("dual_vector_enum: need 0 <= r <= min(m,n)");
    const Rat qm = pow_rat(Rat(q), m);
    HomogPoly sum = full_space_enum(q, n) + krawtchouk_kernel(q, r, n).scaled(qm - 1);
    std::vector<Int> counts;
    for (const Rat& c : sum.coeffs_at(m)) counts.push_back(to_int(c / qm));
    return HomogPoly::from_counts(q, counts);
}

Rat krawtchouk_rat(long q, int j, int i, int m, int n) {
    if (j < 0 || j > n || i < 0 || i > n) throw std::invalid_argument("krawtchouk: need 0 <= i,j <= n");
    const Rat qr(q);
    Rat s(0);
    for (int l = 0; l <= j; ++l) {
        const Int g1 = gaussian(q, i, l);
        const Int g2 = gaussian(q, n - i, j - l);
        if (g1 == 0 || g2 == 0) continue;
        Rat term = Rat(g1 * g2) * pow_rat(qr, sigma(l) + static_cast<long>(l) * (n - i)) *
                   alpha_b(qr, m - l, j - l);
        if (l % 2 != 0) term = -term;
        s += term;
    }
    return s;
}

Int krawtchouk(long q, int j, int i, int m, int n) { return to_int(krawtchouk_rat(q, j, i, m, n)); }

namespace {

RankDistribution divide_exactly(const std::vector<Rat>& coeffs, const Rat& divisor) {
    RankDistribution out;
    out.reserve(coeffs.size());
    for (const Rat& c : coeffs) {
        const Rat b = c / divisor;
        if (!is_integer(b))
            throw NonIntegralDistribution("transform output " + b.get_str() +
                                          " is not an integer; input was not a code distribution");
        out.push_back(to_int(b));
    }
    return out;
}

}  // namespace

RankDistribution macwilliams_functional(long q, int m, int k, const RankDistribution& A) {
    if (A.empty()) throw std::invalid_argument("macwilliams_functional: empty distribution");
    const int n = static_cast<int>(A.size()) - 1;
    HomogPoly acc(q, n);
    for (int i = 0; i <= n; ++i) {
        if (A[static_cast<size_t>(i)] == 0) continue;
        acc += krawtchouk_kernel(q, i, n).scaled(Rat(A[static_cast<size_t>(i)]));
    }
    return divide_exactly(acc.coeffs_at(m), pow_rat(Rat(q), static_cast<long>(m) * k));
}

RankDistribution macwilliams_krawtchouk(long q, int m, int k, const RankDistribution& A) {
    if (A.empty()) throw std::invalid_argument("macwilliams_krawtchouk: empty distribution");
    const int n = static_cast<int>(A.size()) - 1;
    std::vector<Rat> coeffs(static_cast<size_t>(n) + 1, Rat(0));
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i) {
            if (A[static_cast<size_t>(i)] == 0) continue;
            coeffs[static_cast<size_t>(j)] += Rat(A[static_cast<size_t>(i)]) * krawtchouk_rat(q, j, i, m, n);
        }
    return divide_exactly(coeffs, pow_rat(Rat(q), static_cast<long>(m) * k));
}

}  // namespace rankmac
