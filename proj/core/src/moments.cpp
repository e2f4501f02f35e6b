#include "rankmac/moments.hpp"

#include "rankmac/qfunc.hpp"

namespace rankmac {

namespace {

int length_of(const RankDistribution& A) { return static_cast<int>(A.size()) - 1; }

MomentCheck skipped(std::string identity, std::string reason) {
    MomentCheck c;
    c.identity = std::move(identity);
    c.applicable = false;
    c.reason = std::move(reason);
    return c;
}

std::string nu_vs(const char* rel, int nu, const char* bound, int value) {
    return "nu=" + std::to_string(nu) + " " + rel + " " + bound + "=" + std::to_string(value);
}

}  // namespace

int dual_min_distance(const RankDistribution& B) {
    auto d = min_rank_distance(B);
    return d ? *d : length_of(B) + 1;
}

int dual_diameter(const RankDistribution& B) {
    auto d = diameter(B);
    return d ? *d : 0;
}

MomentCheck binomial_moment_x(long q, int m, int k, const RankDistribution& A,
                              const RankDistribution& B, int nu) {
    const int n = length_of(A);
    MomentCheck c;
    c.identity = "binomial_moment_x";
    for (int i = 0; i <= n - nu; ++i) c.lhs += Rat(gaussian(q, n - i, nu) * A[static_cast<size_t>(i)]);
    Rat s(0);
    for (int j = 0; j <= nu; ++j) s += Rat(gaussian(q, n - j, n - nu) * B[static_cast<size_t>(j)]);
    c.rhs = pow_rat(Rat(q), static_cast<long>(m) * (k - nu)) * s;
    return c;
}

MomentCheck binomial_moment_x_simplified(long q, int m, int k, const RankDistribution& A, int nu,
                                         int d_dual) {
    if (nu >= d_dual)
        return skipped("binomial_moment_x_simplified", nu_vs(">=", nu, "d_dual", d_dual));
    const int n = length_of(A);
    MomentCheck c;
    c.identity = "binomial_moment_x_simplified";
    for (int i = 0; i <= n - nu; ++i) c.lhs += Rat(gaussian(q, n - i, nu) * A[static_cast<size_t>(i)]);
    c.rhs = pow_rat(Rat(q), static_cast<long>(m) * (k - nu)) * Rat(gaussian(q, n, nu));
    return c;
}

MomentCheck binomial_moment_y(long q, int m, int k, const RankDistribution& A,
                              const RankDistribution& B, int nu) {
    const int n = length_of(A);
    const Rat qr(q);
    MomentCheck c;
    c.identity = "binomial_moment_y";
    for (int i = nu; i <= n; ++i)
        c.lhs += Rat(gaussian(q, i, nu) * A[static_cast<size_t>(i)]) *
                 pow_rat(qr, static_cast<long>(nu) * (n - i));
    Rat s(0);
    for (int j = 0; j <= nu; ++j) {
        if (B[static_cast<size_t>(j)] == 0) continue;
        Rat term = Rat(gaussian(q, n - j, n - nu) * B[static_cast<size_t>(j)]) *
                   pow_rat(qr, sigma(j) + static_cast<long>(j) * (nu - j)) * alpha_b(qr, m - j, nu - j);
        if (j % 2 != 0) term = -term;
        s += term;
    }
    c.rhs = pow_rat(qr, static_cast<long>(m) * (k - nu)) * s;
    return c;
}

MomentCheck binomial_moment_y_min_dist(long q, int m, int k, const RankDistribution& A, int nu,
                                       int d_dual) {
    if (nu >= d_dual)
        return skipped("binomial_moment_y_min_dist", nu_vs(">=", nu, "d_dual", d_dual));
    const int n = length_of(A);
    const Rat qr(q);
    MomentCheck c;
    c.identity = "binomial_moment_y_min_dist";
    for (int i = nu; i <= n; ++i)
        c.lhs += Rat(gaussian(q, i, nu) * A[static_cast<size_t>(i)]) *
                 pow_rat(qr, static_cast<long>(nu) * (n - i));
    c.rhs = pow_rat(qr, static_cast<long>(m) * (k - nu)) * Rat(gaussian(q, n, nu) * alpha(q, m, nu));
    return c;
}

MomentCheck binomial_moment_y_diameter(long q, int m, const RankDistribution& A, int nu,
                                       int diam_dual) {
    const int n = length_of(A);
    if (nu <= diam_dual || nu > n)
        return skipped("binomial_moment_y_diameter",
                       nu_vs("not >", nu, "dual diameter", diam_dual) + " (or nu > n)");
    const Rat qr(q);
    MomentCheck c;
    c.identity = "binomial_moment_y_diameter";
    for (int i = 0; i <= nu; ++i) {
        if (A[static_cast<size_t>(i)] == 0) continue;
        Rat term = Rat(gaussian(q, n - i, n - nu) * A[static_cast<size_t>(i)]) *
                   pow_rat(qr, sigma(i) + static_cast<long>(i) * (nu - i)) * alpha_b(qr, m - i, nu - i);
        if (i % 2 != 0) term = -term;
        c.lhs += term;
    }
    c.rhs = Rat(0);
    return c;
}

MomentCheck pless_x(long q, int m, int k, const RankDistribution& A, const RankDistribution& B,
                    int nu) {
    const int n = length_of(A);
    const Rat qr(q);
    MomentCheck c;
    c.identity = "pless_x";
    for (int i = 0; i <= n; ++i)
        c.lhs += pow_rat(Rat(gaussian(q, n - i, 1)), nu) * Rat(A[static_cast<size_t>(i)]);
    c.lhs *= pow_rat(qr, -static_cast<long>(m) * k);
    for (int j = 0; j <= nu; ++j) {
        if (B[static_cast<size_t>(j)] == 0) continue;
        Rat inner(0);
        for (int l = 0; l <= nu; ++l)
            inner += Rat(gaussian(q, n - j, n - l) * beta(q, l, l)) * q_stirling2(q, nu, l) *
                     pow_rat(qr, -static_cast<long>(m) * l + sigma(l));
        c.rhs += Rat(B[static_cast<size_t>(j)]) * inner;
    }
    return c;
}

MomentCheck pless_x_simplified(long q, int m, int k, const RankDistribution& A, int nu, int d_dual) {
    if (nu >= d_dual) return skipped("pless_x_simplified", nu_vs(">=", nu, "d_dual", d_dual));
    const int n = length_of(A);
    const Rat qr(q);
    MomentCheck c;
    c.identity = "pless_x_simplified";
    for (int i = 0; i <= n; ++i)
        c.lhs += pow_rat(Rat(gaussian(q, n - i, 1)), nu) * Rat(A[static_cast<size_t>(i)]);
    c.lhs *= pow_rat(qr, -static_cast<long>(m) * k);
    Rat form1(0);
    for (int l = 0; l <= nu; ++l)
        form1 += Rat(beta(q, n, l)) * q_stirling2(q, nu, l) *
                 pow_rat(qr, -static_cast<long>(m) * l + sigma(l));
    Rat form2(0);
    for (int i = 0; i <= n; ++i)
        form2 += pow_rat(Rat(gaussian(q, n - i, 1)), nu) * Rat(gaussian(q, n, i) * alpha(q, m, i));
    form2 *= pow_rat(qr, -static_cast<long>(m) * n);
    if (form1 != form2) {
        // surface the disagreement of the two closed forms as a failure
        MomentCheck bad;
        bad.identity = "pless_x_simplified(forms)";
        bad.lhs = form1;
        bad.rhs = form2;
        return bad;
    }
    c.rhs = form1;
    return c;
}

MomentCheck pless_y(long q, int m, int k, const RankDistribution& A, const RankDistribution& B,
                    int nu) {
    const int n = length_of(A);
    const Rat p = make_rat(1, q);
    MomentCheck c;
    c.identity = "pless_y";
    for (int i = 0; i <= n; ++i)
        c.lhs += pow_rat(gaussian_b(p, i, 1), nu) * Rat(A[static_cast<size_t>(i)]);
    c.lhs *= pow_rat(p, static_cast<long>(m) * k);
    for (int j = 0; j <= nu; ++j) {
        if (B[static_cast<size_t>(j)] == 0) continue;
        Rat inner(0);
        for (int l = j; l <= nu; ++l) {
            Rat term = beta_b(p, l, l) * stirling2_b(p, nu, l) * gaussian_b(p, n - j, n - l) *
                       alpha_b(p, m - j, l - j);
            if (l % 2 != 0) term = -term;
            inner += term;
        }
        c.rhs += Rat(B[static_cast<size_t>(j)]) * pow_rat(p, static_cast<long>(j) * (m + n - j)) * inner;
    }
    return c;
}

MomentCheck pless_y_simplified(long q, int m, int k, const RankDistribution& A, int nu, int d_dual) {
    if (nu >= d_dual) return skipped("pless_y_simplified", nu_vs(">=", nu, "d_dual", d_dual));
    const int n = length_of(A);
    const Rat p = make_rat(1, q);
    MomentCheck c;
    c.identity = "pless_y_simplified";
    for (int i = 0; i <= n; ++i)
        c.lhs += pow_rat(gaussian_b(p, i, 1), nu) * Rat(A[static_cast<size_t>(i)]);
    c.lhs *= pow_rat(p, static_cast<long>(m) * k);
    for (int l = 0; l <= nu; ++l) {
        Rat term = beta_b(p, n, l) * stirling2_b(p, nu, l) * alpha_b(p, m, l);
        if (l % 2 != 0) term = -term;
        c.rhs += term;
    }
    return c;
}

Rat t_moment(long q, int m, int k, const RankDistribution& A, int lambda, int mu, long nu) {
    const int n = length_of(A);
    const Rat qr(q);
    Rat s(0);
    for (int i = 0; i <= n; ++i) {
        if (A[static_cast<size_t>(i)] == 0) continue;
        s += pow_rat(Rat(gaussian(q, i, lambda)), mu) * pow_rat(qr, nu * (n - i)) *
             Rat(A[static_cast<size_t>(i)]);
    }
    return pow_rat(qr, -static_cast<long>(m) * k) * s;
}

MomentCheck t_reduction_lambda(long q, int m, int k, const RankDistribution& A, int lambda,
                               long nu) {
    const int n = length_of(A);
    const Rat qr(q);
    MomentCheck c;
    c.identity = "t_reduction_lambda";
    c.lhs = t_moment(q, m, k, A, lambda, 1, nu);
    Rat s(0);
    for (int l = 0; l <= lambda; ++l) {
        Rat term = Rat(gaussian(q, lambda, l)) * pow_rat(qr, sigma(l) + static_cast<long>(n) * (lambda - l)) *
                   t_moment(q, m, k, A, 0, 0, nu - lambda + l);
        if (l % 2 != 0) term = -term;
        s += term;
    }
    c.rhs = s / Rat(alpha(q, lambda, lambda));
    return c;
}

MomentCheck t_reduction_mu(long q, int m, int k, const RankDistribution& A, int mu, long nu) {
    const int n = length_of(A);
    const Rat qr(q);
    MomentCheck c;
    c.identity = "t_reduction_mu";
    c.lhs = t_moment(q, m, k, A, 1, mu, nu);
    Rat s(0);
    for (int a = 0; a <= mu; ++a) {
        Rat term = Rat(binomial(mu, a)) * pow_rat(qr, static_cast<long>(a) * n) *
                   t_moment(q, m, k, A, 0, 0, nu - a);
        if (a % 2 != 0) term = -term;
        s += term;
    }
    c.rhs = s / pow_rat(Rat(1 - q), mu);
    return c;
}

MomentCheck t_closed_forms(long q, int m, int k, const RankDistribution& A, int nu, int d_dual) {
    if (nu >= d_dual) return skipped("t_closed_forms", nu_vs(">=", nu, "d_dual", d_dual));
    const int n = length_of(A);
    const Rat qr(q);
    MomentCheck c;
    c.identity = "t_closed_forms";
    c.lhs = t_moment(q, m, k, A, 0, 0, nu);
    Rat f1(0);
    for (int j = 0; j <= nu; ++j)
        f1 += Rat(gaussian(q, nu, j) * alpha(q, n, j)) * pow_rat(qr, -static_cast<long>(m) * j);
    Rat f2(0);
    for (int i = 0; i <= n; ++i)
        f2 += Rat(gaussian(q, n, i) * alpha(q, m, i)) * pow_rat(qr, static_cast<long>(nu) * (n - i));
    f2 *= pow_rat(qr, -static_cast<long>(m) * n);
    Rat f3(0);
    for (int l = 0; l <= nu; ++l)
        f3 += Rat(gaussian(q, nu, l) * alpha(q, m, l)) * pow_rat(qr, static_cast<long>(n) * (nu - l));
    f3 *= pow_rat(qr, -static_cast<long>(m) * nu);
    if (f1 != f2 || f2 != f3) {
        MomentCheck bad;
        bad.identity = "t_closed_forms(forms)";
        bad.lhs = f1;
        bad.rhs = (f1 != f2) ? f2 : f3;
        return bad;
    }
    c.rhs = f1;
    return c;
}

MomentCheck t_transparent_lambda(long q, int m, int k, const RankDistribution& A, int lambda,
                                 int nu, int d_dual) {
    if (!(0 <= lambda && lambda <= nu && nu < d_dual))
        return skipped("t_transparent_lambda",
                       "needs 0 <= lambda <= nu < d_dual; lambda=" + std::to_string(lambda) + ", " +
                           nu_vs("vs", nu, "d_dual", d_dual));
    const int n = length_of(A);
    const Rat qr(q);
    MomentCheck c;
    c.identity = "t_transparent_lambda";
    c.lhs = t_moment(q, m, k, A, lambda, 1, nu);
    Rat s(0);
    for (int i = lambda; i <= n; ++i)
        s += Rat(gaussian(q, n - lambda, i - lambda) * alpha(q, m, i)) *
             pow_rat(qr, static_cast<long>(nu) * (n - i));
    c.rhs = pow_rat(qr, -static_cast<long>(m) * n) * Rat(gaussian(q, n, lambda)) * s;
    return c;
}

MomentCheck t_transparent_mu(long q, int m, int k, const RankDistribution& A, int mu, int nu,
                             int d_dual) {
    if (!(0 <= mu && mu <= nu && nu < d_dual))
        return skipped("t_transparent_mu", "needs 0 <= mu <= nu < d_dual; mu=" + std::to_string(mu) +
                                               ", " + nu_vs("vs", nu, "d_dual", d_dual));
    const int n = length_of(A);
    const Rat qr(q);
    MomentCheck c;
    c.identity = "t_transparent_mu";
    c.lhs = t_moment(q, m, k, A, 1, mu, nu);
    Rat s(0);
    for (int i = 0; i <= n; ++i)
        s += pow_rat(Rat(gaussian(q, i, 1)), mu) * pow_rat(qr, static_cast<long>(nu) * (n - i)) *
             Rat(gaussian(q, n, i) * alpha(q, m, i));
    c.rhs = pow_rat(qr, -static_cast<long>(m) * n) * s;
    return c;
}

Rat delta_sum(long q, long m, long nu, long j) {
    const Rat qr(q);
    Rat s(0);
    for (long i = 0; i <= j; ++i) {
        Rat term = Rat(gaussian(q, j, i)) * pow_rat(qr, sigma(i)) * alpha_b(qr, m - i, nu);
        if (i % 2 != 0) term = -term;
        s += term;
    }
    return s;
}

Rat delta_closed(long q, long m, long nu, long j) {
    return Rat(alpha(q, nu, j)) * alpha_b(Rat(q), m - j, nu - j) * pow_rat(Rat(q), j * (m - j));
}

Rat theta_sum(long q, long n, long nu, long j) {
    const Rat qr(q);
    Rat s(0);
    for (long l = 0; l <= j; ++l) {
        Rat term = Rat(gaussian(q, j, l) * gaussian(q, n - j, nu - l) * alpha(q, nu - l, j - l)) *
                   pow_rat(qr, l * (n - nu) + sigma(l));
        if (l % 2 != 0) term = -term;
        s += term;
    }
    return s;
}

Rat theta_closed(long q, long n, long nu, long j) {
    Rat r = Rat(gaussian(q, n - j, n - nu)) * pow_rat(Rat(q), sigma(j));
    return (j % 2 != 0) ? -r : r;
}

}  // namespace rankmac
