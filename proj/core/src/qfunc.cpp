#include "rankmac/qfunc.hpp"

#include <stdexcept>

namespace rankmac {

long sigma(long i) {
    if (i < 0) throw std::domain_error("sigma: negative argument");
    return i * (i - 1) / 2;
}

Int alpha(long q, long m, long u) {
    if (m < 0 || u < 0) throw std::domain_error("alpha: negative argument");
    Int r = 1;
    Int qm = pow_int(q, static_cast<unsigned long>(m));
    for (long i = 0; i < u; ++i) {
        r *= qm - pow_int(q, static_cast<unsigned long>(i));
        if (r == 0) break;
    }
    return r;
}

Int gaussian(long q, long n, long u) {
    if (u < 0 || u > n) return 0;
    // product formula with exact division at every step:
    // [n u] = prod_{i=1}^{u} (q^{n-u+i} - 1)/(q^i - 1)
    Int num = 1, den = 1;
    for (long i = 1; i <= u; ++i) {
        num *= pow_int(q, static_cast<unsigned long>(n - u + i)) - 1;
        den *= pow_int(q, static_cast<unsigned long>(i)) - 1;
    }
    Int r;
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

Int beta(long q, long m, long u) {
    if (m < 0 || u < 0) throw std::domain_error("beta: negative argument");
    Int r = 1;
    for (long i = 0; i < u; ++i) r *= gaussian(q, m - i, 1);
    return r;
}

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rat alpha_b(const Rat& b, long m, long u) {
    if (u < 0) throw std::domain_error("alpha_b: negative u");
    Rat r(1);
    Rat bm = pow_rat(b, m);
    for (long i = 0; i < u; ++i) {
        r *= bm - pow_rat(b, i);
        if (r == 0) break;
    }
    return r;
}

Rat gaussian_b(const Rat& b, long n, long u) {
    if (u < 0 || u > n) return Rat(0);
    Rat num(1), den(1);
    for (long i = 0; i < u; ++i) {
        num *= pow_rat(b, n) - pow_rat(b, i);
        den *= pow_rat(b, u) - pow_rat(b, i);
    }
    return num / den;
}

Rat beta_b(const Rat& b, long m, long u) {
    Rat r(1);
    for (long i = 0; i < u; ++i) r *= gaussian_b(b, m - i, 1);
    return r;
}

Rat stirling2_b(const Rat& b, long nu, long l) {
    if (nu < 0 || l < 0) throw std::domain_error("stirling2_b: negative argument");
    Rat s(0);
    for (long i = 0; i <= l; ++i) {
        Rat term = gaussian_b(b, l, i) * pow_rat(gaussian_b(b, l - i, 1), nu) * pow_rat(b, sigma(i));
        if (i % 2 == 0)
            s += term;
        else
            s -= term;
    }
    return pow_rat(b, -sigma(l)) / beta_b(b, l, l) * s;
}

Rat alpha_p(long q, long m, long u) { return alpha_b(make_rat(1, q), m, u); }
Rat gaussian_p(long q, long n, long u) { return gaussian_b(make_rat(1, q), n, u); }
Rat beta_p(long q, long m, long u) { return beta_b(make_rat(1, q), m, u); }

Rat q_stirling2(long q, long nu, long l) { return stirling2_b(Rat(q), nu, l); }
Rat p_stirling2(long q, long nu, long l) { return stirling2_b(make_rat(1, q), nu, l); }

}  // namespace rankmac
