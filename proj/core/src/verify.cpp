#include "rankmac/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "rankmac/codefile.hpp"
#include "rankmac/macwilliams.hpp"
#include "rankmac/moments.hpp"
#include "rankmac/mparam.hpp"
#include "rankmac/mrd.hpp"
#include "rankmac/qfunc.hpp"
#include "rankmac/qpoly.hpp"

namespace rankmac {

namespace {

class Recorder {
public:
    void hold(const std::string& name) { touch(name).held++; }

    void fail(const std::string& name, const std::string& detail) {
        auto& r = touch(name);
        r.failed++;
        if (r.detail.empty()) r.detail = detail;
    }

    void skip(const std::string& name, const std::string& reason) {
        auto& r = touch(name);
        r.skipped++;
        if (r.status != CheckStatus::Failed && r.detail.empty()) r.detail = reason;
    }

    void check(const std::string& name, bool ok, const std::string& detail) {
        if (ok)
            hold(name);
        else
            fail(name, detail);
    }

    void moment(const MomentCheck& mc, const std::string& context) {
        if (mc.skipped())
            skip(mc.identity, mc.reason);
        else if (mc.holds())
            hold(mc.identity);
        else
            fail(mc.identity, context + ": lhs=" + mc.lhs.get_str() + " rhs=" + mc.rhs.get_str());
    }

    VerifySummary finish() {
        VerifySummary s;
        for (const auto& name : order_) {
            CheckResult r = results_.at(name);
            if (r.failed > 0)
                r.status = CheckStatus::Failed;
            else if (r.held == 0 && r.skipped > 0)
                r.status = CheckStatus::Skipped;
            else
                r.status = CheckStatus::Held;
            s.held += r.held;
            s.failed += r.failed;
            s.skipped += r.skipped;
            s.results.push_back(std::move(r));
        }
        return s;
    }

private:
    CheckResult& touch(const std::string& name) {
        auto it = results_.find(name);
        if (it == results_.end()) {
            order_.push_back(name);
            it = results_.emplace(name, CheckResult{name, CheckStatus::Held, 0, 0, 0, ""}).first;
        }
        return it->second;
    }

    std::map<std::string, CheckResult> results_;
    std::vector<std::string> order_;
};

std::mt19937_64 cell_rng(std::uint64_t seed, long q, int m, int n, int k, int idx) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(m),
                      static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k),
                      static_cast<std::uint64_t>(idx)};
    return std::mt19937_64(seq);
}

long rng_range(std::mt19937_64& rng, long lo, long hi) {  // inclusive, portable
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::string code_label(const LinearCode& c, const std::string& kind) {
    std::ostringstream os;
    os << kind << " q=" << c.field().q() << " m=" << c.field().m() << " n=" << c.n()
       << " k=" << c.k();
    return os.str();
}

std::string reproducer(const LinearCode& c) { return code_to_json(c); }

// ---- independent subspace census: closure-based span enumeration ----

std::vector<int> vec_add(const std::vector<int>& a, const std::vector<int>& b, long q) {
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<int>((a[i] + b[i]) % q);
    return r;
}

std::vector<int> vec_scale(const std::vector<int>& a, long s, long q) {
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<int>((a[i] * s) % q);
    return r;
}

using Subspace = std::set<std::vector<int>>;

Subspace close_over(const Subspace& s, const std::vector<int>& v, long q) {
    Subspace out;
    for (const auto& w : s)
        for (long lam = 0; lam < q; ++lam) out.insert(vec_add(w, vec_scale(v, lam, q), q));
    return out;
}

long count_subspaces_enum(long q, int n, int u) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur(static_cast<size_t>(n), 0);
    for (;;) {
        all.push_back(cur);
        int pos = 0;
        while (pos < n && ++cur[static_cast<size_t>(pos)] == q) {
            cur[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    std::set<Subspace> level{Subspace{std::vector<int>(static_cast<size_t>(n), 0)}};
    for (int d = 0; d < u; ++d) {
        std::set<Subspace> next;
        for (const auto& s : level)
            for (const auto& v : all)
                if (!s.count(v)) next.insert(close_over(s, v, q));
        level = std::move(next);
    }
    return static_cast<long>(level.size());
}

// ---- scalar suites ----

void verify_scalars(Recorder& rec, const VerifyOptions& opts) {
    for (long q : opts.qs) {
        const Rat qr(q);
        const Rat p = make_rat(1, q);
        for (long n = 0; n <= 8; ++n)
            for (long k = 0; k <= n; ++k) {
                std::string at = "q=" + std::to_string(q) + " n=" + std::to_string(n) +
                                 " k=" + std::to_string(k);
                rec.check("gaussian_pascal",
                          gaussian(q, n, k) == gaussian(q, n - 1, k) +
                                                   pow_int(q, static_cast<unsigned long>(n - k)) *
                                                       gaussian(q, n - 1, k - 1),
                          at);
                rec.check("gaussian_pascal_reversed",
                          gaussian(q, n, k) == pow_int(q, static_cast<unsigned long>(k)) *
                                                       gaussian(q, n - 1, k) +
                                                   gaussian(q, n - 1, k - 1),
                          at);
                // denominator-free forms of the two quotient identities
                rec.check("gaussian_ratio_n",
                          gaussian(q, n, k) * (pow_int(q, static_cast<unsigned long>(n - k)) - 1) ==
                              (pow_int(q, static_cast<unsigned long>(n)) - 1) * gaussian(q, n - 1, k),
                          at);
                rec.check("gaussian_ratio_k",
                          k < 1 || gaussian(q, n, k) * (pow_int(q, static_cast<unsigned long>(k)) - 1) ==
                                       (pow_int(q, static_cast<unsigned long>(n - k + 1)) - 1) *
                                           gaussian(q, n, k - 1),
                          at);
                rec.check("gaussian_symmetry", gaussian(q, n, k) == gaussian(q, n, n - k), at);
                for (long l = 0; l <= k; ++l)
                    rec.check("gaussian_product_rule",
                              gaussian(q, n, k) * gaussian(q, k, l) ==
                                  gaussian(q, n, l) * gaussian(q, n - l, n - k),
                              at + " l=" + std::to_string(l));
            }
        // beta relations from the notation section
        for (long m = 0; m <= 6; ++m)
            for (long u = 0; u <= 6; ++u) {
                std::string at = "q=" + std::to_string(q) + " m=" + std::to_string(m) +
                                 " u=" + std::to_string(u);
                rec.check("beta_gaussian_relation",
                          beta(q, m, u) == gaussian(q, m, u) * beta(q, u, u), at);
                rec.check("beta_merge_relation",
                          beta(q, m + u, m + u) ==
                              gaussian(q, m + u, u) * beta(q, m, m) * beta(q, u, u),
                          at);
            }
        // subspace counts against closure enumeration
        for (int n = 0; n <= 4; ++n)
            for (int u = 0; u <= n; ++u) {
                if (q > 3 && n > 3) continue;  // keep the enumeration small
                rec.check("gaussian_subspace_census",
                          gaussian(q, n, u) == Int(count_subspaces_enum(q, n, u)),
                          "q=" + std::to_string(q) + " n=" + std::to_string(n) +
                              " u=" + std::to_string(u));
            }
        // q-Stirling sum rule and p-variant conversions
        for (long nu = 0; nu <= 5; ++nu)
            for (long m = 0; m <= 5; ++m) {
                Rat rhs(0);
                for (long l = 0; l <= nu; ++l)
                    rhs += pow_rat(qr, sigma(l)) * q_stirling2(q, nu, l) * Rat(beta(q, m, l));
                rec.check("stirling_sum_rule", pow_rat(Rat(gaussian(q, m, 1)), nu) == rhs,
                          "q=" + std::to_string(q) + " nu=" + std::to_string(nu) +
                              " m=" + std::to_string(m));
            }
        for (long m = 0; m <= 5; ++m)
            for (long u = 0; u <= 5; ++u) {
                std::string at = "q=" + std::to_string(q) + " m=" + std::to_string(m) +
                                 " u=" + std::to_string(u);
                Rat conv = pow_rat(p, -m * u - sigma(u)) * alpha_p(q, m, u);
                rec.check("p_conv_alpha", Rat(alpha(q, m, u)) == (u % 2 ? -conv : conv), at);
                rec.check("p_conv_beta",
                          Rat(beta(q, m, u)) ==
                              pow_rat(p, -u * (m - u) - sigma(u)) * beta_p(q, m, u),
                          at);
                for (long n = 0; n <= 5; ++n)
                    rec.check("p_conv_gaussian",
                              Rat(gaussian(q, n, u)) == pow_rat(p, -u * (n - u)) * gaussian_p(q, n, u),
                              at + " n=" + std::to_string(n));
            }
        // orthogonality sum used by the closed-form moment proofs
        for (long nu = 0; nu <= 6; ++nu)
            for (long l = 0; l <= nu; ++l) {
                Rat s(0);
                for (long j = 0; j <= nu - l; ++j) {
                    Rat term = Rat(gaussian(q, nu - l, j)) * pow_rat(qr, sigma(j));
                    if (j % 2 != 0) term = -term;
                    s += term;
                }
                rec.check("gaussian_orthogonality", s == Rat(nu == l ? 1 : 0),
                          "q=" + std::to_string(q) + " nu=" + std::to_string(nu) +
                              " l=" + std::to_string(l));
            }
        // delta and theta lemmas
        for (long m = 0; m <= 6; ++m)
            for (long nu = 0; nu <= 6; ++nu)
                for (long j = 0; j <= nu; ++j)
                    rec.check("delta_lemma", delta_sum(q, m, nu, j) == delta_closed(q, m, nu, j),
                              "q=" + std::to_string(q) + " m=" + std::to_string(m) +
                                  " nu=" + std::to_string(nu) + " j=" + std::to_string(j));
        for (long n = 0; n <= 6; ++n)
            for (long nu = 0; nu <= 6; ++nu)
                for (long j = 0; j <= nu; ++j)
                    rec.check("theta_lemma", theta_sum(q, n, nu, j) == theta_closed(q, n, nu, j),
                              "q=" + std::to_string(q) + " n=" + std::to_string(n) +
                                  " nu=" + std::to_string(nu) + " j=" + std::to_string(j));
        // the two code-transparent Pless closed forms agree
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n)
                for (int nu = 0; nu <= 3; ++nu) {
                    Rat form1(0);
                    for (int l = 0; l <= nu; ++l)
                        form1 += Rat(beta(q, n, l)) * q_stirling2(q, nu, l) *
                                 pow_rat(qr, -static_cast<long>(m) * l + sigma(l));
                    Rat form2(0);
                    for (int i = 0; i <= n; ++i)
                        form2 += pow_rat(Rat(gaussian(q, n - i, 1)), nu) *
                                 Rat(gaussian(q, n, i) * alpha(q, m, i));
                    form2 *= pow_rat(qr, -static_cast<long>(m) * n);
                    rec.check("pless_x_forms_agree", form1 == form2,
                              "q=" + std::to_string(q) + " m=" + std::to_string(m) +
                                  " n=" + std::to_string(n) + " nu=" + std::to_string(nu));
                }
        // Prop 7 symmetry S(nu,n,m) = q^{nu(n-m)} S(nu,m,n)
        for (long nu = 0; nu <= 4; ++nu)
            for (long m = 0; m <= 4; ++m)
                for (long n = 0; n <= 4; ++n) {
                    auto S = [&](long a, long b, long c) {
                        Rat s(0);
                        for (long j = 0; j <= a; ++j)
                            s += Rat(gaussian(q, a, j) * alpha(q, b, j)) * pow_rat(qr, -c * j);
                        return s;
                    };
                    rec.check("t_moment_symmetry",
                              S(nu, n, m) == pow_rat(qr, nu * (n - m)) * S(nu, m, n),
                              "q=" + std::to_string(q) + " nu=" + std::to_string(nu) +
                                  " m=" + std::to_string(m) + " n=" + std::to_string(n));
                }
    }
}

// ---- q-calculus suite ----

MParamPoly random_mparam(long q, std::mt19937_64& rng) {
    MParamPoly p(q);
    const long terms = rng_range(rng, 0, 3);
    for (long t = 0; t < terms; ++t) {
        const long e = rng_range(rng, -2, 2);
        const long num = rng_range(rng, -9, 9);
        const long den = rng_range(rng, 1, 3);
        p += MParamPoly::monomial(q, e, make_rat(num, den));
    }
    return p;
}

HomogPoly random_homog(long q, int degree, std::mt19937_64& rng) {
    HomogPoly p(q, degree);
    for (int u = 0; u <= degree; ++u) p.set_coeff(u, random_mparam(q, rng));
    return p;
}

void verify_qcalculus(Recorder& rec, const VerifyOptions& opts) {
    for (long q : opts.qs) {
        const std::string qs = "q=" + std::to_string(q);
        // closed forms of the special polynomials and their powers
        for (int l = 0; l <= 6; ++l) {
            rec.check("qpower_full_space",
                      q_power(full_space_enum(q, 1), l) == full_space_enum(q, l),
                      qs + " l=" + std::to_string(l));
            rec.check("qpower_alternating",
                      q_power(alternating_enum(q, 1), l) == alternating_enum(q, l),
                      qs + " l=" + std::to_string(l));
            HomogPoly yl = q_power(HomogPoly::y(q), l);
            HomogPoly expect_y(q, l);
            expect_y.set_coeff(l, MParamPoly::constant(
                                      q, Rat(pow_int(q, static_cast<unsigned long>(sigma(l))))));
            rec.check("qpower_y", yl == expect_y, qs + " l=" + std::to_string(l));
            HomogPoly xl = q_power(HomogPoly::x(q), l);
            HomogPoly expect_x(q, l);
            expect_x.set_coeff(0, MParamPoly::constant(q, Rat(1)));
            rec.check("qpower_x", xl == expect_x, qs + " l=" + std::to_string(l));
        }
        // derivative closed forms
        for (int l = 0; l <= 5; ++l)
            for (int nu = 0; nu <= l; ++nu) {
                const std::string at = qs + " l=" + std::to_string(l) + " nu=" + std::to_string(nu);
                rec.check("qderiv_full_space",
                          q_derivative(full_space_enum(q, l), nu) ==
                              full_space_enum(q, l - nu).scaled(Rat(beta(q, l, nu))),
                          at);
                rec.check("qderiv_alternating",
                          q_derivative(alternating_enum(q, l), nu) ==
                              alternating_enum(q, l - nu).scaled(Rat(beta(q, l, nu))),
                          at);
                Rat bsign = Rat(beta(q, l, nu));
                if (nu % 2 != 0) bsign = -bsign;
                rec.check("qinvderiv_alternating",
                          q_inv_derivative(alternating_enum(q, l), nu) ==
                              alternating_enum(q, l - nu).scaled(bsign),
                          at);
                MParamPoly factor = MParamPoly::alpha_poly(q, nu);
                factor *= Rat(beta(q, l, nu)) * pow_rat(Rat(q), -sigma(nu));
                rec.check("qinvderiv_full_space",
                          q_inv_derivative(full_space_enum(q, l), nu) ==
                              full_space_enum(q, l - nu).shifted_m(nu).scaled(factor),
                          at);
            }
        // non-commutativity witness and constant/distributive cases
        rec.check("q_product_noncommutative",
                  !(q_product(HomogPoly::x(q), HomogPoly::y(q)) ==
                    q_product(HomogPoly::y(q), HomogPoly::x(q))),
                  qs);
        std::mt19937_64 rng = cell_rng(opts.seed, q, 0, 0, 0, 7001);
        for (int t = 0; t < opts.poly_trials; ++t) {
            const int r = static_cast<int>(rng_range(rng, 0, 5));
            const int s = static_cast<int>(rng_range(rng, 0, 5));
            const int nu = static_cast<int>(rng_range(rng, 0, 4));
            HomogPoly f = random_homog(q, r, rng);
            HomogPoly g = random_homog(q, s, rng);
            const std::string at = qs + " r=" + std::to_string(r) + " s=" + std::to_string(s) +
                                   " nu=" + std::to_string(nu) + " trial=" + std::to_string(t);

            // constant commutation and two-sided distributivity (Lemma 1 cases)
            HomogPoly c5 = HomogPoly::one(q).scaled(Rat(5));
            rec.check("q_product_constant",
                      q_product(c5, f) == f.scaled(Rat(5)) && q_product(f, c5) == f.scaled(Rat(5)),
                      at);
            HomogPoly f2 = random_homog(q, r, rng);
            rec.check("q_product_distributive",
                      q_product(f + f2, g) == q_product(f, g) + q_product(f2, g) &&
                          q_product(g, f + f2) == q_product(g, f) + q_product(g, f2),
                      at);

            // Leibniz rule for the q-derivative
            {
                HomogPoly lhs = q_derivative(q_product(f, g), nu);
                HomogPoly rhs(q, std::max(r + s - nu, 0));
                for (int l = 0; l <= nu; ++l) {
                    HomogPoly t2 = q_product(q_derivative(f, l), q_derivative(g, nu - l));
                    if (t2.degree() != rhs.degree()) continue;  // clamped zero term
                    rhs += t2.scaled(Rat(gaussian(q, nu, l)) *
                                     pow_rat(Rat(q), static_cast<long>(nu - l) * (r - l)));
                }
                rec.check("leibniz_q_derivative", lhs == rhs, at);
            }
            // Leibniz rule for the q^{-1}-derivative (m - l shift on the second factor)
            {
                HomogPoly lhs = q_inv_derivative(q_product(f, g), nu);
                HomogPoly rhs(q, std::max(r + s - nu, 0));
                for (int l = 0; l <= nu; ++l) {
                    HomogPoly t2 =
                        q_product(q_inv_derivative(f, l), q_inv_derivative(g, nu - l).shifted_m(l));
                    if (t2.degree() != rhs.degree()) continue;
                    rhs += t2.scaled(Rat(gaussian(q, nu, l)) *
                                     pow_rat(Rat(q), static_cast<long>(l) * (s - nu + l)));
                }
                rec.check("leibniz_qinv_derivative", lhs == rhs, at);
            }
            // division rearrangement lemmas
            if (r >= 1 && s >= 1) {
                HomogPoly u = f, v = g;
                u.set_coeff(r, MParamPoly(q));  // u_r = 0
                rec.check("div_x_first_factor",
                          q_product(u, g).div_x() == q_product(u.div_x(), g), at);
                v.set_coeff(s, MParamPoly(q));  // v_s = 0
                rec.check("div_x_second_factor",
                          q_product(f, v).div_x() == q_product(f.subst_y_qy(), v.div_x()), at);
                HomogPoly u0 = f, v0 = g;
                u0.set_coeff(0, MParamPoly(q));  // u_0 = 0
                rec.check("div_y_first_factor",
                          q_product(u0, g).div_y() ==
                              q_product(u0.div_y(), g.shifted_m(1))
                                  .scaled(Rat(pow_int(q, static_cast<unsigned long>(s)))),
                          at);
                v0.set_coeff(0, MParamPoly(q));  // v_0 = 0
                rec.check("div_y_second_factor",
                          q_product(f, v0).div_y() == q_product(f.subst_y_qy(), v0.div_y()), at);
            }
            // (b * a_s)(1,1;m) = q^{ms} b(1,1;m)
            for (long m = 1; m <= 3; ++m) {
                const int s2 = static_cast<int>(rng_range(rng, 0, 3));
                rec.check("qproduct_full_space_eval",
                          q_product(f, full_space_enum(q, s2)).eval(m, Rat(1), Rat(1)) ==
                              pow_rat(Rat(q), m * s2) * f.eval(m, Rat(1), Rat(1)),
                          at + " m=" + std::to_string(m) + " s2=" + std::to_string(s2));
            }
            // q-transform is diagonal on monomials: checked against its definition
            // via the closed form q^{i(r-i)+sigma_i}
            {
                HomogPoly tr = q_transform(f);
                HomogPoly expect(q, r);
                for (int i = 0; i <= r; ++i) {
                    MParamPoly c = f.coeff(i);
                    c *= Rat(pow_int(q, static_cast<unsigned long>(i) * static_cast<unsigned long>(r - i) +
                                            static_cast<unsigned long>(sigma(i))));
                    expect.set_coeff(i, std::move(c));
                }
                rec.check("q_transform_diagonal", tr == expect, at);
            }
        }
    }
}

// ---- Krawtchouk suite ----

void verify_krawtchouk(Recorder& rec, const VerifyOptions& opts) {
    for (long q : opts.qs) {
        const std::string qs = "q=" + std::to_string(q);
        for (int m = 0; m <= 6; ++m)
            for (int n = 0; n <= 6; ++n)
                for (int i = 0; i <= 5; ++i)
                    for (int j = 0; j <= 5; ++j) {
                        const std::string at = qs + " m=" + std::to_string(m) +
                                               " n=" + std::to_string(n) + " i=" + std::to_string(i) +
                                               " j=" + std::to_string(j);
                        Rat lhs = krawtchouk_rat(q, j + 1, i + 1, m + 1, n + 1);
                        Rat rhs = pow_rat(Rat(q), j + 1) * krawtchouk_rat(q, j + 1, i, m, n) -
                                  pow_rat(Rat(q), j) * krawtchouk_rat(q, j, i, m, n);
                        rec.check("krawtchouk_recurrence", lhs == rhs, at);
                        if (i == 0)
                            rec.check("krawtchouk_initial",
                                      krawtchouk_rat(q, j, 0, m, n) ==
                                          Rat(gaussian(q, n, j) * alpha(q, m, j)),
                                      at);
                    }
        for (int n = 0; n <= 4; ++n)
            for (int i = 0; i <= n; ++i) {
                HomogPoly kernel = krawtchouk_kernel(q, i, n);
                for (int m = 1; m <= 4; ++m) {
                    auto coeffs = kernel.coeffs_at(m);
                    for (int j = 0; j <= n; ++j)
                        rec.check("krawtchouk_kernel_coeffs",
                                  coeffs[static_cast<size_t>(j)] == krawtchouk_rat(q, j, i, m, n),
                                  qs + " n=" + std::to_string(n) + " i=" + std::to_string(i) +
                                      " m=" + std::to_string(m) + " j=" + std::to_string(j));
                }
            }
    }
}

// ---- code corpus and the MacWilliams/moments sweep ----

bool fits_cap(long q, int m, int k, std::uint64_t cap) {
    return pow_int(q, static_cast<unsigned long>(m) * static_cast<unsigned long>(k)) <=
           Int(static_cast<unsigned long>(cap));
}

}  // namespace

std::vector<CorpusEntry> build_corpus(const VerifyOptions& opts) {
    std::vector<CorpusEntry> corpus;
    for (long q : opts.qs) {
        for (int m = 1; m <= opts.max_m; ++m) {
            Field f = Field::with_default_modulus(q, m);
            for (int n = 1; n <= opts.max_n; ++n) {
                corpus.push_back({LinearCode::zero(f, n), "zero"});
                corpus.push_back({LinearCode::whole_space(f, n), "whole"});
                corpus.push_back({LinearCode::repetition(f, n), "repetition"});
                if (n <= m) {
                    CodeVector pts(static_cast<size_t>(n));
                    for (int j = 0; j < n; ++j)
                        pts[static_cast<size_t>(j)] =
                            static_cast<Field::Elem>(pow_int(q, static_cast<unsigned long>(j)).get_ui());
                    for (int k = 1; k <= n; ++k)
                        corpus.push_back({gabidulin_code(f, n, k, pts), "gabidulin"});
                }
                for (int k = 1; k <= n; ++k) {
                    for (int idx = 0; idx < opts.random_per_cell; ++idx) {
                        auto rng = cell_rng(opts.seed, q, m, n, k, idx);
                        for (int attempt = 0; attempt < 64; ++attempt) {
                            std::vector<CodeVector> gen(static_cast<size_t>(k),
                                                        CodeVector(static_cast<size_t>(n)));
                            for (auto& row : gen)
                                for (auto& x : row)
                                    x = static_cast<Field::Elem>(
                                        rng() % static_cast<std::uint64_t>(f.size()));
                            try {
                                corpus.push_back({LinearCode(f, n, std::move(gen)), "random"});
                                break;
                            } catch (const std::invalid_argument&) {
                                continue;  // dependent rows; redraw
                            }
                        }
                    }
                }
            }
        }
    }
    return corpus;
}

namespace {

void sweep_code(Recorder& rec, const VerifyOptions& opts, const CorpusEntry& entry) {
    const LinearCode& c = entry.code;
    const Field& f = c.field();
    const long q = f.q();
    const int m = f.m(), n = c.n(), k = c.k();
    const std::string at = code_label(c, entry.label);

    RankDistribution A, B;
    LinearCode dual = dual_code(c);
    try {
        A = brute_distribution(c, opts.cap);
        B = brute_distribution(dual, opts.cap);
    } catch (const CapExceeded& e) {
        rec.skip("macwilliams_oracle", at + ": " + e.what());
        return;
    }

    rec.check("distribution_sum", [&] {
        Int total = 0;
        for (const auto& a : A) total += a;
        return total == c.cardinality();
    }(), at + " " + reproducer(c));

    if (entry.label == "whole") {
        bool ok = true;
        for (int u = 0; u <= n; ++u)
            ok = ok && A[static_cast<size_t>(u)] == gaussian(q, n, u) * alpha(q, m, u);
        rec.check("full_space_census", ok, at);
    }

    // dual orthogonality and dimension
    {
        bool ok = dual.k() == n - k;
        for (const auto& r1 : c.generator())
            for (const auto& r2 : dual.generator()) ok = ok && inner_product(f, r1, r2) == 0;
        rec.check("dual_orthogonality", ok, at);
    }

    // the MacWilliams identity, three ways, plus the involution
    RankDistribution Bf, Bk;
    try {
        Bf = macwilliams_functional(q, m, k, A);
        Bk = macwilliams_krawtchouk(q, m, k, A);
    } catch (const NonIntegralDistribution& e) {
        rec.fail("macwilliams_oracle", at + ": " + e.what() + " " + reproducer(c));
        return;
    }
    rec.check("macwilliams_oracle", Bf == B, at + " " + reproducer(c));
    rec.check("macwilliams_method_equivalence", Bk == Bf, at + " " + reproducer(c));
    rec.check("macwilliams_involution", macwilliams_functional(q, m, n - k, B) == A,
              at + " " + reproducer(c));

    // moment identities for every applicable nu, with hypotheses decided from
    // the brute-force dual distribution
    const int d_dual = dual_min_distance(B);
    const int diam_dual = dual_diameter(B);
    for (int nu = 0; nu <= n; ++nu) {
        const std::string ctx = at + " nu=" + std::to_string(nu);
        rec.moment(binomial_moment_x(q, m, k, A, B, nu), ctx);
        rec.moment(binomial_moment_x_simplified(q, m, k, A, nu, d_dual), ctx);
        rec.moment(binomial_moment_y(q, m, k, A, B, nu), ctx);
        rec.moment(binomial_moment_y_min_dist(q, m, k, A, nu, d_dual), ctx);
        rec.moment(binomial_moment_y_diameter(q, m, A, nu, diam_dual), ctx);
        rec.moment(pless_x(q, m, k, A, B, nu), ctx);
        rec.moment(pless_x_simplified(q, m, k, A, nu, d_dual), ctx);
        rec.moment(pless_y(q, m, k, A, B, nu), ctx);
        rec.moment(pless_y_simplified(q, m, k, A, nu, d_dual), ctx);
        rec.moment(t_closed_forms(q, m, k, A, nu, d_dual), ctx);
        for (int lam = 0; lam <= 2; ++lam) {
            rec.moment(t_reduction_lambda(q, m, k, A, lam, nu), ctx + " lam=" + std::to_string(lam));
            rec.moment(t_transparent_lambda(q, m, k, A, lam, nu, d_dual),
                       ctx + " lam=" + std::to_string(lam));
        }
        for (int mu = 0; mu <= 2; ++mu) {
            rec.moment(t_reduction_mu(q, m, k, A, mu, nu), ctx + " mu=" + std::to_string(mu));
            rec.moment(t_transparent_mu(q, m, k, A, mu, nu, d_dual), ctx + " mu=" + std::to_string(mu));
        }
    }

    // cartesian products against the q-product prediction
    for (int s = 1; s <= 2 && n + s <= opts.max_n + 1; ++s) {
        if (!fits_cap(q, m, k + s, opts.cap)) break;
        LinearCode cs = cartesian_product(c, s);
        RankDistribution got = brute_distribution(cs, opts.cap);
        HomogPoly predicted = q_product(HomogPoly::from_counts(q, A), full_space_enum(q, s));
        auto coeffs = predicted.coeffs_at(m);
        bool ok = true;
        for (int u = 0; u <= n + s; ++u)
            ok = ok && Rat(got[static_cast<size_t>(u)]) == coeffs[static_cast<size_t>(u)];
        rec.check("cartesian_product_enum", ok, at + " s=" + std::to_string(s));
    }
}

void verify_rank_properties(Recorder& rec, const VerifyOptions& opts) {
    for (long q : opts.qs)
        for (int m = 1; m <= opts.max_m; ++m) {
            Field f = Field::with_default_modulus(q, m);
            auto rng = cell_rng(opts.seed, q, m, 0, 0, 4242);
            for (int n = 1; n <= opts.max_n; ++n)
                for (int t = 0; t < 8; ++t) {
                    CodeVector v(static_cast<size_t>(n));
                    for (auto& x : v)
                        x = static_cast<Field::Elem>(rng() % static_cast<std::uint64_t>(f.size()));
                    const int r = rank_weight(f, v);
                    bool ok = r <= std::min(m, n);
                    for (Field::Elem lam = 1; lam < f.size(); ++lam) {
                        CodeVector w(v.size());
                        for (size_t i = 0; i < v.size(); ++i) w[i] = f.mul(lam, v[i]);
                        ok = ok && rank_weight(f, w) == r;
                    }
                    rec.check("rank_scalar_invariance", ok,
                              "q=" + std::to_string(q) + " m=" + std::to_string(m) +
                                  " n=" + std::to_string(n));
                }
        }
}

void verify_dual_vectors(Recorder& rec, const VerifyOptions& opts) {
    if (std::find(opts.qs.begin(), opts.qs.end(), 2L) == opts.qs.end()) return;
    const long q = 2;
    for (int m = 1; m <= std::min(opts.max_m, 3); ++m) {
        Field f = Field::with_default_modulus(q, m);
        for (int n = 1; n <= std::min(opts.max_n, 3); ++n) {
            if (!fits_cap(q, m, n - 1 > 0 ? n - 1 : 0, opts.cap)) continue;
            // Prop 1 equals Prop 2 at full rank, and coefficient law [r p] A_{p,p}
            for (int r = 0; r <= std::min(m, n); ++r) {
                if (r <= m) {
                    HomogPoly lhs = mrd_dual_vector_enum(q, r, m);
                    HomogPoly rhs = dual_vector_enum(q, r, r, m);
                    rec.check("prop1_matches_prop2_full_rank", lhs == rhs,
                              "m=" + std::to_string(m) + " r=" + std::to_string(r));
                    auto coeffs = lhs.coeffs_at(m);
                    bool ok = true;
                    for (int p = 0; p <= r; ++p) {
                        Rat app = (Rat(alpha(q, m, p)) +
                                   Rat(pow_int(q, static_cast<unsigned long>(m)) - 1) *
                                       (p % 2 ? -Rat(pow_int(q, static_cast<unsigned long>(sigma(p))))
                                              : Rat(pow_int(q, static_cast<unsigned long>(sigma(p)))))) /
                                  Rat(pow_int(q, static_cast<unsigned long>(m)));
                        ok = ok && coeffs[static_cast<size_t>(p)] == Rat(gaussian(q, r, p)) * app;
                    }
                    rec.check("prop1_coefficients", ok, "m=" + std::to_string(m) + " r=" + std::to_string(r));
                }
            }
            // full enumeration of v: brute dual enumerator depends on the rank only
            CodeVector v(static_cast<size_t>(n), 0);
            for (;;) {
                const int r = rank_weight(f, v);
                bool all_zero = true;
                for (auto x : v) all_zero = all_zero && x == 0;
                LinearCode span = all_zero ? LinearCode::zero(f, n) : LinearCode(f, n, {v});
                RankDistribution got;
                try {
                    got = brute_distribution(dual_code(span), opts.cap);
                } catch (const CapExceeded& e) {
                    rec.skip("prop2_dual_vector_enum", e.what());
                    break;
                }
                auto expect = dual_vector_enum(q, n, r, m).coeffs_at(m);
                bool ok = true;
                for (int u = 0; u <= n; ++u)
                    ok = ok && Rat(got[static_cast<size_t>(u)]) == expect[static_cast<size_t>(u)];
                rec.check("prop2_dual_vector_enum", ok,
                          "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                              " r=" + std::to_string(r));
                int pos = 0;
                while (pos < n && ++v[static_cast<size_t>(pos)] == f.size()) {
                    v[static_cast<size_t>(pos)] = 0;
                    ++pos;
                }
                if (pos == n) break;
            }
        }
    }
}

void verify_hadamard(Recorder& rec, const VerifyOptions& opts) {
    if (std::find(opts.qs.begin(), opts.qs.end(), 2L) == opts.qs.end()) return;
    const long q = 2;
    struct Cell {
        int m, n;
    };
    for (Cell cell : {Cell{2, 2}, Cell{3, 2}, Cell{2, 3}}) {
        if (cell.m > opts.max_m || cell.n > opts.max_n) continue;
        Field f = Field::with_default_modulus(q, cell.m);
        CodeVector v(static_cast<size_t>(cell.n), 0);
        for (;;) {
            const int r = rank_weight(f, v);
            HomogPoly got(q, cell.n);
            try {
                got = hadamard_rank_enum(f, v, opts.cap);
            } catch (const CapExceeded& e) {
                rec.skip("hadamard_transform", e.what());
                break;
            }
            auto expect = krawtchouk_kernel(q, r, cell.n).coeffs_at(cell.m);
            auto coeffs = got.coeffs_at(cell.m);
            bool ok = true;
            for (int j = 0; j <= cell.n; ++j)
                ok = ok && coeffs[static_cast<size_t>(j)] == expect[static_cast<size_t>(j)];
            rec.check("hadamard_transform", ok,
                      "m=" + std::to_string(cell.m) + " n=" + std::to_string(cell.n) +
                          " r=" + std::to_string(r));
            int pos = 0;
            while (pos < cell.n && ++v[static_cast<size_t>(pos)] == f.size()) {
                v[static_cast<size_t>(pos)] = 0;
                ++pos;
            }
            if (pos == cell.n) break;
        }
    }
}

void verify_mrd(Recorder& rec, const VerifyOptions& opts) {
    for (long q : opts.qs) {
        const int top_m = std::max(opts.max_m, 4);
        for (int m = 1; m <= top_m; ++m)
            for (int n = 1; n <= m; ++n)
                for (int k = 1; k <= n; ++k) {
                    const std::string at = "q=" + std::to_string(q) + " m=" + std::to_string(m) +
                                           " n=" + std::to_string(n) + " k=" + std::to_string(k);
                    RankDistribution A = mrd_distribution(q, m, n, k);
                    Int total = 0;
                    bool nonneg = true;
                    for (const auto& a : A) {
                        total += a;
                        nonneg = nonneg && a >= 0;
                    }
                    rec.check("mrd_distribution_consistency",
                              nonneg && total == pow_int(q, static_cast<unsigned long>(m) *
                                                                static_cast<unsigned long>(k)),
                              at);
                    // dual of an MRD code is MRD: transform has B_i = 0 for 0 < i <= k
                    RankDistribution B = macwilliams_functional(q, m, k, A);
                    bool zeros = true;
                    for (int i = 1; i <= k && i <= n; ++i) zeros = zeros && B[static_cast<size_t>(i)] == 0;
                    rec.check("mrd_dual_is_mrd", zeros, at);
                    rec.check("mrd_dual_matches_prop8",
                              k == n || B == mrd_distribution(q, m, n, n - k), at);
                }
        // Prop 8 against brute Gabidulin censuses (q = 2 grid)
        if (q == 2) {
            for (int m = 1; m <= top_m; ++m) {
                Field f = Field::with_default_modulus(q, m);
                for (int n = 1; n <= m; ++n) {
                    CodeVector pts(static_cast<size_t>(n));
                    for (int j = 0; j < n; ++j) pts[static_cast<size_t>(j)] = static_cast<Field::Elem>(1u << j);
                    for (int k = 1; k <= n; ++k) {
                        if (!fits_cap(q, m, k, opts.cap)) {
                            rec.skip("mrd_prop8_vs_brute", "cap at m=" + std::to_string(m) +
                                                               " k=" + std::to_string(k));
                            continue;
                        }
                        LinearCode g = gabidulin_code(f, n, k, pts);
                        rec.check("mrd_prop8_vs_brute",
                                  brute_distribution(g, opts.cap) == mrd_distribution(q, m, n, k),
                                  "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                      " k=" + std::to_string(k) + " " + reproducer(g));
                        rec.check("gabidulin_attains_singleton",
                                  min_rank_distance(g, opts.cap) == std::optional<int>(n - k + 1) &&
                                      is_mrd(g, opts.cap),
                                  "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                      " k=" + std::to_string(k));
                    }
                }
            }
            // Class-II by transposition: census of the swapped Class-I code
            for (int m = 1; m <= 2; ++m)
                for (int n = m; n <= 3; ++n) {
                    if (n > 4) continue;
                    Field big = Field::with_default_modulus(q, n);  // GF(q^n)
                    CodeVector pts(static_cast<size_t>(m));
                    for (int j = 0; j < m; ++j) pts[static_cast<size_t>(j)] = static_cast<Field::Elem>(1u << j);
                    for (int k_eff = 1; k_eff <= m; ++k_eff) {
                        LinearCode g = gabidulin_code(big, m, k_eff, pts);
                        RankDistribution census = brute_distribution(g, opts.cap);
                        RankDistribution cls2 = class2_distribution(q, m, n, k_eff);
                        bool ok = true;
                        for (int i = 0; i <= n; ++i) {
                            Int expect = i < static_cast<int>(census.size()) ? census[static_cast<size_t>(i)] : Int(0);
                            ok = ok && cls2[static_cast<size_t>(i)] == expect;
                        }
                        rec.check("class2_transpose_census", ok,
                                  "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                      " k_eff=" + std::to_string(k_eff));
                    }
                }
        }
        // Class-II boundary: n = m coincides with Class-I
        for (int m = 1; m <= 4; ++m)
            for (int k = 1; k <= m; ++k)
                rec.check("class2_boundary",
                          class2_distribution(q, m, m, k) == mrd_distribution(q, m, m, k),
                          "q=" + std::to_string(q) + " m=" + std::to_string(m) +
                              " k=" + std::to_string(k));
        // binomial inversion round trip
        auto rng = cell_rng(opts.seed, q, 0, 0, 0, 9009);
        for (int l = 0; l <= 6; ++l)
            for (int t = 0; t < 5; ++t) {
                std::vector<Rat> b(static_cast<size_t>(l) + 1);
                for (auto& x : b) x = make_rat(rng_range(rng, -9, 9), rng_range(rng, 1, 3));
                bool ok = gauss_binom_inverse(q, gauss_binom_transform(q, b)) == b &&
                          gauss_binom_transform(q, gauss_binom_inverse(q, b)) == b;
                rec.check("gauss_inversion_roundtrip", ok,
                          "q=" + std::to_string(q) + " l=" + std::to_string(l));
            }
    }
}

}  // namespace

VerifySummary run_verify(const VerifyOptions& opts) {
    Recorder rec;
    verify_scalars(rec, opts);
    verify_qcalculus(rec, opts);
    verify_krawtchouk(rec, opts);
    for (const auto& entry : build_corpus(opts)) sweep_code(rec, opts, entry);
    verify_rank_properties(rec, opts);
    verify_dual_vectors(rec, opts);
    verify_hadamard(rec, opts);
    verify_mrd(rec, opts);
    return rec.finish();
}

}  // namespace rankmac
