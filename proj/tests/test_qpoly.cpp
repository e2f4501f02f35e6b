#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rankmac/qfunc.hpp"
#include "rankmac/qpoly.hpp"

using namespace rankmac;

namespace {

MParamPoly mono(long q, long e, long num, long den = 1) {
    return MParamPoly::monomial(q, e, make_rat(num, den));
}

HomogPoly from_rats(long q, const std::vector<Rat>& cs) {
    HomogPoly p(q, static_cast<int>(cs.size()) - 1);
    for (size_t u = 0; u < cs.size(); ++u) p.set_coeff(static_cast<int>(u), MParamPoly::constant(q, cs[u]));
    return p;
}

MParamPoly random_mparam(long q, std::mt19937_64& rng) {
    MParamPoly p(q);
    const long terms = static_cast<long>(rng() % 4);
    for (long t = 0; t < terms; ++t)
        p += MParamPoly::monomial(q, static_cast<long>(rng() % 5) - 2,
                                  make_rat(static_cast<long>(rng() % 19) - 9,
                                           static_cast<long>(rng() % 3) + 1));
    return p;
}

HomogPoly random_homog(long q, int degree, std::mt19937_64& rng) {
    HomogPoly p(q, degree);
    for (int u = 0; u <= degree; ++u) p.set_coeff(u, random_mparam(q, rng));
    return p;
}

}  // namespace

TEST_CASE("MParamPoly arithmetic, substitution and evaluation") {
    const long q = 2;
    MParamPoly a = mono(q, 1, 1) + mono(q, 0, -1);  // Q - 1
    CHECK(a.eval(2) == Rat(3));
    CHECK(a.eval(3) == Rat(7));
    // m -> m-1 sends Q - 1 to Q/q - 1
    MParamPoly shifted = a.shifted_m(1);
    CHECK(shifted == mono(q, 1, 1, 2) + mono(q, 0, -1));
    CHECK(shifted.eval(2) == Rat(1));
    // alpha_poly(u) evaluates to alpha(m,u)
    for (long u = 0; u <= 4; ++u)
        for (long m = 1; m <= 4; ++m)
            CHECK(MParamPoly::alpha_poly(q, u).eval(m) == Rat(alpha(q, m, u)));
    // zero coefficients are never stored
    MParamPoly z = a;
    z -= a;
    CHECK(z.is_zero());
    CHECK(z.terms().empty());
}

TEST_CASE("q-product basics from the defining examples") {
    const long q = 2;
    HomogPoly x = HomogPoly::x(q), y = HomogPoly::y(q);
    // x * y = yx
    CHECK(q_product(x, y) == from_rats(q, {Rat(0), Rat(1), Rat(0)}));
    // y * x = q yx
    CHECK(q_product(y, x) == from_rats(q, {Rat(0), Rat(q), Rat(0)}));
    CHECK_FALSE(q_product(x, y) == q_product(y, x));
    // yx * (q^m - 1)y = (q^m - q) y^2 x
    HomogPoly yx = q_product(x, y);
    HomogPoly ay = y.scaled(mono(q, 1, 1) + mono(q, 0, -1));
    HomogPoly prod = q_product(yx, ay);
    HomogPoly expect(q, 3);
    expect.set_coeff(2, mono(q, 1, 1) + mono(q, 0, -q));
    CHECK(prod == expect);
    // 1 * b = b and b * 1 = b
    HomogPoly one = HomogPoly::one(q);
    HomogPoly b = full_space_enum(q, 2);
    CHECK(q_product(one, b) == b);
    CHECK(q_product(b, one) == b);
    // mismatched base rejected
    CHECK_THROWS_AS(q_product(HomogPoly::x(2), HomogPoly::y(3)), std::invalid_argument);
}

TEST_CASE("q-powers of the generators") {
    const long q = 2;
    // y^{[2]} = q^{sigma_2} y^2 = 2 y^2
    CHECK(q_power(HomogPoly::y(q), 2) == from_rats(q, {Rat(0), Rat(0), Rat(2)}));
    // x^{[5]} = x^5
    HomogPoly x5(q, 5);
    x5.set_coeff(0, MParamPoly::constant(q, Rat(1)));
    CHECK(q_power(HomogPoly::x(q), 5) == x5);
    // [x + (q^m-1)y]^{[2]} at q=2, m=2 has the GF(4)^2 rank census (1, 9, 6)
    HomogPoly a1 = full_space_enum(q, 1);
    auto coeffs = q_power(a1, 2).coeffs_at(2);
    CHECK(coeffs == std::vector<Rat>{Rat(1), Rat(9), Rat(6)});
    // powers reproduce the closed forms
    for (long qq : {2L, 3L})
        for (int l = 0; l <= 6; ++l) {
            CHECK(q_power(full_space_enum(qq, 1), l) == full_space_enum(qq, l));
            CHECK(q_power(alternating_enum(qq, 1), l) == alternating_enum(qq, l));
        }
}

TEST_CASE("special polynomial coefficient forms") {
    const long q = 2;
    // a_1 = x + (Q-1) y
    HomogPoly a1(q, 1);
    a1.set_coeff(0, MParamPoly::constant(q, Rat(1)));
    a1.set_coeff(1, mono(q, 1, 1) + mono(q, 0, -1));
    CHECK(full_space_enum(q, 1) == a1);
    // b_2 = x^2 - 3 yx + 2 y^2 at q = 2, and equals b_1 * b_1
    CHECK(alternating_enum(q, 2) == from_rats(q, {Rat(1), Rat(-3), Rat(2)}));
    CHECK(alternating_enum(q, 2) == q_product(alternating_enum(q, 1), alternating_enum(q, 1)));
    // a_2 evaluated at m=2 has coefficients (1, 9, 6)
    CHECK(full_space_enum(q, 2).coeffs_at(2) == std::vector<Rat>{Rat(1), Rat(9), Rat(6)});
}

TEST_CASE("q-transform") {
    const long q = 2;
    // transform of x^r is x^r
    HomogPoly x3 = q_power(HomogPoly::x(q), 3);
    CHECK(q_transform(x3) == x3);
    // transform of y^2 is q^{sigma_2} y^2 = 2 y^2
    HomogPoly y2(q, 2);
    y2.set_coeff(2, MParamPoly::constant(q, Rat(1)));
    CHECK(q_transform(y2) == from_rats(q, {Rat(0), Rat(0), Rat(2)}));
    // transform of yx is q yx
    HomogPoly yx(q, 2);
    yx.set_coeff(1, MParamPoly::constant(q, Rat(1)));
    CHECK(q_transform(yx) == from_rats(q, {Rat(0), Rat(q), Rat(0)}));
}

TEST_CASE("q-derivative") {
    const long q = 2;
    // (x^3)^{(1)} = [3 1] x^2 = 7 x^2
    HomogPoly x3 = q_power(HomogPoly::x(q), 3);
    CHECK(q_derivative(x3, 1) == from_rats(q, {Rat(7), Rat(0), Rat(0)}));
    // (y^r)^{(1)} = 0 at the clamped degree
    HomogPoly y2(q, 2);
    y2.set_coeff(2, MParamPoly::constant(q, Rat(1)));
    CHECK(q_derivative(y2, 1).is_zero());
    CHECK(q_derivative(y2, 1).degree() == 1);
    CHECK(q_derivative(y2, 5).degree() == 0);
    // derivative rule for the special polynomials, l <= 5
    for (long qq : {2L, 3L})
        for (int l = 0; l <= 5; ++l)
            for (int nu = 0; nu <= l; ++nu) {
                CHECK(q_derivative(full_space_enum(qq, l), nu) ==
                      full_space_enum(qq, l - nu).scaled(Rat(beta(qq, l, nu))));
                CHECK(q_derivative(alternating_enum(qq, l), nu) ==
                      alternating_enum(qq, l - nu).scaled(Rat(beta(qq, l, nu))));
            }
}

TEST_CASE("q^{-1}-derivative") {
    const long q = 2;
    // (y^2)^{{1}} = (q^{-2}-1)/(q^{-1}-1) y = (3/2) y
    HomogPoly y2(q, 2);
    y2.set_coeff(2, MParamPoly::constant(q, Rat(1)));
    HomogPoly d = q_inv_derivative(y2, 1);
    HomogPoly expect(q, 1);
    expect.set_coeff(1, MParamPoly::constant(q, make_rat(3, 2)));
    CHECK(d == expect);
    for (long qq : {2L, 3L})
        for (int l = 0; l <= 5; ++l)
            for (int nu = 0; nu <= l; ++nu) {
                Rat bsign = Rat(beta(qq, l, nu));
                if (nu % 2 != 0) bsign = -bsign;
                CHECK(q_inv_derivative(alternating_enum(qq, l), nu) ==
                      alternating_enum(qq, l - nu).scaled(bsign));
                MParamPoly factor = MParamPoly::alpha_poly(qq, nu);
                factor *= Rat(beta(qq, l, nu)) * pow_rat(Rat(qq), -sigma(nu));
                CHECK(q_inv_derivative(full_space_enum(qq, l), nu) ==
                      full_space_enum(qq, l - nu).shifted_m(nu).scaled(factor));
            }
}

TEST_CASE("evaluation") {
    const long q = 2;
    CHECK(full_space_enum(q, 2).eval(2, Rat(1), Rat(1)) == Rat(16));  // |GF(4)^2|
    for (int l = 1; l <= 5; ++l)
        for (long m = 1; m <= 3; ++m) CHECK(alternating_enum(q, l).eval(m, Rat(1), Rat(1)) == Rat(0));
    // (x=1, y=0) keeps only the x-monomial coefficient
    std::mt19937_64 rng(11);
    for (int t = 0; t < 10; ++t) {
        HomogPoly f = random_homog(q, 4, rng);
        for (long m = 1; m <= 3; ++m) CHECK(f.eval(m, Rat(1), Rat(0)) == f.coeff(0).eval(m));
    }
}

TEST_CASE("Leibniz rules and division lemmas on random polynomials") {
    std::mt19937_64 rng(2024);
    for (long q : {2L, 3L})
        for (int trial = 0; trial < 25; ++trial) {
            const int r = static_cast<int>(rng() % 5);
            const int s = static_cast<int>(rng() % 5);
            const int nu = static_cast<int>(rng() % 5);
            HomogPoly f = random_homog(q, r, rng);
            HomogPoly g = random_homog(q, s, rng);
            CAPTURE(q);
            CAPTURE(r);
            CAPTURE(s);
            CAPTURE(nu);

            HomogPoly lhs = q_derivative(q_product(f, g), nu);
            HomogPoly rhs(q, std::max(r + s - nu, 0));
            for (int l = 0; l <= nu; ++l) {
                HomogPoly t = q_product(q_derivative(f, l), q_derivative(g, nu - l));
                if (t.degree() != rhs.degree()) continue;
                rhs += t.scaled(Rat(gaussian(q, nu, l)) *
                                pow_rat(Rat(q), static_cast<long>(nu - l) * (r - l)));
            }
            CHECK(lhs == rhs);

            HomogPoly lhs2 = q_inv_derivative(q_product(f, g), nu);
            HomogPoly rhs2(q, std::max(r + s - nu, 0));
            for (int l = 0; l <= nu; ++l) {
                HomogPoly t =
                    q_product(q_inv_derivative(f, l), q_inv_derivative(g, nu - l).shifted_m(l));
                if (t.degree() != rhs2.degree()) continue;
                rhs2 += t.scaled(Rat(gaussian(q, nu, l)) *
                                 pow_rat(Rat(q), static_cast<long>(l) * (s - nu + l)));
            }
            CHECK(lhs2 == rhs2);

            if (r >= 1 && s >= 1) {
                HomogPoly u = f;
                u.set_coeff(r, MParamPoly(q));
                CHECK(q_product(u, g).div_x() == q_product(u.div_x(), g));
                HomogPoly v = g;
                v.set_coeff(s, MParamPoly(q));
                CHECK(q_product(f, v).div_x() == q_product(f.subst_y_qy(), v.div_x()));
                HomogPoly u0 = f;
                u0.set_coeff(0, MParamPoly(q));
                CHECK(q_product(u0, g).div_y() ==
                      q_product(u0.div_y(), g.shifted_m(1))
                          .scaled(Rat(pow_int(q, static_cast<unsigned long>(s)))));
                HomogPoly v0 = g;
                v0.set_coeff(0, MParamPoly(q));
                CHECK(q_product(f, v0).div_y() == q_product(f.subst_y_qy(), v0.div_y()));
            }
        }
}

TEST_CASE("(b * a_s)(1,1;m) = q^{ms} b(1,1;m)") {
    std::mt19937_64 rng(77);
    for (long q : {2L, 3L})
        for (int trial = 0; trial < 10; ++trial) {
            const int r = static_cast<int>(rng() % 4);
            const int s = static_cast<int>(rng() % 4);
            HomogPoly b = random_homog(q, r, rng);
            for (long m = 1; m <= 3; ++m)
                CHECK(q_product(b, full_space_enum(q, s)).eval(m, Rat(1), Rat(1)) ==
                      pow_rat(Rat(q), m * s) * b.eval(m, Rat(1), Rat(1)));
        }
}
