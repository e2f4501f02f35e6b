#include "rankmac/qpoly.hpp"

#include <stdexcept>

#include "rankmac/qfunc.hpp"

namespace rankmac {

HomogPoly::HomogPoly(long q, int degree) : q_(q) {
    if (degree < 0) throw std::invalid_argument("HomogPoly: negative degree");
    coef_.assign(static_cast<size_t>(degree) + 1, MParamPoly(q));
}

HomogPoly HomogPoly::one(long q) {
    HomogPoly p(q, 0);
    p.coef_[0] = MParamPoly::constant(q, Rat(1));
    return p;
}

HomogPoly HomogPoly::x(long q) {
    HomogPoly p(q, 1);
    p.coef_[0] = MParamPoly::constant(q, Rat(1));
    return p;
}

HomogPoly HomogPoly::y(long q) {
    HomogPoly p(q, 1);
    p.coef_[1] = MParamPoly::constant(q, Rat(1));
    return p;
}

HomogPoly HomogPoly::from_counts(long q, const std::vector<Int>& counts) {
    if (counts.empty()) throw std::invalid_argument("from_counts: empty vector");
    HomogPoly p(q, static_cast<int>(counts.size()) - 1);
    for (size_t u = 0; u < counts.size(); ++u)
        p.coef_[u] = MParamPoly::constant(q, Rat(counts[u]));
    return p;
}

bool HomogPoly::is_zero() const {
    for (const auto& c : coef_)
        if (!c.is_zero()) return false;
    return true;
}

void HomogPoly::set_coeff(int u, MParamPoly c) {
    if (c.qbase() != q_) throw std::invalid_argument("set_coeff: mismatched base q");
    coef_.at(static_cast<size_t>(u)) = std::move(c);
}

HomogPoly& HomogPoly::operator+=(const HomogPoly& o) {
    if (q_ != o.q_) throw std::invalid_argument("HomogPoly: mismatched base q");
    if (degree() != o.degree()) throw std::invalid_argument("HomogPoly: mismatched degrees in sum");
    for (size_t u = 0; u < coef_.size(); ++u) coef_[u] += o.coef_[u];
    return *this;
}

HomogPoly HomogPoly::scaled(const Rat& s) const {
    HomogPoly r = *this;
    for (auto& c : r.coef_) c *= s;
    return r;
}

HomogPoly HomogPoly::scaled(const MParamPoly& s) const {
    HomogPoly r(q_, degree());
    for (size_t u = 0; u < coef_.size(); ++u) r.coef_[u] = coef_[u] * s;
    return r;
}

HomogPoly HomogPoly::shifted_m(long s) const {
    HomogPoly r(q_, degree());
    for (size_t u = 0; u < coef_.size(); ++u) r.coef_[u] = coef_[u].shifted_m(s);
    return r;
}

HomogPoly HomogPoly::subst_y_qy() const {
    HomogPoly r(q_, degree());
    for (size_t u = 0; u < coef_.size(); ++u)
        r.coef_[u] = coef_[u] * Rat(pow_int(q_, static_cast<unsigned long>(u)));
    return r;
}

HomogPoly HomogPoly::div_x() const {
    int r = degree();
    if (r == 0 || !coef_[static_cast<size_t>(r)].is_zero())
        throw std::domain_error("div_x: y^r coefficient must vanish");
    HomogPoly out(q_, r - 1);
    for (int u = 0; u < r; ++u) out.coef_[static_cast<size_t>(u)] = coef_[static_cast<size_t>(u)];
    return out;
}

HomogPoly HomogPoly::div_y() const {
    int r = degree();
    if (r == 0 || !coef_[0].is_zero()) throw std::domain_error("div_y: x^r coefficient must vanish");
    HomogPoly out(q_, r - 1);
    for (int u = 1; u <= r; ++u) out.coef_[static_cast<size_t>(u - 1)] = coef_[static_cast<size_t>(u)];
    return out;
}

Rat HomogPoly::eval(long m, const Rat& at_x, const Rat& at_y) const {
    Rat r(0);
    int d = degree();
    for (int u = 0; u <= d; ++u) {
        const auto& c = coef_[static_cast<size_t>(u)];
        if (c.is_zero()) continue;
        r += c.eval(m) * pow_rat(at_y, u) * pow_rat(at_x, d - u);
    }
    return r;
}

std::vector<Rat> HomogPoly::coeffs_at(long m) const {
    std::vector<Rat> out;
    out.reserve(coef_.size());
    for (const auto& c : coef_) out.push_back(c.eval(m));
    return out;
}

HomogPoly q_product(const HomogPoly& a, const HomogPoly& b) {
    if (a.qbase() != b.qbase()) throw std::invalid_argument("q_product: mismatched base q");
    const long q = a.qbase();
    const int r = a.degree(), s = b.degree();
    HomogPoly c(q, r + s);
    for (int i = 0; i <= r; ++i) {
        if (a.coeff(i).is_zero()) continue;
        const Rat scale(pow_int(q, static_cast<unsigned long>(i) * static_cast<unsigned long>(s)));
        for (int j = 0; j <= s; ++j) {
            if (b.coeff(j).is_zero()) continue;
            MParamPoly term = a.coeff(i) * b.coeff(j).shifted_m(i) * scale;
            term += c.coeff(i + j);
            c.set_coeff(i + j, std::move(term));
        }
    }
    return c;
}

HomogPoly q_power(const HomogPoly& a, int n) {
    if (n < 0) throw std::invalid_argument("q_power: negative exponent");
    HomogPoly acc = HomogPoly::one(a.qbase());
    for (int i = 0; i < n; ++i) acc = q_product(acc, a);
    return acc;
}

HomogPoly q_transform(const HomogPoly& a) {
    const long q = a.qbase();
    const int r = a.degree();
    HomogPoly out(q, r);
    for (int i = 0; i <= r; ++i) {
        if (a.coeff(i).is_zero()) continue;
        HomogPoly t = q_product(q_power(HomogPoly::y(q), i), q_power(HomogPoly::x(q), r - i));
        out += t.scaled(a.coeff(i));
    }
    return out;
}

HomogPoly q_derivative(const HomogPoly& f, int nu) {
    if (nu < 0) throw std::invalid_argument("q_derivative: negative order");
    const long q = f.qbase();
    const int r = f.degree();
    HomogPoly out(q, std::max(r - nu, 0));
    for (int i = 0; i <= r - nu; ++i) {
        if (f.coeff(i).is_zero()) continue;
        out.set_coeff(i, f.coeff(i) * Rat(beta(q, r - i, nu)));
    }
    return out;
}

HomogPoly q_inv_derivative(const HomogPoly& g, int nu) {
    if (nu < 0) throw std::invalid_argument("q_inv_derivative: negative order");
    const long q = g.qbase();
    const int r = g.degree();
    HomogPoly out(q, std::max(r - nu, 0));
    for (int l = nu; l <= r; ++l) {
        if (g.coeff(l).is_zero()) continue;
        const Rat factor = pow_rat(Rat(q), nu * (1 - static_cast<long>(l)) + sigma(nu)) * Rat(beta(q, l, nu));
        out.set_coeff(l - nu, g.coeff(l) * factor);
    }
    return out;
}

HomogPoly full_space_enum(long q, int l) {
    HomogPoly p(q, l);
    for (int u = 0; u <= l; ++u) {
        MParamPoly c = MParamPoly::alpha_poly(q, u);
        c *= Rat(gaussian(q, l, u));
        p.set_coeff(u, std::move(c));
    }
    return p;
}

HomogPoly alternating_enum(long q, int l) {
    HomogPoly p(q, l);
    for (int u = 0; u <= l; ++u) {
        Int c = gaussian(q, l, u) * pow_int(q, static_cast<unsigned long>(sigma(u)));
        if (u % 2 != 0) c = -c;
        p.set_coeff(u, MParamPoly::constant(q, Rat(c)));
    }
    return p;
}

}  // namespace rankmac
