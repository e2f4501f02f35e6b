#include "rankmac/mparam.hpp"

#include <stdexcept>

namespace rankmac {

void MParamPoly::add_term(long e, const Rat& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

MParamPoly MParamPoly::constant(long q, const Rat& c) { return monomial(q, 0, c); }

MParamPoly MParamPoly::monomial(long q, long e, const Rat& c) {
    MParamPoly p(q);
    if (c != 0) p.terms_.emplace(e, c);
    return p;
}

MParamPoly MParamPoly::alpha_poly(long q, long u) {
    MParamPoly p = constant(q, Rat(1));
    for (long i = 0; i < u; ++i) {
        MParamPoly f = monomial(q, 1, Rat(1));
        f.add_term(0, Rat(-pow_int(q, static_cast<unsigned long>(i))));
        p = p * f;
    }
    return p;
}

MParamPoly& MParamPoly::operator+=(const MParamPoly& o) {
    if (q_ != o.q_) throw std::invalid_argument("MParamPoly: mismatched base q");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MParamPoly& MParamPoly::operator-=(const MParamPoly& o) {
    if (q_ != o.q_) throw std::invalid_argument("MParamPoly: mismatched base q");
    for (const auto& [e, c] : o.terms_) add_term(e, Rat(-c));
    return *this;
}

MParamPoly& MParamPoly::operator*=(const Rat& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

MParamPoly operator*(const MParamPoly& a, const MParamPoly& b) {
    if (a.q_ != b.q_) throw std::invalid_argument("MParamPoly: mismatched base q");
    MParamPoly r(a.q_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

MParamPoly MParamPoly::shifted_m(long s) const {
    if (s == 0) return *this;
    MParamPoly r(q_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * pow_rat(Rat(q_), -s * e));
    return r;
}

Rat MParamPoly::eval(long m) const {
    Rat r(0);
    for (const auto& [e, c] : terms_) r += c * pow_rat(Rat(q_), m * e);
    return r;
}

}  // namespace rankmac
