#pragma once

#include <map>

#include "rankmac/exact.hpp"

namespace rankmac {

/// Laurent polynomial in the indeterminate Q = q^m with exact rational
/// coefficients. Represents a coefficient that is a function of the extension
/// degree m, for a fixed base prime q. Kept free of stored zero terms so that
/// equality of values is equality of representations.
class MParamPoly {
public:
    explicit MParamPoly(long q) : q_(q) {}

    static MParamPoly constant(long q, const Rat& c);
    static MParamPoly monomial(long q, long e, const Rat& c);

    /// alpha(m,u) = prod_{i<u} (Q - q^i) as a function of m.
    static MParamPoly alpha_poly(long q, long u);

    long qbase() const { return q_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<long, Rat>& terms() const { return terms_; }

    MParamPoly& operator+=(const MParamPoly& o);
    MParamPoly& operator-=(const MParamPoly& o);
    MParamPoly& operator*=(const Rat& s);

    friend MParamPoly operator+(MParamPoly a, const MParamPoly& b) { return a += b; }
    friend MParamPoly operator-(MParamPoly a, const MParamPoly& b) { return a -= b; }
    friend MParamPoly operator*(MParamPoly a, const Rat& s) { return a *= s; }
    friend MParamPoly operator*(const MParamPoly& a, const MParamPoly& b);

    /// Substitute m -> m - s. Exact: the coefficient of Q^e is scaled by q^{-se}.
    MParamPoly shifted_m(long s) const;

    /// Substitute Q = q^m for a concrete extension degree.
    Rat eval(long m) const;

    bool operator==(const MParamPoly&) const = default;

private:
    long q_;
    std::map<long, Rat> terms_;  // exponent of Q -> nonzero coefficient

    void add_term(long e, const Rat& c);
};

}  // namespace rankmac
