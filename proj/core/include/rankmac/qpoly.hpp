#pragma once

#include <vector>

#include "rankmac/mparam.hpp"

namespace rankmac {

/// Homogeneous bivariate polynomial sum_{u=0}^{r} c_u(m) y^u x^{r-u} of known
/// degree r, with coefficients that are exact functions of m (MParamPoly).
/// The zero polynomial exists at every degree.
class HomogPoly {
public:
    HomogPoly(long q, int degree);

    static HomogPoly one(long q);
    static HomogPoly x(long q);
    static HomogPoly y(long q);

    /// Constant-coefficient polynomial from a count vector (index = y-degree).
    static HomogPoly from_counts(long q, const std::vector<Int>& counts);

    long qbase() const { return q_; }
    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    bool is_zero() const;

    const MParamPoly& coeff(int u) const { return coef_.at(static_cast<size_t>(u)); }
    void set_coeff(int u, MParamPoly c);

    HomogPoly& operator+=(const HomogPoly& o);  // requires equal degrees
    friend HomogPoly operator+(HomogPoly a, const HomogPoly& b) { return a += b; }
    HomogPoly scaled(const Rat& s) const;
    HomogPoly scaled(const MParamPoly& s) const;

    /// Substitute m -> m - s in every coefficient.
    HomogPoly shifted_m(long s) const;
    /// Substitute y -> q y.
    HomogPoly subst_y_qy() const;
    /// Divide by x; requires the y^r coefficient to vanish.
    HomogPoly div_x() const;
    /// Divide by y; requires the x^r coefficient to vanish.
    HomogPoly div_y() const;

    Rat eval(long m, const Rat& at_x, const Rat& at_y) const;
    std::vector<Rat> coeffs_at(long m) const;

    bool operator==(const HomogPoly&) const = default;

private:
    long q_;
    std::vector<MParamPoly> coef_;  // size degree+1, index = y-degree
};

/// q-product: c_u(m) = sum_i q^{is} a_i(m) b_{u-i}(m-i) with s = deg b.
/// Non-commutative; operand order is significant. Throws on mismatched q.
HomogPoly q_product(const HomogPoly& a, const HomogPoly& b);

/// n-th q-power: a^{[0]} = 1, a^{[n]} = a^{[n-1]} * a.
HomogPoly q_power(const HomogPoly& a, int n);

/// q-transform: sum_i a_i(m) y^{[i]} * x^{[r-i]}.
HomogPoly q_transform(const HomogPoly& a);

/// nu-th q-derivative with respect to x: y^i x^{r-i} -> beta(r-i,nu) y^i x^{r-i-nu},
/// dropping monomials with x-degree below nu. Returns the zero polynomial of
/// degree max(r-nu,0) when differentiated past the degree.
HomogPoly q_derivative(const HomogPoly& f, int nu);

/// nu-th q^{-1}-derivative with respect to y:
/// y^l x^s -> q^{nu(1-l)+sigma_nu} beta(l,nu) y^{l-nu} x^s.
HomogPoly q_inv_derivative(const HomogPoly& g, int nu);

/// [x + (q^m-1)y]^{[l]}: the rank weight enumerator of GF(q^m)^l,
/// with coefficients [l u] alpha(m,u).
HomogPoly full_space_enum(long q, int l);

/// (x - y)^{[l]}: the alternating factor of the dual transform kernel,
/// with constant coefficients [l u] (-1)^u q^{sigma_u}.
HomogPoly alternating_enum(long q, int l);

}  // namespace rankmac
