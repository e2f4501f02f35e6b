#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rankmac {

/// Arbitrary-precision signed integer. Every count and identity side in this
/// library is exact; there is no floating point anywhere.
using Int = mpz_class;

/// Arbitrary-precision rational in canonical form (coprime, positive denominator).
using Rat = mpq_class;

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow_int(long base, unsigned long e) { return pow_int(Int(base), e); }

/// base^e as an exact rational; e may be negative (base must be nonzero then).
inline Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0 && e < 0) throw std::domain_error("pow_rat: 0 to a negative power");
    unsigned long ae = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
    Rat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), ae);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), ae);
    if (e < 0) mpq_inv(r.get_mpq_t(), r.get_mpq_t());
    return r;
}

inline Rat pow_rat(long base, long e) { return pow_rat(Rat(base), e); }

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return mpz_cmp_ui(mpq_denref(r.get_mpq_t()), 1) == 0; }

/// Exact conversion; throws if r has a nontrivial denominator.
inline Int to_int(const Rat& r) {
    if (!is_integer(r)) throw std::domain_error("to_int: " + r.get_str() + " is not an integer");
    return Int(mpq_numref(r.get_mpq_t()));
}

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) { return v.get_str(); }

}  // namespace rankmac
