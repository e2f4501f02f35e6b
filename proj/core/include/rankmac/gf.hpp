#pragma once

#include <cstdint>
#include <vector>

namespace rankmac {

bool is_prime(long q);

/// Deterministic irreducibility test for a monic polynomial over GF(q),
/// q prime (factor-free: checks x^{q^deg} = x mod f and gcd conditions for
/// every prime divisor of the degree). Coefficients little-endian.
bool is_irreducible(long q, const std::vector<int>& poly);

/// Smallest (by little-endian coefficient encoding) monic irreducible
/// polynomial of degree m over GF(q).
std::vector<int> find_irreducible(long q, int m);

/// The extension field GF(q^m) = GF(q)[x]/(modulus), q prime. Elements are
/// integer indices sum a_i q^i of their little-endian coordinate vectors in
/// the power basis {1, x, ..., x^{m-1}}. Immutable; all operations pure.
class Field {
public:
    using Elem = std::uint32_t;

    /// Validates: q prime, m >= 1, modulus monic of degree exactly m,
    /// irreducible over GF(q), and q^m representable.
    Field(long q, int m, std::vector<int> modulus);

    static Field with_default_modulus(long q, int m);

    long q() const { return q_; }
    int m() const { return m_; }
    const std::vector<int>& modulus() const { return modulus_; }
    std::uint64_t size() const { return size_; }  // q^m

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;  // a != 0
    Elem pow(Elem a, std::uint64_t e) const;
    Elem frobenius(Elem a, int i) const;  // a^{q^i}

    int coord(Elem a, int i) const;
    Elem from_coords(const std::vector<int>& c) const;
    std::vector<int> coords(Elem a) const;

    bool operator==(const Field& o) const {
        return q_ == o.q_ && m_ == o.m_ && modulus_ == o.modulus_;
    }

private:
    long q_;
    int m_;
    std::vector<int> modulus_;
    std::uint64_t size_;
};

}  // namespace rankmac
