#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "rankmac/exact.hpp"
#include "rankmac/gf.hpp"
#include "rankmac/qpoly.hpp"

namespace rankmac {

/// A length-n vector over GF(q^m).
using CodeVector = std::vector<Field::Elem>;

/// Exact counts A_0..A_n of codewords by rank weight.
using RankDistribution = std::vector<Int>;

inline constexpr std::uint64_t kDefaultCap = 1ull << 24;

/// Thrown when an enumeration would exceed the configured codeword cap.
/// Never truncates silently; the message names the required budget.
struct CapExceeded : std::runtime_error {
    CapExceeded(const Int& required, std::uint64_t cap)
        : std::runtime_error("enumeration needs " + required.get_str() + " codewords, cap is " +
                             std::to_string(cap)),
          required(required) {}
    Int required;
};

Field::Elem inner_product(const Field& f, const CodeVector& a, const CodeVector& b);

/// Rank over GF(q) of the m x n matrix whose columns are the coordinate
/// expansions of the entries of v.
int rank_weight(const Field& f, const CodeVector& v);

/// An (n,k) linear code over GF(q^m), held as a generator matrix with
/// GF(q^m)-linearly independent rows (verified at construction).
class LinearCode {
public:
    LinearCode(Field f, int n, std::vector<CodeVector> generator);

    static LinearCode zero(Field f, int n);
    static LinearCode whole_space(Field f, int n);
    /// {(a, a, ..., a)}: the (n,1) repetition code.
    static LinearCode repetition(Field f, int n);

    const Field& field() const { return field_; }
    int n() const { return n_; }
    int k() const { return static_cast<int>(generator_.size()); }
    const std::vector<CodeVector>& generator() const { return generator_; }

    Int cardinality() const;  // q^{mk}

private:
    Field field_;
    int n_;
    std::vector<CodeVector> generator_;
};

/// Exact rank-weight census over all q^{mk} codewords.
RankDistribution brute_distribution(const LinearCode& c, std::uint64_t cap = kDefaultCap);

/// The (n, n-k) code spanning the kernel of c's generator under the standard
/// inner product.
LinearCode dual_code(const LinearCode& c);

/// c0 x GF(q^m)^s, as a block-diagonal generator extension.
LinearCode cartesian_product(const LinearCode& c0, int s);

/// Moore-matrix code: generator entry (i,j) = points[j]^{q^i}. Requires the
/// points to be GF(q)-linearly independent (hence n <= m).
LinearCode gabidulin_code(const Field& f, int n, int k, const CodeVector& points);

// Minimum nonzero rank weight / maximum rank weight of a distribution.
// Empty optional for the zero code (no codeword pairs).
std::optional<int> min_rank_distance(const RankDistribution& d);
std::optional<int> diameter(const RankDistribution& d);
std::optional<int> min_rank_distance(const LinearCode& c, std::uint64_t cap = kDefaultCap);
std::optional<int> diameter(const LinearCode& c, std::uint64_t cap = kDefaultCap);

/// q = 2 only: the transform sum_{u in GF(2^m)^n} chi(u.v) y^{rk(u)} x^{n-rk(u)}
/// with chi(a) = (-1)^{a_0}, computed by full enumeration. Returns a
/// constant-coefficient polynomial of degree n.
HomogPoly hadamard_rank_enum(const Field& f, const CodeVector& v, std::uint64_t cap = kDefaultCap);

}  // namespace rankmac
