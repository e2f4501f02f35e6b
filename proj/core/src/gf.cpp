#include "rankmac/gf.hpp"

#include <array>
#include <stdexcept>

namespace rankmac {

namespace {

constexpr int kMaxDegree = 30;
constexpr std::uint64_t kMaxFieldSize = 1ull << 31;

using Poly = std::vector<int>;  // little-endian over GF(q)

int mod_inv(long q, int a) {
    // q prime, 0 < a < q
    long r = 1, base = a, e = q - 2;
    while (e) {
        if (e & 1) r = r * base % q;
        base = base * base % q;
        e >>= 1;
    }
    return static_cast<int>(r);
}

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, long q) {
    if (a.empty() || b.empty()) return {};
    std::vector<long> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<long>(a[i]) * b[j];
    }
    const size_t m = mod.size() - 1;  // mod is monic of degree m
    for (size_t d = acc.size(); d-- > m;) {
        long c = acc[d] % q;
        if (c == 0) continue;
        for (size_t i = 0; i <= m; ++i) acc[d - m + i] -= c * mod[i];
        acc[d] = 0;
    }
    Poly r(std::min(acc.size(), m));
    for (size_t i = 0; i < r.size(); ++i) r[i] = static_cast<int>(((acc[i] % q) + q) % q);
    trim(r);
    return r;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& mod, long q) {
    Poly r{1};
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, mod, q);
        base = poly_mulmod(base, base, mod, q);
        e >>= 1;
    }
    return r;
}

// x^{q^j} mod f, by j successive q-th powers
Poly frobenius_of_x(int j, const Poly& mod, long q) {
    Poly h{0, 1};
    trim(h);
    for (int i = 0; i < j; ++i) h = poly_powmod(h, static_cast<std::uint64_t>(q), mod, q);
    return h;
}

Poly poly_mod(Poly a, const Poly& b, long q) {
    const int lead_inv = mod_inv(q, b.back());
    trim(a);
    while (a.size() >= b.size()) {
        const long c = static_cast<long>(a.back()) * lead_inv % q;
        const size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[off + i] = static_cast<int>((((a[off + i] - c * b[i]) % q) + q) % q);
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, long q) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, q);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_sub(Poly a, const Poly& b, long q) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = static_cast<int>(((a[i] - b[i]) % q + q) % q);
    trim(a);
    return a;
}

}  // namespace

bool is_prime(long q) {
    if (q < 2) return false;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

bool is_irreducible(long q, const std::vector<int>& poly) {
    if (!is_prime(q)) throw std::invalid_argument("is_irreducible: q must be prime");
    if (poly.size() < 2) return false;
    const int m = static_cast<int>(poly.size()) - 1;
    if (poly.back() != 1) return false;  // monic required
    for (int c : poly)
        if (c < 0 || c >= q) return false;
    if (m == 1) return true;

    const Poly xp{0, 1};
    // x^{q^m} == x (mod f)
    Poly xqm = frobenius_of_x(m, poly, q);
    if (poly_sub(xqm, xp, q) != Poly{}) return false;
    // gcd(x^{q^{m/p}} - x, f) == 1 for every prime p | m
    int rem = m;
    for (int p = 2; p <= rem; ++p) {
        if (rem % p != 0) continue;
        while (rem % p == 0) rem /= p;
        Poly g = poly_gcd(poly_sub(frobenius_of_x(m / p, poly, q), xp, q), poly, q);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<int> find_irreducible(long q, int m) {
    if (m < 1 || m > kMaxDegree) throw std::invalid_argument("find_irreducible: bad degree");
    if (m == 1) return {0, 1};
    std::vector<int> p(static_cast<size_t>(m) + 1, 0);
    p[static_cast<size_t>(m)] = 1;
    // scan lower coefficients in counting order
    std::uint64_t limit = 1;
    for (int i = 0; i < m; ++i) limit *= static_cast<std::uint64_t>(q);
    for (std::uint64_t idx = 1; idx < limit; ++idx) {
        std::uint64_t v = idx;
        for (int i = 0; i < m; ++i) {
            p[static_cast<size_t>(i)] = static_cast<int>(v % static_cast<std::uint64_t>(q));
            v /= static_cast<std::uint64_t>(q);
        }
        if (is_irreducible(q, p)) return p;
    }
    throw std::logic_error("find_irreducible: none found");  // unreachable for valid q, m
}

Field::Field(long q, int m, std::vector<int> modulus) : q_(q), m_(m), modulus_(std::move(modulus)) {
    if (!is_prime(q_)) throw std::invalid_argument("Field: q must be prime");
    if (m_ < 1 || m_ > kMaxDegree) throw std::invalid_argument("Field: extension degree out of range");
    if (modulus_.size() != static_cast<size_t>(m_) + 1)
        throw std::invalid_argument("Field: modulus degree must equal m");
    size_ = 1;
    for (int i = 0; i < m_; ++i) {
        size_ *= static_cast<std::uint64_t>(q_);
        if (size_ > kMaxFieldSize) throw std::invalid_argument("Field: q^m too large");
    }
    if (!is_irreducible(q_, modulus_)) throw std::invalid_argument("Field: modulus is not irreducible");
}

Field Field::with_default_modulus(long q, int m) { return Field(q, m, find_irreducible(q, m)); }

Field::Elem Field::add(Elem a, Elem b) const {
    Elem out = 0, mult = 1;
    for (int i = 0; i < m_; ++i) {
        const auto da = a % q_, db = b % q_;
        a /= static_cast<Elem>(q_);
        b /= static_cast<Elem>(q_);
        out += static_cast<Elem>((da + db) % q_) * mult;
        mult *= static_cast<Elem>(q_);
    }
    return out;
}

Field::Elem Field::neg(Elem a) const {
    Elem out = 0, mult = 1;
    for (int i = 0; i < m_; ++i) {
        const auto da = a % q_;
        a /= static_cast<Elem>(q_);
        out += static_cast<Elem>((q_ - da) % q_) * mult;
        mult *= static_cast<Elem>(q_);
    }
    return out;
}

Field::Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Field::Elem Field::mul(Elem a, Elem b) const {
    std::array<long, 2 * kMaxDegree> acc{};
    std::array<int, kMaxDegree> ca{}, cb{};
    for (int i = 0; i < m_; ++i) {
        ca[static_cast<size_t>(i)] = static_cast<int>(a % q_);
        a /= static_cast<Elem>(q_);
        cb[static_cast<size_t>(i)] = static_cast<int>(b % q_);
        b /= static_cast<Elem>(q_);
    }
    for (int i = 0; i < m_; ++i) {
        if (ca[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < m_; ++j)
            acc[static_cast<size_t>(i + j)] +=
                static_cast<long>(ca[static_cast<size_t>(i)]) * cb[static_cast<size_t>(j)];
    }
    for (int d = 2 * m_ - 2; d >= m_; --d) {
        long c = acc[static_cast<size_t>(d)] % q_;
        if (c == 0) continue;
        for (int i = 0; i <= m_; ++i) acc[static_cast<size_t>(d - m_ + i)] -= c * modulus_[static_cast<size_t>(i)];
    }
    Elem out = 0, mult = 1;
    for (int i = 0; i < m_; ++i) {
        out += static_cast<Elem>(((acc[static_cast<size_t>(i)] % q_) + q_) % q_) * mult;
        mult *= static_cast<Elem>(q_);
    }
    return out;
}

Field::Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Field::Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("Field::inv: zero element");
    return pow(a, size_ - 2);
}

Field::Elem Field::frobenius(Elem a, int i) const {
    for (int j = 0; j < i; ++j) a = pow(a, static_cast<std::uint64_t>(q_));
    return a;
}

int Field::coord(Elem a, int i) const {
    for (int j = 0; j < i; ++j) a /= static_cast<Elem>(q_);
    return static_cast<int>(a % q_);
}

Field::Elem Field::from_coords(const std::vector<int>& c) const {
    if (c.size() != static_cast<size_t>(m_)) throw std::invalid_argument("from_coords: wrong length");
    Elem out = 0, mult = 1;
    for (int i = 0; i < m_; ++i) {
        if (c[static_cast<size_t>(i)] < 0 || c[static_cast<size_t>(i)] >= q_)
            throw std::invalid_argument("from_coords: coordinate out of range");
        out += static_cast<Elem>(c[static_cast<size_t>(i)]) * mult;
        mult *= static_cast<Elem>(q_);
    }
    return out;
}

std::vector<int> Field::coords(Elem a) const {
    std::vector<int> c(static_cast<size_t>(m_));
    for (int i = 0; i < m_; ++i) {
        c[static_cast<size_t>(i)] = static_cast<int>(a % q_);
        a /= static_cast<Elem>(q_);
    }
    return c;
}

}  // namespace rankmac
