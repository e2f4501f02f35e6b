#include "rankmac/codes.hpp"

#include <algorithm>

namespace rankmac {

namespace {

// Reduced row echelon form over GF(q^m), in place. Returns pivot columns.
std::vector<int> rref(const Field& f, std::vector<CodeVector>& rows, int n) {
    std::vector<int> pivots;
    size_t r = 0;
    for (int c = 0; c < n && r < rows.size(); ++c) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][static_cast<size_t>(c)] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const Field::Elem inv = f.inv(rows[r][static_cast<size_t>(c)]);
        for (auto& x : rows[r]) x = f.mul(inv, x);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            const Field::Elem factor = rows[i][static_cast<size_t>(c)];
            if (factor == 0) continue;
            for (int j = 0; j < n; ++j) {
                auto& x = rows[i][static_cast<size_t>(j)];
                x = f.sub(x, f.mul(factor, rows[r][static_cast<size_t>(j)]));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

void check_cap(const Int& required, std::uint64_t cap) {
    if (required > Int(static_cast<unsigned long>(cap))) throw CapExceeded(required, cap);
}

}  // namespace

Field::Elem inner_product(const Field& f, const CodeVector& a, const CodeVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("inner_product: length mismatch");
    Field::Elem s = 0;
    for (size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

int rank_weight(const Field& f, const CodeVector& v) {
    const int m = f.m();
    const int n = static_cast<int>(v.size());
    // rows of the transposed coordinate matrix: one GF(q) row of length m per entry
    std::vector<std::vector<int>> rows(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) rows[static_cast<size_t>(j)] = f.coords(v[static_cast<size_t>(j)]);
    const long q = f.q();
    int rank = 0;
    for (int c = 0; c < m && rank < n; ++c) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (rows[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(piv)]);
        // normalize pivot row
        long inv = 1, base = rows[static_cast<size_t>(rank)][static_cast<size_t>(c)], e = q - 2;
        while (e) {
            if (e & 1) inv = inv * base % q;
            base = base * base % q;
            e >>= 1;
        }
        for (int j = c; j < m; ++j) {
            auto& x = rows[static_cast<size_t>(rank)][static_cast<size_t>(j)];
            x = static_cast<int>(x * inv % q);
        }
        for (int r = rank + 1; r < n; ++r) {
            const long factor = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (factor == 0) continue;
            for (int j = c; j < m; ++j) {
                auto& x = rows[static_cast<size_t>(r)][static_cast<size_t>(j)];
                x = static_cast<int>(((x - factor * rows[static_cast<size_t>(rank)][static_cast<size_t>(j)]) % q + q) % q);
            }
        }
        ++rank;
    }
    return rank;
}

LinearCode::LinearCode(Field f, int n, std::vector<CodeVector> generator)
    : field_(std::move(f)), n_(n), generator_(std::move(generator)) {
    if (n_ < 0) throw std::invalid_argument("LinearCode: negative length");
    if (generator_.size() > static_cast<size_t>(n_))
        throw std::invalid_argument("LinearCode: more rows than length");
    for (const auto& row : generator_) {
        if (row.size() != static_cast<size_t>(n_))
            throw std::invalid_argument("LinearCode: generator row length mismatch");
        for (auto x : row)
            if (x >= field_.size()) throw std::invalid_argument("LinearCode: entry out of field");
    }
    auto rows = generator_;
    if (rref(field_, rows, n_).size() != generator_.size())
        throw std::invalid_argument("LinearCode: generator rows are dependent");
}

LinearCode LinearCode::zero(Field f, int n) { return LinearCode(std::move(f), n, {}); }

LinearCode LinearCode::whole_space(Field f, int n) {
    std::vector<CodeVector> gen(static_cast<size_t>(n), CodeVector(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) gen[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return LinearCode(std::move(f), n, std::move(gen));
}

LinearCode LinearCode::repetition(Field f, int n) {
    if (n < 1) throw std::invalid_argument("repetition: length must be positive");
    return LinearCode(std::move(f), n, {CodeVector(static_cast<size_t>(n), 1)});
}

Int LinearCode::cardinality() const {
    return pow_int(field_.q(), static_cast<unsigned long>(field_.m()) * static_cast<unsigned long>(k()));
}

RankDistribution brute_distribution(const LinearCode& c, std::uint64_t cap) {
    check_cap(c.cardinality(), cap);
    const Field& f = c.field();
    const int n = c.n(), k = c.k();
    const std::uint64_t fsize = f.size();
    std::vector<std::uint64_t> counts(static_cast<size_t>(n) + 1, 0);
    CodeVector scaled_row(static_cast<size_t>(n));
    // depth-first over message symbols, extending a partial codeword sum
    std::vector<CodeVector> partial(static_cast<size_t>(k) + 1, CodeVector(static_cast<size_t>(n), 0));
    std::vector<std::uint64_t> sym(static_cast<size_t>(k), 0);
    int level = 0;
    for (;;) {
        if (level == k) {
            ++counts[static_cast<size_t>(rank_weight(f, partial[static_cast<size_t>(k)]))];
            --level;
            for (; level >= 0; --level) {
                if (++sym[static_cast<size_t>(level)] < fsize) break;
                sym[static_cast<size_t>(level)] = 0;
            }
            if (level < 0) break;
        }
        const auto s = static_cast<Field::Elem>(sym[static_cast<size_t>(level)]);
        const auto& row = c.generator()[static_cast<size_t>(level)];
        auto& next = partial[static_cast<size_t>(level) + 1];
        const auto& cur = partial[static_cast<size_t>(level)];
        for (int j = 0; j < n; ++j)
            next[static_cast<size_t>(j)] = f.add(cur[static_cast<size_t>(j)], f.mul(s, row[static_cast<size_t>(j)]));
        ++level;
    }
    RankDistribution out(static_cast<size_t>(n) + 1);
    for (size_t i = 0; i < counts.size(); ++i) out[i] = Int(static_cast<unsigned long>(counts[i]));
    return out;
}

LinearCode dual_code(const LinearCode& c) {
    const Field& f = c.field();
    const int n = c.n();
    auto rows = c.generator();
    const auto pivots = rref(f, rows, n);
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<CodeVector> basis;
    for (int fc = 0; fc < n; ++fc) {
        if (is_pivot[static_cast<size_t>(fc)]) continue;
        CodeVector v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(fc)] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<size_t>(pivots[r])] = f.neg(rows[r][static_cast<size_t>(fc)]);
        basis.push_back(std::move(v));
    }
    return LinearCode(f, n, std::move(basis));
}

LinearCode cartesian_product(const LinearCode& c0, int s) {
    if (s < 0) throw std::invalid_argument("cartesian_product: negative extension");
    const Field& f = c0.field();
    const int n = c0.n(), k = c0.k();
    std::vector<CodeVector> gen;
    gen.reserve(static_cast<size_t>(k + s));
    for (const auto& row : c0.generator()) {
        CodeVector r = row;
        r.resize(static_cast<size_t>(n + s), 0);
        gen.push_back(std::move(r));
    }
    for (int i = 0; i < s; ++i) {
        CodeVector r(static_cast<size_t>(n + s), 0);
        r[static_cast<size_t>(n + i)] = 1;
        gen.push_back(std::move(r));
    }
    return LinearCode(f, n + s, std::move(gen));
}

LinearCode gabidulin_code(const Field& f, int n, int k, const CodeVector& points) {
    if (n < 1 || n > f.m()) throw std::invalid_argument("gabidulin_code: need 1 <= n <= m");
    if (k < 1 || k > n) throw std::invalid_argument("gabidulin_code: need 1 <= k <= n");
    if (points.size() != static_cast<size_t>(n))
        throw std::invalid_argument("gabidulin_code: wrong number of points");
    if (rank_weight(f, points) != n)
        throw std::invalid_argument("gabidulin_code: points are GF(q)-dependent");
    std::vector<CodeVector> gen(static_cast<size_t>(k), CodeVector(static_cast<size_t>(n)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j)
            gen[static_cast<size_t>(i)][static_cast<size_t>(j)] = f.frobenius(points[static_cast<size_t>(j)], i);
    return LinearCode(f, n, std::move(gen));
}

std::optional<int> min_rank_distance(const RankDistribution& d) {
    for (size_t i = 1; i < d.size(); ++i)
        if (d[i] != 0) return static_cast<int>(i);
    return std::nullopt;
}

std::optional<int> diameter(const RankDistribution& d) {
    for (size_t i = d.size(); i-- > 1;)
        if (d[i] != 0) return static_cast<int>(i);
    return std::nullopt;
}

std::optional<int> min_rank_distance(const LinearCode& c, std::uint64_t cap) {
    return min_rank_distance(brute_distribution(c, cap));
}

std::optional<int> diameter(const LinearCode& c, std::uint64_t cap) {
    return diameter(brute_distribution(c, cap));
}

HomogPoly hadamard_rank_enum(const Field& f, const CodeVector& v, std::uint64_t cap) {
    if (f.q() != 2) throw std::invalid_argument("hadamard_rank_enum: supported for q = 2 only");
    const int n = static_cast<int>(v.size());
    Int space = pow_int(2, static_cast<unsigned long>(f.m()) * static_cast<unsigned long>(n));
    check_cap(space, cap);
    std::vector<long long> acc(static_cast<size_t>(n) + 1, 0);
    CodeVector u(static_cast<size_t>(n), 0);
    const std::uint64_t fsize = f.size();
    for (;;) {
        const Field::Elem ip = inner_product(f, u, v);
        const int chi = (f.coord(ip, 0) & 1) ? -1 : 1;
        acc[static_cast<size_t>(rank_weight(f, u))] += chi;
        int pos = 0;
        while (pos < n && ++u[static_cast<size_t>(pos)] == fsize) {
            u[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    std::vector<Int> counts(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) counts[i] = Int(static_cast<long>(acc[i]));
    return HomogPoly::from_counts(f.q(), counts);
}

}  // namespace rankmac
