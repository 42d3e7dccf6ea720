#pragma once

// Matrices over a commutative ring (big integers or polynomials) with the
// ordered-index minor calculus: minor selection and row/column deletion,
// complementary-minor products, positional shuffles and position sums.
//
// Three determinant routes are kept deliberately separate:
//   det          division-free cofactor expansion memoized over column
//                subsets; works over any ring, used by symbolic checks,
//   det_leibniz  the fully expanded permutation sum; the reference
//                implementation used as the integer-fuzz oracle,
//   det_bareiss  fraction-free elimination for big-integer matrices.

#include "lgv/base.hpp"
#include "lgv/poly.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <span>
#include <vector>

namespace lgv {

template <class R>
struct ring_traits {
    static R zero() { return R(0); }
    static R one() { return R(1); }
};

template <class R>
class RingMatrix {
public:
    RingMatrix() = default;
    RingMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          entries_(static_cast<std::size_t>(rows) * cols, ring_traits<R>::zero()) {
        if (rows < 0 || cols < 0) throw Error("matrix: negative dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    // 1-based, matching the index sets used throughout.
    R& at(int i, int j) {
        check(i, j);
        return entries_[static_cast<std::size_t>(i - 1) * cols_ + (j - 1)];
    }
    const R& at(int i, int j) const {
        check(i, j);
        return entries_[static_cast<std::size_t>(i - 1) * cols_ + (j - 1)];
    }

    bool operator==(const RingMatrix& o) const = default;

    RingMatrix operator*(const RingMatrix& o) const {
        if (cols_ != o.rows_) throw Error("matrix product: dimension mismatch");
        RingMatrix r(rows_, o.cols_);
        for (int i = 1; i <= rows_; ++i)
            for (int k = 1; k <= cols_; ++k)
                for (int j = 1; j <= o.cols_; ++j)
                    r.at(i, j) += at(i, k) * o.at(k, j);
        return r;
    }

private:
    void check(int i, int j) const {
        if (i < 1 || i > rows_ || j < 1 || j > cols_) throw Error("matrix index out of range");
    }

    int rows_ = 0, cols_ = 0;
    std::vector<R> entries_;
};

// Strictly increasing 1-based indices inside an ambient range 1..n;
// subsets inherit the ambient order.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::vector<int> values, int ambient) : values_(std::move(values)), ambient_(ambient) {
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (values_[i] < 1 || values_[i] > ambient_) throw Error("index set: value out of range");
            if (i > 0 && values_[i - 1] >= values_[i])
                throw Error("index set: values must be strictly increasing");
        }
    }

    static IndexSet full(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
        return IndexSet(std::move(v), n);
    }

    const std::vector<int>& values() const { return values_; }
    int ambient() const { return ambient_; }
    int size() const { return static_cast<int>(values_.size()); }
    bool contains(int x) const { return std::binary_search(values_.begin(), values_.end(), x); }

    IndexSet complement() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(ambient_) - values_.size());
        for (int i = 1; i <= ambient_; ++i)
            if (!contains(i)) out.push_back(i);
        return IndexSet(std::move(out), ambient_);
    }

    bool operator==(const IndexSet& o) const = default;

private:
    std::vector<int> values_;
    int ambient_ = 0;
};

// Minor consisting of the given rows and columns in the given order.
// Index lists need not be increasing; Pluecker-style shuffles select
// columns in a prescribed, possibly non-monotone order.
template <class R>
RingMatrix<R> minor(const RingMatrix<R>& a, std::span<const int> rows, std::span<const int> cols) {
    RingMatrix<R> m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            m.at(static_cast<int>(i) + 1, static_cast<int>(j) + 1) = a.at(rows[i], cols[j]);
    return m;
}

template <class R>
RingMatrix<R> minor(const RingMatrix<R>& a, const IndexSet& rows, const IndexSet& cols) {
    if (rows.ambient() != a.rows() || cols.ambient() != a.cols())
        throw Error("minor: ambient size mismatch");
    return minor(a, std::span<const int>(rows.values()), std::span<const int>(cols.values()));
}

template <class R>
RingMatrix<R> minor(const RingMatrix<R>& a, const std::vector<int>& rows, const std::vector<int>& cols) {
    return minor(a, std::span<const int>(rows), std::span<const int>(cols));
}

// The same minor described by deletion: keep everything outside X and Y.
template <class R>
RingMatrix<R> delete_rowcols(const RingMatrix<R>& a, const std::vector<int>& drop_rows,
                             const std::vector<int>& drop_cols) {
    auto keep = [](int n, const std::vector<int>& drop) {
        std::vector<int> out;
        for (int i = 1; i <= n; ++i)
            if (std::find(drop.begin(), drop.end(), i) == drop.end()) out.push_back(i);
        return out;
    };
    return minor(a, keep(a.rows(), drop_rows), keep(a.cols(), drop_cols));
}

// Division-free determinant: cofactor expansion memoized over column
// subsets (the row is determined by the subset size). The 0x0 matrix has
// determinant 1.
template <class R>
R det(const RingMatrix<R>& a) {
    if (a.rows() != a.cols()) throw Error("det: matrix not square");
    const int m = a.rows();
    if (m > 24) throw Error("det: matrix too large for subset memoization");
    if (m == 0) return ring_traits<R>::one();
    std::vector<std::optional<R>> memo(std::size_t{1} << m);
    auto rec = [&](auto&& self, std::uint32_t mask) -> const R& {
        auto& slot = memo[mask];
        if (slot) return *slot;
        const int k = std::popcount(mask);
        const int row = m - k + 1;  // rows row..m remain
        R acc = ring_traits<R>::zero();
        int pos = 0;
        for (int j = 1; j <= m; ++j) {
            if (!(mask & (1u << (j - 1)))) continue;
            ++pos;
            if (k == 1) {
                acc = a.at(row, j);
                break;
            }
            const R sub = self(self, mask & ~(1u << (j - 1)));
            const R term = a.at(row, j) * sub;
            if (pos % 2 == 1) acc += term;
            else acc -= term;
        }
        slot = std::move(acc);
        return *slot;
    };
    return rec(rec, (std::uint32_t{1} << m) - 1);
}

// Reference determinant: the signed permutation sum, written from the
// definition so it shares nothing with det(). Only sensible for small m.
template <class R>
R det_leibniz(const RingMatrix<R>& a) {
    if (a.rows() != a.cols()) throw Error("det: matrix not square");
    const int m = a.rows();
    if (m == 0) return ring_traits<R>::one();
    std::vector<int> perm(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    R total = ring_traits<R>::zero();
    do {
        int inversions = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
        R prod = ring_traits<R>::one();
        for (int i = 1; i <= m; ++i) prod = prod * a.at(i, perm[static_cast<std::size_t>(i) - 1]);
        if (inversions % 2 == 0) total += prod;
        else total -= prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Fraction-free Bareiss elimination; exact over the integers.
inline BigInt det_bareiss(RingMatrix<BigInt> a) {
    if (a.rows() != a.cols()) throw Error("det: matrix not square");
    const int m = a.rows();
    if (m == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 1; k < m; ++k) {
        if (a.at(k, k) == 0) {
            int pivot = 0;
            for (int i = k + 1; i <= m; ++i)
                if (a.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot == 0) return 0;
            for (int j = 1; j <= m; ++j) std::swap(a.at(k, j), a.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i <= m; ++i)
            for (int j = k + 1; j <= m; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(m, m) : BigInt(-a.at(m, m));
}

// det(a[I,J]) * det(a[comp I, comp J]).
template <class R>
R detprod_cminors(const RingMatrix<R>& a, const IndexSet& I, const IndexSet& J) {
    if (a.rows() != a.cols()) throw Error("detprod_cminors: matrix not square");
    if (I.size() != J.size()) throw Error("detprod_cminors: index sets differ in size");
    if (I.ambient() != a.rows() || J.ambient() != a.cols())
        throw Error("detprod_cminors: ambient size mismatch");
    return det(minor(a, I, J)) * det(minor(a, I.complement(), J.complement()));
}

// Positional replacement: the elements of X are replaced by the elements
// of Y in the same order; everything else stays put.
inline std::vector<int> shuffle(const std::vector<int>& S, const std::vector<int>& X,
                                const std::vector<int>& Y) {
    if (X.size() != Y.size()) throw Error("shuffle: |X| != |Y|");
    for (int y : Y)
        if (std::find(S.begin(), S.end(), y) != S.end()) throw Error("shuffle: Y must be disjoint from S");
    std::vector<int> out = S;
    for (std::size_t i = 0; i < X.size(); ++i) {
        auto it = std::find(out.begin(), out.end(), X[i]);
        if (it == out.end()) throw Error("shuffle: X not contained in S");
        *it = Y[i];
    }
    return out;
}

// Sum of the 1-based positions of S's elements within the ordered set X.
inline long long sumset(const std::vector<int>& S, const std::vector<int>& X) {
    long long total = 0;
    for (int s : S) {
        auto it = std::find(X.begin(), X.end(), s);
        if (it == X.end()) throw Error("sumset: element not in ambient set");
        total += (it - X.begin()) + 1;
    }
    return total;
}

// Matrix of independent variables y_{i,j}; the label offsets let two
// generic matrices share one ring without colliding.
inline RingMatrix<MultiPoly> generic_matrix(int rows, int cols, int row_base = 0, int col_base = 0) {
    RingMatrix<MultiPoly> a(rows, cols);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j)
            a.at(i, j) = MultiPoly::variable(VarId::y(row_base + i, col_base + j));
    return a;
}

inline RingMatrix<BigInt> identity_matrix(int m) {
    RingMatrix<BigInt> a(m, m);
    for (int i = 1; i <= m; ++i) a.at(i, i) = 1;
    return a;
}

// Seeded random integer matrix with entries uniform in [lo, hi].
inline RingMatrix<BigInt> random_int_matrix(Rng& rng, int rows, int cols, int lo, int hi) {
    RingMatrix<BigInt> a(rows, cols);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) a.at(i, j) = rng.uniform(lo, hi);
    return a;
}

}  // namespace lgv
