#pragma once

// Jacobi-Trudi matrices of complete homogeneous symmetric functions, the
// dictionary between minors and part deletion, and the replacement of
// distinct h-entries by independent generic variables.

#include "lgv/linalg.hpp"
#include "lgv/poly.hpp"
#include "lgv/shapes.hpp"
#include "lgv/verdict.hpp"

#include <set>
#include <string>
#include <vector>

namespace lgv {

inline int jt_entry_index(const Shape& sh, int i, int j) {
    return sh.lambda().part(j) - sh.mu().part(i) - j + i;
}

// Entry (i,j) = h_{lambda_j - mu_i - j + i}(x_1..x_n); rows follow mu,
// columns follow lambda.
inline RingMatrix<MultiPoly> jt_matrix(const Shape& sh, int n) {
    if (!sh.normalized()) throw Error("jt_matrix: shape must be shift-normalized");
    const int m = sh.length();
    RingMatrix<MultiPoly> a(m, m);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            a.at(i, j) = complete_homogeneous(jt_entry_index(sh, i, j), 1, n);
    return a;
}

// General h-matrix for a semipartition pair that need not share tails
// (arises from unbalanced row/column deletions); entry differences are
// shift-invariant so no normalization is needed.
inline RingMatrix<MultiPoly> jt_matrix_pair(const Semipartition& lambda, const Semipartition& mu,
                                            int rows, int cols, int n) {
    RingMatrix<MultiPoly> a(rows, cols);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j)
            a.at(i, j) = complete_homogeneous(lambda.part(j) - mu.part(i) - j + i, 1, n);
    return a;
}

// Deleting rows of the h-matrix deletes parts of mu, deleting columns
// deletes parts of lambda; verified entry by entry.
inline Verdict check_minor_deletion(const Shape& sh, int n, const std::vector<int>& rowdel,
                                    const std::vector<int>& coldel) {
    const std::string params =
        "shape=" + sh.str() + " n=" + std::to_string(n) + " rows-deleted=" + std::to_string(rowdel.size()) +
        " cols-deleted=" + std::to_string(coldel.size());
    const int m = sh.length();
    const RingMatrix<MultiPoly> lhs = delete_rowcols(jt_matrix(sh, n), rowdel, coldel);
    const Semipartition lam = delete_parts(sh.lambda(), coldel);
    const Semipartition mu = delete_parts(sh.mu(), rowdel);
    const RingMatrix<MultiPoly> rhs = jt_matrix_pair(
        lam, mu, m - static_cast<int>(rowdel.size()), m - static_cast<int>(coldel.size()), n);
    if (lhs == rhs) return Verdict::passed("minor-deletion", params, Route::GenericSymbolic);
    for (int i = 1; i <= lhs.rows(); ++i)
        for (int j = 1; j <= lhs.cols(); ++j)
            if (!(lhs.at(i, j) == rhs.at(i, j)))
                return Verdict::failed("minor-deletion", params, Route::GenericSymbolic,
                                       "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                           "): minor gives " + lhs.at(i, j).str() + ", deletion gives " +
                                           rhs.at(i, j).str());
    return Verdict::failed("minor-deletion", params, Route::GenericSymbolic, "dimension mismatch");
}

// lambda_j = (m - j + 1) * m; all h-indices of the square matrix are
// pairwise distinct, which is asserted rather than trusted.
inline Partition distinct_entry_partition(int m) {
    if (m < 1) throw Error("distinct_entry_partition: m must be >= 1");
    std::vector<int> parts;
    for (int j = 1; j <= m; ++j) parts.push_back((m - j + 1) * m);
    Partition lambda = partition(std::move(parts));
    const Shape sh = Shape::straight(lambda);
    std::set<int> indices;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (!indices.insert(jt_entry_index(sh, i, j)).second)
                throw Error("distinct_entry_partition: repeated h-index");
    return lambda;
}

// Replace h_r by the generic variable y_r (h_0 stays 1, negative indices
// stay 0). Requires the positive indices to be pairwise distinct.
inline RingMatrix<MultiPoly> genericize(const Shape& sh) {
    if (!sh.normalized()) throw Error("genericize: shape must be shift-normalized");
    const int m = sh.length();
    RingMatrix<MultiPoly> a(m, m);
    std::set<int> used;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            const int r = jt_entry_index(sh, i, j);
            if (r < 0) continue;  // zero entry
            if (r == 0) {
                a.at(i, j) = MultiPoly(1);
                continue;
            }
            if (!used.insert(r).second)
                throw Error("genericize: duplicate h-index " + std::to_string(r));
            a.at(i, j) = MultiPoly::variable(VarId::y(r));
        }
    return a;
}

}  // namespace lgv
