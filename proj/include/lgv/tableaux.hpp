#pragma once

// Semistandard skew Young tableaux: enumeration, weights, and the
// tableau-sum route to skew Schur polynomials. The bialternant quotient
// gives an independent evaluation route for straight shapes.

#include "lgv/base.hpp"
#include "lgv/linalg.hpp"
#include "lgv/poly.hpp"
#include "lgv/shapes.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace lgv {

struct Tableau {
    Shape shape;                        // shift-normalized
    std::vector<std::vector<int>> rows; // row i holds columns mu_i+1 .. lambda_i
    int n = 0;                          // entries drawn from 1..n
};

inline bool tableau_valid(const Tableau& t) {
    const Shape& sh = t.shape;
    if (!sh.normalized()) return false;
    if (static_cast<int>(t.rows.size()) != sh.length()) return false;
    for (int i = 1; i <= sh.length(); ++i) {
        const auto& row = t.rows[static_cast<std::size_t>(i) - 1];
        const int lam = sh.lambda().part(i), mu = sh.mu().part(i);
        if (static_cast<int>(row.size()) != lam - mu) return false;
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (row[k] < 1 || row[k] > t.n) return false;
            if (k > 0 && row[k] < row[k - 1]) return false;  // weak increase in rows
        }
    }
    // Strict increase down columns, checked on the overlap of consecutive rows.
    for (int i = 1; i < sh.length(); ++i) {
        const int mu_hi = sh.mu().part(i), lam_lo = sh.lambda().part(i + 1);
        for (int c = mu_hi + 1; c <= lam_lo; ++c) {
            const int upper = t.rows[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(c - sh.mu().part(i)) - 1];
            const int lower = t.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c - sh.mu().part(i + 1)) - 1];
            if (lower <= upper) return false;
        }
    }
    return true;
}

// Visits every tableau exactly once, in row-major backtracking order with
// the smallest admissible entry first. The visitor may return false to
// stop early. Returns false iff the walk was stopped.
inline bool for_each_ssyt(const Shape& sh, int n,
                          const std::function<bool(const Tableau&)>& visit,
                          long long max_tableaux = -1) {
    if (!sh.normalized()) throw Error("for_each_ssyt: shape must be shift-normalized");
    if (n < 1) throw Error("for_each_ssyt: entry bound must be >= 1");
    const int m = sh.length();
    Tableau t;
    t.shape = sh;
    t.n = n;
    t.rows.resize(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i)
        t.rows[static_cast<std::size_t>(i) - 1].assign(
            static_cast<std::size_t>(sh.lambda().part(i) - sh.mu().part(i)), 0);

    long long seen = 0;
    // Cell (row i, column c) must exceed the entry directly above and be at
    // least the entry to its left.
    auto fill = [&](auto&& self, int i, int k) -> bool {  // k: 0-based index in row i
        if (i > m) {
            ++seen;
            if (max_tableaux >= 0 && seen > max_tableaux)
                throw BudgetExceeded("tableau enumeration budget exceeded", max_tableaux);
            return visit(t);
        }
        auto& row = t.rows[static_cast<std::size_t>(i) - 1];
        if (k >= static_cast<int>(row.size())) return self(self, i + 1, 0);
        const int col = sh.mu().part(i) + 1 + k;
        int lo = 1;
        if (k > 0) lo = std::max(lo, row[static_cast<std::size_t>(k) - 1]);
        if (i > 1) {
            const int mu_up = sh.mu().part(i - 1), lam_up = sh.lambda().part(i - 1);
            if (col > mu_up && col <= lam_up)
                lo = std::max(lo, t.rows[static_cast<std::size_t>(i) - 2][static_cast<std::size_t>(col - mu_up) - 1] + 1);
        }
        for (int v = lo; v <= n; ++v) {
            row[static_cast<std::size_t>(k)] = v;
            if (!self(self, i, k + 1)) return false;
        }
        row[static_cast<std::size_t>(k)] = 0;
        return true;
    };
    return fill(fill, 1, 0);
}

inline std::vector<Tableau> enumerate_ssyt(const Shape& sh, int n, long long max_tableaux = -1) {
    std::vector<Tableau> out;
    for_each_ssyt(sh, n, [&](const Tableau& t) {
        out.push_back(t);
        return true;
    }, max_tableaux);
    return out;
}

inline long long count_ssyt(const Shape& sh, int n, long long max_tableaux = -1) {
    long long c = 0;
    for_each_ssyt(sh, n, [&](const Tableau&) {
        ++c;
        return true;
    }, max_tableaux);
    return c;
}

// prod_k x_k^{#entries k}; degree equals the weight of the shape.
inline Monomial tableau_weight(const Tableau& t) {
    std::map<int, int> counts;
    for (const auto& row : t.rows)
        for (int v : row) ++counts[v];
    Monomial m;
    for (const auto& [level, count] : counts) m = m * Monomial::var(VarId::x(level), count);
    return m;
}

// Tableau-sum route: s_{lambda/mu}(x_1..x_n) as the generating function of
// all n-semistandard tableaux of the shape.
inline MultiPoly skew_schur(const Shape& sh, int n, long long max_tableaux = -1) {
    MultiPoly sum;
    for_each_ssyt(sh, n, [&](const Tableau& t) {
        sum.add_term(tableau_weight(t), 1);
        return true;
    }, max_tableaux);
    return sum;
}

// Quotient-of-alternants route, evaluated exactly at an integer point with
// pairwise distinct coordinates: det(x_i^{lambda_j + n - j}) / det(x_i^{n - j}).
inline BigRational bialternant_eval(const Partition& lambda, const std::vector<BigInt>& point) {
    if (!is_partition(lambda)) throw Error("bialternant_eval: not a partition");
    const int n = static_cast<int>(point.size());
    if (n < 1) throw Error("bialternant_eval: empty point");
    if (lambda.length() > n) return BigRational(0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (point[static_cast<std::size_t>(i)] == point[static_cast<std::size_t>(j)])
                throw Error("bialternant_eval: coordinates must be pairwise distinct");
    auto power_matrix = [&](const std::vector<int>& exps) {
        RingMatrix<BigInt> a(n, n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                BigInt p = 1;
                for (int e = 0; e < exps[static_cast<std::size_t>(j) - 1]; ++e)
                    p *= point[static_cast<std::size_t>(i) - 1];
                a.at(i, j) = p;
            }
        return a;
    };
    std::vector<int> num_exps, den_exps;
    for (int j = 1; j <= n; ++j) {
        num_exps.push_back(lambda.part(j) + n - j);
        den_exps.push_back(n - j);
    }
    const BigInt num = det_bareiss(power_matrix(num_exps));
    const BigInt den = det_bareiss(power_matrix(den_exps));
    return BigRational(num) / BigRational(den);
}

// Printable matrix-of-entries layout; skipped cells are drawn as dots.
inline std::string tableau_layout(const Tableau& t) {
    std::string out;
    for (int i = 1; i <= t.shape.length(); ++i) {
        const int mu = t.shape.mu().part(i);
        std::string line;
        for (int c = 0; c < mu; ++c) line += " .";
        for (int v : t.rows[static_cast<std::size_t>(i) - 1]) line += " " + std::to_string(v);
        out += line.empty() ? "" : line.substr(1);
        out += "\n";
    }
    return out;
}

}  // namespace lgv
