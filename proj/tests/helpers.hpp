#pragma once

// Shared test utilities: independent oracles and seeded generators. These
// deliberately avoid the library's own code paths where they serve as a
// reference (brute-force determinants, direct filling enumeration).

#include "lgv/base.hpp"
#include "lgv/linalg.hpp"
#include "lgv/poly.hpp"
#include "lgv/shapes.hpp"

#include <vector>

namespace testutil {

using namespace lgv;

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Random polynomial in x1..x3 with small coefficients; at most `terms`
// monomials of degree at most `deg`.
inline MultiPoly random_poly(Rng& rng, int terms = 4, int deg = 3) {
    MultiPoly p;
    const long long count = rng.uniform(0, terms);
    for (long long t = 0; t < count; ++t) {
        Monomial m;
        const long long d = rng.uniform(0, deg);
        for (long long i = 0; i < d; ++i)
            m = m * Monomial::var(VarId::x(static_cast<int>(rng.uniform(1, 3))));
        p.add_term(m, BigInt(rng.uniform(-5, 5)));
    }
    return p;
}

// All partitions fitting in a rows x cols box (weakly decreasing,
// entries <= cols, at most `rows` parts), the empty partition included.
inline std::vector<std::vector<int>> partitions_in_box(int rows, int cols) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int maxpart) -> void {
        out.push_back(cur);
        if (row == rows) return;
        for (int v = maxpart; v >= 1; --v) {
            cur.push_back(v);
            self(self, row + 1, v);
            cur.pop_back();
        }
    };
    rec(rec, 0, cols);
    return out;
}

// All sub-partitions mu of lambda with |lambda| - |mu| <= max_weight.
inline std::vector<std::vector<int>> subpartitions(const std::vector<int>& lambda,
                                                   long long max_weight) {
    long long total = 0;
    for (int v : lambda) total += v;
    std::vector<std::vector<int>> out;
    std::vector<int> cur(lambda.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, long long sum) -> void {
        if (i == lambda.size()) {
            if (total - sum <= max_weight) {
                std::vector<int> mu;
                for (int v : cur)
                    if (v > 0) mu.push_back(v);
                out.push_back(std::move(mu));
            }
            return;
        }
        const int hi = i == 0 ? lambda[0] : std::min(lambda[i], cur[i - 1]);
        for (int v = 0; v <= hi; ++v) {
            cur[i] = v;
            self(self, i + 1, sum + v);
        }
        cur[i] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

// Reference 3x3 determinant, written out in full.
inline BigInt det3(const RingMatrix<BigInt>& a) {
    return a.at(1, 1) * (a.at(2, 2) * a.at(3, 3) - a.at(2, 3) * a.at(3, 2)) -
           a.at(1, 2) * (a.at(2, 1) * a.at(3, 3) - a.at(2, 3) * a.at(3, 1)) +
           a.at(1, 3) * (a.at(2, 1) * a.at(3, 2) - a.at(2, 2) * a.at(3, 1));
}

}  // namespace testutil
