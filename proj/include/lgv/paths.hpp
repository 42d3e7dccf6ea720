#pragma once

// The lattice-path model on Z^2: unit H/V steps, horizontal steps at height
// k weighted x_k. Tableaux of a shape correspond to nonintersecting path
// tuples between the shape's lower and upper points; the tail-swap
// involution at the lexicographically smallest intersection point cancels
// every intersecting tuple in the determinant expansion.

#include "lgv/base.hpp"
#include "lgv/poly.hpp"
#include "lgv/shapes.hpp"
#include "lgv/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace lgv {

struct Point {
    int x = 0;
    int y = 0;  // level, >= 1 everywhere we walk

    friend bool operator==(const Point&, const Point&) = default;
    // Lexicographic: x first, then level.
    friend bool operator<(const Point& a, const Point& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
};

enum class Step : std::uint8_t { H, V };

class LatticePath {
public:
    LatticePath() = default;
    LatticePath(Point start, std::vector<Step> steps) : start_(start), steps_(std::move(steps)) {}

    // Path with the given horizontal-step heights (weakly increasing),
    // rising from start.y through level n; the k-th H step happens at
    // heights[k].
    static LatticePath from_levels(Point start, const std::vector<int>& heights, int n) {
        std::vector<Step> steps;
        int level = start.y;
        for (int h : heights) {
            if (h < level) throw Error("path levels must be weakly increasing");
            while (level < h) {
                steps.push_back(Step::V);
                ++level;
            }
            steps.push_back(Step::H);
        }
        if (n < level) throw Error("path exceeds the level bound");
        while (level < n) {
            steps.push_back(Step::V);
            ++level;
        }
        return LatticePath(start, std::move(steps));
    }

    const Point& start() const { return start_; }
    const std::vector<Step>& steps() const { return steps_; }

    Point end() const {
        Point p = start_;
        for (Step s : steps_)
            (s == Step::H ? p.x : p.y) += 1;
        return p;
    }

    std::vector<Point> points() const {
        std::vector<Point> pts;
        pts.reserve(steps_.size() + 1);
        Point p = start_;
        pts.push_back(p);
        for (Step s : steps_) {
            (s == Step::H ? p.x : p.y) += 1;
            pts.push_back(p);
        }
        return pts;
    }

    // Heights of the horizontal steps, in order.
    std::vector<int> h_levels() const {
        std::vector<int> hs;
        int level = start_.y;
        for (Step s : steps_) {
            if (s == Step::V) ++level;
            else hs.push_back(level);
        }
        return hs;
    }

    Monomial weight() const {
        std::map<int, int> counts;
        for (int h : h_levels()) ++counts[h];
        Monomial m;
        for (const auto& [level, count] : counts) m = m * Monomial::var(VarId::x(level), count);
        return m;
    }

    bool operator==(const LatticePath&) const = default;

private:
    Point start_;
    std::vector<Step> steps_;
};

// An m-tuple of paths: paths[j] runs from the lower point with index
// perm[j] to the j-th upper point. Sign is the sign of perm.
struct PathTuple {
    std::vector<LatticePath> paths;
    std::vector<int> perm;  // 1-based image: paths[j] starts at lower point perm[j+1]
    int n = 0;

    bool operator==(const PathTuple&) const = default;
};

inline int perm_sign(const std::vector<int>& perm) {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

inline int sign(const PathTuple& t) { return perm_sign(t.perm); }

inline Monomial weight(const PathTuple& t) {
    Monomial m;
    for (const auto& p : t.paths) m = m * p.weight();
    return m;
}

// Lower points (mu_i - i + t, 1) and upper points (lambda_i - i + t, n),
// i = 1..length, counted from the right (index 1 is rightmost).
inline std::pair<std::vector<Point>, std::vector<Point>>
endpoints_for_shape(const Shape& sh, int n, int t = 0) {
    if (!sh.normalized()) throw Error("endpoints_for_shape: shape must be shift-normalized");
    if (n < 1) throw Error("endpoints_for_shape: n must be >= 1");
    std::vector<Point> lower, upper;
    for (int i = 1; i <= sh.length(); ++i) {
        lower.push_back(Point{sh.mu().part(i) - i + t, 1});
        upper.push_back(Point{sh.lambda().part(i) - i + t, n});
    }
    return {lower, upper};
}

// The k-th horizontal step of path i happens at the height of the k-th
// entry in row i; rows of the tableau become paths, rightmost first.
inline PathTuple tableau_to_paths(const Tableau& tab, int t = 0) {
    auto [lower, upper] = endpoints_for_shape(tab.shape, tab.n, t);
    PathTuple out;
    out.n = tab.n;
    for (int i = 1; i <= tab.shape.length(); ++i) {
        out.paths.push_back(LatticePath::from_levels(
            lower[static_cast<std::size_t>(i) - 1], tab.rows[static_cast<std::size_t>(i) - 1], tab.n));
        out.perm.push_back(i);
    }
    return out;
}

inline bool is_nonintersecting(const PathTuple& t) {
    std::set<Point> seen;
    for (const auto& p : t.paths)
        for (const Point& q : p.points())
            if (!seen.insert(q).second) return false;
    return true;
}

inline bool is_identity(const std::vector<int>& perm) {
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != static_cast<int>(i) + 1) return false;
    return true;
}

// Inverse of tableau_to_paths; rejects intersecting tuples and tuples whose
// endpoint permutation is not the identity.
inline Tableau paths_to_tableau(const PathTuple& t, const Shape& sh, int shift = 0) {
    if (!is_identity(t.perm)) throw Error("paths_to_tableau: permutation is not the identity");
    if (!is_nonintersecting(t)) throw Error("paths_to_tableau: tuple is intersecting");
    auto [lower, upper] = endpoints_for_shape(sh, t.n, shift);
    if (static_cast<int>(t.paths.size()) != sh.length())
        throw Error("paths_to_tableau: wrong number of paths");
    Tableau tab;
    tab.shape = sh;
    tab.n = t.n;
    for (std::size_t i = 0; i < t.paths.size(); ++i) {
        if (!(t.paths[i].start() == lower[i]) || !(t.paths[i].end() == upper[i]))
            throw Error("paths_to_tableau: endpoints do not match the shape");
        tab.rows.push_back(t.paths[i].h_levels());
    }
    if (!tableau_valid(tab)) throw Error("paths_to_tableau: result is not semistandard");
    return tab;
}

// All intersection points (points shared by at least two paths), sorted.
inline std::vector<Point> intersection_points(const PathTuple& t) {
    std::map<Point, int> count;
    for (const auto& p : t.paths) {
        const auto pts = p.points();
        const std::set<Point> mine(pts.begin(), pts.end());
        for (const Point& q : mine) ++count[q];
    }
    std::vector<Point> out;
    for (const auto& [q, c] : count)
        if (c >= 2) out.push_back(q);
    return out;
}

// The tail-swap involution: exchanges the initial segments (lower point up
// to q) of the two paths through the lexicographically smallest
// intersection point q. Weight-preserving, sign-reversing, self-inverse.
inline PathTuple lgv_involution(const PathTuple& t) {
    const auto pts = intersection_points(t);
    if (pts.empty()) throw Error("lgv_involution: tuple is nonintersecting");
    const Point q = pts.front();

    std::vector<std::size_t> through;
    for (std::size_t i = 0; i < t.paths.size(); ++i) {
        const auto pp = t.paths[i].points();
        if (std::find(pp.begin(), pp.end(), q) != pp.end()) through.push_back(i);
    }
    if (through.size() != 2)
        throw Error("lgv_involution: smallest intersection point must lie on exactly two paths");

    const std::size_t a = through[0], b = through[1];
    auto split_at = [&](const LatticePath& p) -> std::size_t {
        const auto pp = p.points();
        return static_cast<std::size_t>(std::find(pp.begin(), pp.end(), q) - pp.begin());
    };
    const std::size_t ka = split_at(t.paths[a]), kb = split_at(t.paths[b]);

    auto splice = [&](const LatticePath& head_of, std::size_t k_head, const LatticePath& tail_of,
                      std::size_t k_tail) {
        std::vector<Step> steps(head_of.steps().begin(), head_of.steps().begin() + static_cast<long>(k_head));
        steps.insert(steps.end(), tail_of.steps().begin() + static_cast<long>(k_tail), tail_of.steps().end());
        return LatticePath(head_of.start(), std::move(steps));
    };

    PathTuple out = t;
    out.paths[a] = splice(t.paths[b], kb, t.paths[a], ka);
    out.paths[b] = splice(t.paths[a], ka, t.paths[b], kb);
    std::swap(out.perm[a], out.perm[b]);
    return out;
}

// Generating function of single paths from v to w: h_{dx}(x_{v.y},...,x_{w.y}).
inline MultiPoly gf_paths(Point v, Point w) {
    const int dx = w.x - v.x;
    if (dx < 0 || w.y < v.y) return MultiPoly{};
    return complete_homogeneous(dx, v.y, w.y);
}

// Visits every element of the full signed expansion set for the shape:
// all endpoint permutations, all path choices. The visitor may return
// false to stop.
inline void for_each_signed_tuple(const Shape& sh, int n,
                                  const std::function<bool(const PathTuple&)>& visit,
                                  long long max_tuples = -1, int t = 0) {
    auto [lower, upper] = endpoints_for_shape(sh, n, t);
    const int m = sh.length();
    std::vector<int> perm(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i + 1;

    long long seen = 0;
    bool stopped = false;
    std::sort(perm.begin(), perm.end());
    do {
        PathTuple tuple;
        tuple.n = n;
        tuple.perm = perm;
        tuple.paths.assign(static_cast<std::size_t>(m), LatticePath{});
        // Recursively choose the level sequence of each path.
        auto rec = [&](auto&& self, int j) -> bool {  // j: 0-based path index
            if (j == m) {
                ++seen;
                if (max_tuples >= 0 && seen > max_tuples)
                    throw BudgetExceeded("tuple enumeration budget exceeded", max_tuples);
                return visit(tuple);
            }
            const Point from = lower[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)]) - 1];
            const Point to = upper[static_cast<std::size_t>(j)];
            const int dx = to.x - from.x;
            if (dx < 0) return true;  // no path; skip this branch
            std::vector<int> heights(static_cast<std::size_t>(dx), 0);
            auto levels = [&](auto&& inner, int k, int lo) -> bool {
                if (k == dx) {
                    tuple.paths[static_cast<std::size_t>(j)] = LatticePath::from_levels(from, heights, n);
                    return self(self, j + 1);
                }
                for (int h = lo; h <= n; ++h) {
                    heights[static_cast<std::size_t>(k)] = h;
                    if (!inner(inner, k + 1, h)) return false;
                }
                return true;
            };
            return levels(levels, 0, from.y);
        };
        if (!rec(rec, 0)) {
            stopped = true;
            break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    (void)stopped;
}

// Sum of sign * weight over the full expansion set; equals the skew Schur
// polynomial after all intersecting tuples cancel.
inline MultiPoly signed_tuple_sum(const Shape& sh, int n, long long max_tuples = -1) {
    MultiPoly sum;
    for_each_signed_tuple(sh, n, [&](const PathTuple& t) {
        sum.add_term(weight(t), sign(t));
        return true;
    }, max_tuples);
    return sum;
}

// Seeded random tuple for the shape with a uniformly random admissible
// endpoint permutation; returns an intersecting tuple (retrying as needed)
// or throws after too many attempts.
inline PathTuple random_intersecting_tuple(const Shape& sh, int n, Rng& rng, int max_attempts = 1000) {
    auto [lower, upper] = endpoints_for_shape(sh, n);
    const int m = sh.length();
    if (m < 2) throw Error("random_intersecting_tuple: need at least two paths");
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<int> perm = rng.permutation(m);
        bool feasible = true;
        for (int j = 0; j < m && feasible; ++j)
            if (upper[static_cast<std::size_t>(j)].x < lower[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)]) - 1].x)
                feasible = false;
        if (!feasible) continue;
        PathTuple t;
        t.n = n;
        t.perm = perm;
        for (int j = 0; j < m; ++j) {
            const Point from = lower[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)]) - 1];
            const Point to = upper[static_cast<std::size_t>(j)];
            std::vector<int> heights(static_cast<std::size_t>(to.x - from.x));
            for (int& h : heights) h = static_cast<int>(rng.uniform(1, n));
            std::sort(heights.begin(), heights.end());
            t.paths.push_back(LatticePath::from_levels(from, heights, n));
        }
        if (!is_nonintersecting(t)) return t;
    }
    throw Error("random_intersecting_tuple: no intersecting tuple found");
}

}  // namespace lgv
