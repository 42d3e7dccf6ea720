#pragma once

// Exact sparse multivariate polynomial ring over arbitrary-precision
// integers. Two disjoint variable families live in one ring:
//
//   * the x-series x_1, x_2, ...      (levels of the lattice, index >= 1)
//   * generic variables y_r and y_{i,j} (independent matrix entries)
//
// Monomials are kept in graded lexicographic order, so polynomial equality
// is plain structural equality and text output is canonical.

#include "lgv/base.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace lgv {

struct VarId {
    enum class Kind : std::uint8_t { X = 0, Y = 1, YPair = 2 };

    Kind kind = Kind::X;
    int a = 0;  // level k for X, label r for Y, row i for YPair
    int b = 0;  // column j for YPair, unused otherwise

    static VarId x(int level) {
        if (level < 1) throw Error("x-series variables require level >= 1");
        return VarId{Kind::X, level, 0};
    }
    static VarId y(int label) { return VarId{Kind::Y, label, 0}; }
    static VarId y(int i, int j) { return VarId{Kind::YPair, i, j}; }

    friend auto operator<=>(const VarId&, const VarId&) = default;

    std::string str() const {
        switch (kind) {
            case Kind::X: return "x" + std::to_string(a);
            case Kind::Y: return "y" + std::to_string(a);
            case Kind::YPair: return "y" + std::to_string(a) + "_" + std::to_string(b);
        }
        return "?";
    }
};

// Exponent map with no zero entries; the empty monomial is 1.
class Monomial {
public:
    Monomial() = default;

    static Monomial var(VarId v, int exp = 1) {
        Monomial m;
        if (exp < 0) throw Error("negative exponent");
        if (exp > 0) m.exps_.emplace_back(v, exp);
        return m;
    }

    int degree() const {
        int d = 0;
        for (const auto& [v, e] : exps_) d += e;
        return d;
    }

    bool is_one() const { return exps_.empty(); }

    int exponent(VarId v) const {
        for (const auto& [w, e] : exps_)
            if (w == v) return e;
        return 0;
    }

    const std::vector<std::pair<VarId, int>>& factors() const { return exps_; }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        r.exps_.reserve(exps_.size() + o.exps_.size());
        auto i = exps_.begin();
        auto j = o.exps_.begin();
        while (i != exps_.end() && j != o.exps_.end()) {
            if (i->first < j->first) r.exps_.push_back(*i++);
            else if (j->first < i->first) r.exps_.push_back(*j++);
            else {
                r.exps_.emplace_back(i->first, i->second + j->second);
                ++i, ++j;
            }
        }
        r.exps_.insert(r.exps_.end(), i, exps_.end());
        r.exps_.insert(r.exps_.end(), j, o.exps_.end());
        return r;
    }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

    // Graded lexicographic: by total degree, then variable by variable in
    // the global order (a higher power of an earlier variable wins).
    bool operator<(const Monomial& o) const {
        const int da = degree(), db = o.degree();
        if (da != db) return da < db;
        auto i = exps_.begin();
        auto j = o.exps_.begin();
        while (i != exps_.end() && j != o.exps_.end()) {
            if (i->first != j->first) return j->first < i->first;
            if (i->second != j->second) return i->second < j->second;
            ++i, ++j;
        }
        return i == exps_.end() && j != o.exps_.end();
    }

    std::string str() const {
        if (exps_.empty()) return "1";
        std::string s;
        for (const auto& [v, e] : exps_) {
            if (!s.empty()) s += "*";
            s += v.str();
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    std::vector<std::pair<VarId, int>> exps_;  // sorted by VarId, exponents > 0
};

class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(BigInt c) {
        if (c != 0) terms_.emplace(Monomial{}, std::move(c));
    }
    explicit MultiPoly(long long c) : MultiPoly(BigInt(c)) {}

    static MultiPoly monomial(Monomial m, BigInt c = 1) {
        MultiPoly p;
        if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }
    static MultiPoly variable(VarId v) { return monomial(Monomial::var(v)); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, BigInt>& terms() const { return terms_; }

    int degree() const {  // -1 for the zero polynomial
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    MultiPoly operator+(const MultiPoly& o) const {
        MultiPoly r = *this;
        r += o;
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const {
        MultiPoly r = *this;
        r -= o;
        return r;
    }
    MultiPoly operator-() const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    MultiPoly operator*(const MultiPoly& o) const {
        MultiPoly r;
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    void add_term(const Monomial& m, const BigInt& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Exact value at an integer point; every variable of the polynomial
    // must be assigned.
    BigInt eval(const std::map<VarId, BigInt>& point) const {
        BigInt total = 0;
        for (const auto& [m, c] : terms_) {
            BigInt v = c;
            for (const auto& [var, exp] : m.factors()) {
                auto it = point.find(var);
                if (it == point.end())
                    throw Error("eval: unassigned variable " + var.str());
                BigInt p = 1;
                for (int e = 0; e < exp; ++e) p *= it->second;
                v *= p;
            }
            total += v;
        }
        return total;
    }

    std::vector<VarId> variables() const {
        std::vector<VarId> vs;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.factors()) vs.push_back(v);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    }

    // Canonical text: terms in descending graded-lex order, explicit signs.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            const BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            if (mag != 1 || m.is_one()) {
                out << mag.str();
                if (!m.is_one()) out << "*";
            }
            if (!m.is_one()) out << m.str();
        }
        return out.str();
    }

private:
    std::map<Monomial, BigInt> terms_;  // no zero coefficients stored
};

inline MultiPoly operator*(const BigInt& c, const MultiPoly& p) {
    return MultiPoly(c) * p;
}

// h_r(x_lo, ..., x_hi): the sum of all monomials of degree r in the given
// x-variables. h_0 = 1 and h_r = 0 for r < 0.
inline MultiPoly complete_homogeneous(int r, int lo, int hi) {
    if (lo < 1 || lo > hi) throw Error("complete_homogeneous: bad level range");
    if (r < 0) return MultiPoly{};
    MultiPoly result;
    // Distribute degree r among levels lo..hi.
    std::vector<int> counts(static_cast<std::size_t>(hi - lo + 1), 0);
    auto rec = [&](auto&& self, int idx, int left) -> void {
        if (idx == static_cast<int>(counts.size()) - 1) {
            counts[idx] = left;
            Monomial m;
            for (std::size_t i = 0; i < counts.size(); ++i)
                if (counts[i] > 0)
                    m = m * Monomial::var(VarId::x(lo + static_cast<int>(i)), counts[i]);
            result.add_term(m, 1);
            return;
        }
        for (int take = 0; take <= left; ++take) {
            counts[idx] = take;
            self(self, idx + 1, left - take);
        }
        counts[idx] = 0;
    };
    rec(rec, 0, r);
    return result;
}

}  // namespace lgv
