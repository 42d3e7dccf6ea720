#pragma once

// Semipartitions (eventually-constant weakly decreasing integer sequences),
// partitions, and skew shapes, together with the part-deletion and shift
// calculus that mirrors row/column selection in h-matrices.

#include "lgv/base.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace lgv {

// Stored as a finite head plus the eventual constant tail; entries of the
// head are strictly greater than the tail after normalization.
class Semipartition {
public:
    Semipartition() = default;

    Semipartition(std::vector<int> head, int tail = 0) : head_(std::move(head)), tail_(tail) {
        for (std::size_t i = 0; i + 1 < head_.size(); ++i)
            if (head_[i] < head_[i + 1]) throw Error("semipartition: not weakly decreasing");
        if (!head_.empty() && head_.back() < tail_)
            throw Error("semipartition: head entry below tail");
        while (!head_.empty() && head_.back() == tail_) head_.pop_back();
    }

    int tail() const { return tail_; }
    int length() const { return static_cast<int>(head_.size()); }
    const std::vector<int>& head() const { return head_; }

    // 1-based access; indices past the head read the tail.
    int part(int i) const {
        if (i < 1) throw Error("semipartition: part index must be >= 1");
        return i <= length() ? head_[static_cast<std::size_t>(i) - 1] : tail_;
    }

    bool operator==(const Semipartition& o) const = default;

    std::string str() const {
        std::ostringstream out;
        for (std::size_t i = 0; i < head_.size(); ++i) {
            if (i) out << ",";
            out << head_[i];
        }
        if (head_.empty()) out << tail_;  // still prints something parseable
        if (tail_ != 0) out << "@" << tail_;
        return out.str();
    }

private:
    std::vector<int> head_;
    int tail_ = 0;
};

using Partition = Semipartition;  // tail 0, all parts >= 0

inline bool is_partition(const Semipartition& s) {
    return s.tail() == 0 && (s.length() == 0 || s.part(s.length()) >= 0);
}

inline Semipartition partition(std::vector<int> parts) {
    Semipartition s(std::move(parts), 0);
    if (!is_partition(s)) throw Error("not a partition");
    return s;
}

inline int constexpr kAllParts = std::numeric_limits<int>::max();

// Component-wise addition of the constant semipartition z^m (all parts when
// m == kAllParts, in which case the tail moves too).
inline Semipartition add_const(const Semipartition& s, int z, int m = kAllParts) {
    if (m == kAllParts) {
        std::vector<int> head = s.head();
        for (int& v : head) v += z;
        return Semipartition(std::move(head), s.tail() + z);
    }
    if (m < 0) throw Error("add_const: negative part count");
    std::vector<int> head;
    const int n = std::max(s.length(), m);
    head.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) head.push_back(s.part(i) + (i <= m ? z : 0));
    return Semipartition(std::move(head), s.tail());
}

// Delete part k: (l_1,...,l_{k-1}, l_{k+1}-1, l_{k+2}-1, ...). Total on
// semipartitions; the tail drops by one and the length becomes
// max(length, k) - 1.
inline Semipartition delete_part(const Semipartition& s, int k) {
    if (k < 1) throw Error("delete_part: index must be >= 1");
    const int n = std::max(s.length(), k);
    std::vector<int> head;
    head.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i < k; ++i) head.push_back(s.part(i));
    for (int i = k + 1; i <= n + 1; ++i) head.push_back(s.part(i) - 1);
    return Semipartition(std::move(head), s.tail() - 1);
}

// Iterated deletion, folded right to left: the largest index is deleted
// first, against the original numbering.
inline Semipartition delete_parts(const Semipartition& s, std::vector<int> ks) {
    for (std::size_t i = 0; i + 1 < ks.size(); ++i)
        if (ks[i] >= ks[i + 1]) throw Error("delete_parts: indices must be strictly increasing");
    Semipartition r = s;
    for (auto it = ks.rbegin(); it != ks.rend(); ++it) r = delete_part(r, *it);
    return r;
}

// True iff mu_i <= lambda_i for all i and the tails agree.
inline bool contains(const Semipartition& mu, const Semipartition& lambda) {
    if (mu.tail() != lambda.tail()) return false;
    const int n = std::max(mu.length(), lambda.length());
    for (int i = 1; i <= n; ++i)
        if (mu.part(i) > lambda.part(i)) return false;
    return true;
}

struct Cell {
    int row;
    int col;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

class Shape {
public:
    Shape() = default;

    Shape(Semipartition lambda, Semipartition mu) : lambda_(std::move(lambda)), mu_(std::move(mu)) {
        if (!contains(mu_, lambda_)) throw Error("shape: mu must be contained in lambda");
    }

    static Shape straight(Semipartition lambda) {
        Semipartition mu({}, lambda.tail());
        return Shape(std::move(lambda), std::move(mu));
    }

    const Semipartition& lambda() const { return lambda_; }
    const Semipartition& mu() const { return mu_; }
    int length() const { return lambda_.length(); }
    int tail() const { return lambda_.tail(); }
    bool normalized() const { return tail() == 0; }

    long long weight() const {
        long long w = 0;
        for (int i = 1; i <= length(); ++i) w += lambda_.part(i) - mu_.part(i);
        return w;
    }

    bool operator==(const Shape& o) const = default;

    std::string str() const {
        auto side = [this](const Semipartition& s) {
            std::string out;
            for (int i = 1; i <= s.length(); ++i) {
                if (i > 1) out += ",";
                out += std::to_string(s.part(i));
            }
            return out.empty() ? std::to_string(tail()) : out;
        };
        std::string s = side(lambda_) + "/" + side(mu_);
        if (tail() != 0) s += "@" + std::to_string(tail());
        return s;
    }

private:
    Semipartition lambda_;
    Semipartition mu_;
};

// Canonical representative with tail 0; the Ferrers diagram is unchanged.
inline Shape shift_normalize(const Shape& sh) {
    const int t = sh.tail();
    if (t == 0) return sh;
    return Shape(add_const(sh.lambda(), -t), add_const(sh.mu(), -t));
}

// Cells of the skew diagram: row i contributes columns mu_i+1 .. lambda_i of
// the normalized representative (shift invariant by construction).
inline std::vector<Cell> ferrers_cells(const Shape& sh) {
    const Shape s = shift_normalize(sh);
    std::vector<Cell> cells;
    for (int i = 1; i <= s.length(); ++i)
        for (int c = s.mu().part(i) + 1; c <= s.lambda().part(i); ++c)
            cells.push_back(Cell{i, c});
    return cells;
}

// Text form "l1,l2,.../m1,m2,...@tail". The mu side and the tail are
// optional; "2,1", "2,1/1", "6,4,2,2/0@-1" all parse.
inline Shape parse_shape(const std::string& text) {
    auto parse_side = [](const std::string& side, int tail) -> Semipartition {
        std::vector<int> parts;
        std::string token;
        std::istringstream in(side);
        while (std::getline(in, token, ',')) {
            if (token.empty()) continue;
            parts.push_back(std::stoi(token));
        }
        return Semipartition(std::move(parts), tail);
    };
    std::string body = text;
    int tail = 0;
    if (auto at = body.find('@'); at != std::string::npos) {
        tail = std::stoi(body.substr(at + 1));
        body = body.substr(0, at);
    }
    std::string lam = body, mu;
    if (auto slash = body.find('/'); slash != std::string::npos) {
        lam = body.substr(0, slash);
        mu = body.substr(slash + 1);
    }
    Semipartition l = parse_side(lam, tail);
    Semipartition m = mu.empty() ? Semipartition({}, tail) : parse_side(mu, tail);
    return Shape(std::move(l), std::move(m));
}

}  // namespace lgv
