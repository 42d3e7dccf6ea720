#pragma once

// Shared basics: exact integer types, error types, enumeration budgets and
// the seeded RNG used by all randomized checks.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgv {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an enumeration would exceed its configured budget.
struct BudgetExceeded : Error {
    BudgetExceeded(const std::string& what, long long limit)
        : Error(what + " (limit " + std::to_string(limit) + ")"), limit(limit) {}
    long long limit;
};

struct Budget {
    long long max_tableaux = 2'000'000;
    long long max_tuples = 2'000'000;
    long long max_overlays = 2'000'000;
};

// Deterministic RNG wrapper. mt19937_64 is fully specified by the standard,
// and uniform values are drawn by rejection sampling rather than through
// std::uniform_int_distribution, so identical seeds replay identically on
// every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [lo, hi], inclusive.
    long long uniform(long long lo, long long hi) {
        if (lo > hi) throw Error("Rng::uniform: empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<long long>(next());  // full 64-bit range
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return lo + static_cast<long long>(v % span);
    }

    // Sorted k-subset of {1,...,n}.
    std::vector<int> subset(int n, int k) {
        if (k < 0 || k > n) throw Error("Rng::subset: bad size");
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i) pool[i] = i + 1;
        for (int i = 0; i < k; ++i) {
            const int j = static_cast<int>(uniform(i, n - 1));
            std::swap(pool[i], pool[j]);
        }
        std::vector<int> out(pool.begin(), pool.begin() + k);
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<int> permutation(int n) {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = i + 1;
        for (int i = n - 1; i > 0; --i) {
            const int j = static_cast<int>(uniform(0, i));
            std::swap(p[i], p[j]);
        }
        return p;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace lgv
