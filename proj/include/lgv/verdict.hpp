#pragma once

// Verdict: the result record shared by all identity checks. A failing
// verdict always carries enough detail to replay from its seed.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lgv {

enum class Route { GenericSymbolic, SchurSymbolic, IntegerFuzz };

inline const char* route_name(Route r) {
    switch (r) {
        case Route::GenericSymbolic: return "generic-symbolic";
        case Route::SchurSymbolic: return "schur-symbolic";
        case Route::IntegerFuzz: return "integer-fuzz";
    }
    return "?";
}

struct Verdict {
    std::string identity;
    std::string params;  // human-readable parameter summary
    Route route = Route::GenericSymbolic;
    long long trials = 0;  // 0 for purely symbolic checks
    bool pass = false;
    std::uint64_t seed = 0;
    std::optional<std::string> counterexample;  // present iff !pass
    std::vector<std::string> notes;

    static Verdict passed(std::string identity, std::string params, Route route,
                          long long trials = 0, std::uint64_t seed = 0) {
        Verdict v;
        v.identity = std::move(identity);
        v.params = std::move(params);
        v.route = route;
        v.trials = trials;
        v.pass = true;
        v.seed = seed;
        return v;
    }

    static Verdict failed(std::string identity, std::string params, Route route,
                          std::string counterexample, long long trials = 0, std::uint64_t seed = 0) {
        Verdict v;
        v.identity = std::move(identity);
        v.params = std::move(params);
        v.route = route;
        v.trials = trials;
        v.pass = false;
        v.seed = seed;
        v.counterexample = std::move(counterexample);
        return v;
    }
};

}  // namespace lgv
