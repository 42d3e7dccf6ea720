#pragma once

// JSON forms of verdicts, matrices and reports (schema "lgv/1", see
// schema/ in the repository root). Key order comes from nlohmann's
// object map, so identical inputs serialize to identical bytes.

#include "lgv/linalg.hpp"
#include "lgv/verdict.hpp"

#include <json.hpp>

#include <string>

namespace lgv {

using Json = nlohmann::json;

// Row-major; entries become JSON numbers when they fit, strings otherwise.
inline Json matrix_to_json(const RingMatrix<BigInt>& a) {
    Json rows = Json::array();
    for (int i = 1; i <= a.rows(); ++i) {
        Json row = Json::array();
        for (int j = 1; j <= a.cols(); ++j) {
            const BigInt& v = a.at(i, j);
            if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
                row.push_back(static_cast<long long>(v));
            else
                row.push_back(v.str());
        }
        rows.push_back(std::move(row));
    }
    return Json{{"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(rows)}};
}

inline RingMatrix<BigInt> matrix_from_json(const Json& j) {
    RingMatrix<BigInt> a(j.at("rows").get<int>(), j.at("cols").get<int>());
    const Json& entries = j.at("entries");
    for (int i = 1; i <= a.rows(); ++i)
        for (int c = 1; c <= a.cols(); ++c) {
            const Json& v = entries.at(static_cast<std::size_t>(i - 1)).at(static_cast<std::size_t>(c - 1));
            a.at(i, c) = v.is_string() ? BigInt(v.get<std::string>()) : BigInt(v.get<long long>());
        }
    return a;
}

inline Json verdict_to_json(const Verdict& v) {
    Json j{{"schema", "lgv-verdict/1"},
           {"identity", v.identity},
           {"params", v.params},
           {"route", route_name(v.route)},
           {"trials", v.trials},
           {"seed", v.seed},
           {"status", v.pass ? "pass" : "fail"}};
    j["counterexample"] = v.counterexample ? Json(*v.counterexample) : Json(nullptr);
    j["notes"] = v.notes;
    return j;
}

}  // namespace lgv
