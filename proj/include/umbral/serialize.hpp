#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "identities.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "series.hpp"
#include "sheffer.hpp"

// JSON encodings: rationals as "p/q" strings, polynomials as coefficient
// lists lowest power first, series as {order, coeffs}.

namespace umbral {

template <class Json>
void to_json(Json& j, const Rational& q) {
    j = q.to_string();
}

template <class Json>
void from_json(const Json& j, Rational& q) {
    q = Rational::parse(j.template get<std::string>());
}

template <class Json, class R>
void to_json(Json& j, const Polynomial<R>& p) {
    j = Json::array();
    for (const auto& c : p.coeffs()) j.push_back(c);
}

template <class Json, class R>
void from_json(const Json& j, Polynomial<R>& p) {
    p = Polynomial<R>(j.template get<std::vector<R>>());
}

template <class Json, class R>
void to_json(Json& j, const TruncatedSeries<R>& s) {
    j = Json{{"order", s.order()}, {"coeffs", s.coeffs()}};
}

template <class Json, class R>
void from_json(const Json& j, TruncatedSeries<R>& s) {
    auto order = j.at("order").template get<std::size_t>();
    auto coeffs = j.at("coeffs").template get<std::vector<R>>();
    if (coeffs.size() != order + 1) throw std::invalid_argument("series JSON: coeffs length must be order + 1");
    s = TruncatedSeries<R>(std::move(coeffs), order);
}

inline nlohmann::ordered_json counterexample_json(const Counterexample& c) {
    nlohmann::ordered_json at = nlohmann::ordered_json::object();
    for (const auto& [name, value] : c.coordinates) at[name] = value;
    return {{"check", c.check}, {"at", at}, {"lhs", c.lhs}, {"rhs", c.rhs}};
}

/// {id, grid, status, counterexample?, failures? (collect-all), checks, elapsed_ms}
inline nlohmann::ordered_json report_json(const VerificationReport& r, bool collect_all = false) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["grid"] = r.grid.empty() ? nlohmann::ordered_json::object() : nlohmann::ordered_json::parse(r.grid);
    j["status"] = r.passed() ? "pass" : "fail";
    if (!r.passed()) j["counterexample"] = counterexample_json(r.failures.front());
    if (collect_all) {
        j["failures"] = nlohmann::ordered_json::array();
        for (const auto& f : r.failures) j["failures"].push_back(counterexample_json(f));
    }
    j["checks"] = r.checks;
    j["elapsed_ms"] = static_cast<long long>(r.elapsed_ms + 0.5);
    return j;
}

}  // namespace umbral
