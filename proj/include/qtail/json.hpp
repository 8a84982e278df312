#pragma once

// JSON forms:
//   QPoly           {"variable":"q","terms":[[e,"c"],...]}  e in quarter units, ascending
//   TruncatedSeries {"order":n,"poly":<QPoly>}
//   TailReport      {"colors":[...],"agreement":[...],"stabilized":<TruncatedSeries>,"status":"..."}
// TailReport prefixes are not serialized; a parsed report has none.

#include <string>

#include <json.hpp>

#include "qtail/qlaurent.hpp"
#include "qtail/series.hpp"
#include "qtail/tails.hpp"

namespace qtail {

inline void to_json(nlohmann::json& j, const QPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : p.terms()) terms.push_back({t.exp, t.coeff.str()});
    j = {{"variable", "q"}, {"terms", std::move(terms)}};
}

inline void from_json(const nlohmann::json& j, QPoly& p) {
    if (!j.is_object() || j.value("variable", "") != "q") throw SyntaxError("QPoly JSON needs \"variable\": \"q\"");
    const auto& terms = j.at("terms");
    if (!terms.is_array()) throw SyntaxError("QPoly JSON \"terms\" must be an array");
    std::vector<std::pair<std::int64_t, BigInt>> raw;
    for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string())
            throw SyntaxError("QPoly term must be [exponent, \"coefficient\"]");
        const auto e = t[0].get<std::int64_t>();
        if (!raw.empty() && raw.back().first >= e) throw SyntaxError("QPoly terms must ascend strictly");
        BigInt c;
        try {
            c = BigInt(t[1].get<std::string>());
        } catch (const std::exception&) {
            throw SyntaxError("bad coefficient '" + t[1].get<std::string>() + "'");
        }
        if (c == 0) throw SyntaxError("QPoly terms may not be zero");
        raw.emplace_back(e, std::move(c));
    }
    p = QPoly::from_terms(std::move(raw));
}

inline void to_json(nlohmann::json& j, const TruncatedSeries& s) { j = {{"order", s.order()}, {"poly", s.poly()}}; }

inline void from_json(const nlohmann::json& j, TruncatedSeries& s) {
    s = TruncatedSeries(j.at("poly").get<QPoly>(), j.at("order").get<int>());
}

inline void to_json(nlohmann::json& j, const TailReport& r) {
    j = {{"colors", r.colors}, {"agreement", r.agreement}, {"stabilized", r.stabilized}, {"status", to_string(r.status)}};
}

inline void from_json(const nlohmann::json& j, TailReport& r) {
    r = TailReport{};
    r.colors = j.at("colors").get<std::vector<int>>();
    r.agreement = j.at("agreement").get<std::vector<int>>();
    r.stabilized = j.at("stabilized").get<TruncatedSeries>();
    r.status = tail_status_from_string(j.at("status").get<std::string>());
}

} // namespace qtail
