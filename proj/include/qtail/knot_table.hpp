#pragma once

// Named braid words with their N=2 Jones polynomials, read from a text table.
// Line format: "name | strands: letters | lowest exponent: coefficients";
// '#' starts a comment.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qtail/braid.hpp"
#include "qtail/qlaurent.hpp"

namespace qtail {

struct KnotEntry {
    std::string name;
    BraidWord braid;
    QPoly jones; // whole-power exponents
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

inline QPoly parse_coefficients(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw SyntaxError("expected 'lowest exponent: coefficients'");
    std::int64_t e = 0;
    try {
        e = std::stoll(text.substr(0, colon));
    } catch (const std::exception&) {
        throw SyntaxError("bad exponent in '" + text + "'");
    }
    std::istringstream in(text.substr(colon + 1));
    std::vector<std::pair<std::int64_t, BigInt>> terms;
    std::string tok;
    for (; in >> tok; ++e) {
        try {
            terms.emplace_back(QExp::whole(e).quarters, BigInt(tok));
        } catch (const std::exception&) {
            throw SyntaxError("bad coefficient '" + tok + "'");
        }
    }
    return QPoly::from_terms(std::move(terms));
}

} // namespace detail

inline std::vector<KnotEntry> parse_knot_table(std::istream& in) {
    std::vector<KnotEntry> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = detail::trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        for (std::string f; std::getline(ss, f, '|');) fields.push_back(detail::trim(f));
        if (fields.size() != 3 || fields[0].empty())
            throw SyntaxError("line " + std::to_string(line_no) + ": expected 'name | braid | jones'");
        out.push_back({fields[0], parse_braid(fields[1]), detail::parse_coefficients(fields[2])});
    }
    return out;
}

inline std::vector<KnotEntry> load_knot_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw OutOfRange("cannot open knot table " + path);
    return parse_knot_table(in);
}

inline const KnotEntry& find_knot(const std::vector<KnotEntry>& table, const std::string& name) {
    for (const auto& e : table)
        if (e.name == name) return e;
    throw OutOfRange("unknown knot '" + name + "'");
}

} // namespace qtail
