#pragma once

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qtail/errors.hpp"

namespace qtail {

/// A braid on `strands` strands. Letter +i is sigma_i, -i is sigma_i^{-1};
/// letters are read top to bottom.
struct BraidWord {
    int strands = 1;
    std::vector<int> word;

    bool operator==(const BraidWord&) const = default;
};

inline void validate(const BraidWord& b) {
    if (b.strands < 1) throw RangeError("strand count must be >= 1");
    for (int g : b.word)
        if (g == 0 || std::abs(g) >= b.strands)
            throw RangeError("letter " + std::to_string(g) + " on " + std::to_string(b.strands) + " strands");
}

/// Parses "<strands>: g1 g2 ...".
inline BraidWord parse_braid(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw SyntaxError("expected '<strands>: letters', got '" + std::string(text) + "'");

    auto parse_int = [](std::string_view tok) {
        if (tok.empty()) throw SyntaxError("empty token");
        std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
        if (i == tok.size()) throw SyntaxError("malformed token '" + std::string(tok) + "'");
        for (std::size_t j = i; j < tok.size(); ++j)
            if (tok[j] < '0' || tok[j] > '9') throw SyntaxError("malformed token '" + std::string(tok) + "'");
        if (tok.size() > 9) throw RangeError("token '" + std::string(tok) + "' too large");
        return std::stoi(std::string(tok));
    };

    BraidWord b;
    std::istringstream head{std::string(text.substr(0, colon))};
    std::string tok;
    if (!(head >> tok)) throw SyntaxError("missing strand count");
    b.strands = parse_int(tok);
    if (head >> tok) throw SyntaxError("unexpected token '" + tok + "' before ':'");

    std::istringstream body{std::string(text.substr(colon + 1))};
    while (body >> tok) b.word.push_back(parse_int(tok));
    validate(b);
    return b;
}

inline std::string format_braid(const BraidWord& b) {
    std::string s = std::to_string(b.strands) + ":";
    for (int g : b.word) s += " " + std::to_string(g);
    return s;
}

struct BraidProperties {
    int writhe = 0;
    std::vector<int> permutation; // permutation[i] = bottom position of the strand starting at top position i
    int components = 0;
};

inline BraidProperties braid_props(const BraidWord& b) {
    validate(b);
    BraidProperties p;
    // position[s] tracks where the strand that started at s currently is
    std::vector<int> at(static_cast<std::size_t>(b.strands));
    std::iota(at.begin(), at.end(), 0);
    std::vector<int> who(at); // who[pos] = strand at pos
    for (int g : b.word) {
        p.writhe += g > 0 ? 1 : -1;
        const int i = std::abs(g) - 1;
        std::swap(who[static_cast<std::size_t>(i)], who[static_cast<std::size_t>(i + 1)]);
        at[static_cast<std::size_t>(who[static_cast<std::size_t>(i)])] = i;
        at[static_cast<std::size_t>(who[static_cast<std::size_t>(i + 1)])] = i + 1;
    }
    p.permutation = at;
    std::vector<bool> seen(at.size(), false);
    for (std::size_t s = 0; s < at.size(); ++s) {
        if (seen[s]) continue;
        ++p.components;
        for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(at[x])) seen[x] = true;
    }
    return p;
}

/// (sigma_1 ... sigma_{m-1})^{|p|} in B_m with every letter of sign(p).
inline BraidWord torus_braid(int m, int p) {
    if (m < 2) throw RangeError("torus braid needs m >= 2");
    if (p == 0) throw RangeError("torus braid needs p != 0");
    BraidWord b{m, {}};
    const int s = p > 0 ? 1 : -1;
    for (int r = 0; r < std::abs(p); ++r)
        for (int i = 1; i < m; ++i) b.word.push_back(s * i);
    return b;
}

/// Closure is the connected sum: the last strand of b1 is the first strand of b2.
inline BraidWord connected_sum(const BraidWord& b1, const BraidWord& b2) {
    if (braid_props(b1).components != 1) throw NotAKnot(format_braid(b1));
    if (braid_props(b2).components != 1) throw NotAKnot(format_braid(b2));
    BraidWord r{b1.strands + b2.strands - 1, b1.word};
    const int shift = b1.strands - 1;
    for (int g : b2.word) r.word.push_back(g > 0 ? g + shift : g - shift);
    return r;
}

inline BraidWord mirror_braid(const BraidWord& b) {
    BraidWord r = b;
    for (int& g : r.word) g = -g;
    return r;
}

} // namespace qtail
