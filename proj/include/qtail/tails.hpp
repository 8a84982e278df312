#pragma once

// Head and tail extraction.
//
// The tail is read at the q -> 0 end of canonical(J_N(q)); the head is the
// tail of J_N(1/q), equivalently the tail of the mirror. In the skein variable
// A = q^{-1/4} the two ends trade places, which is why the skein module only
// ever hands out q-polynomials through APoly::to_q().

#include <algorithm>
#include <functional>
#include <future>
#include <string>
#include <vector>

#include "qtail/braid.hpp"
#include "qtail/qlaurent.hpp"
#include "qtail/series.hpp"
#include "qtail/skein.hpp"
#include "qtail/statesum.hpp"
#include "qtail/torus.hpp"

namespace qtail {

/// Something that produces J_N (up to ±q^s) for each color N.
struct JonesSource {
    std::string description;
    std::function<QPoly(int N)> evaluate;
};

inline JonesSource statesum_source(const BraidWord& b, StateSumConfig base = {}) {
    validate(b);
    return {"statesum " + format_braid(b), [b, base](int N) {
                StateSumConfig cfg = base;
                cfg.N = N;
                if (cfg.fixed_label >= N) cfg.fixed_label = 0;
                return jones_statesum(b, cfg);
            }};
}

/// Closure of torus_braid(2, m) through the twist formula.
inline JonesSource skein_source(int m) {
    if (m == 0) throw OutOfRange("skein source needs m != 0");
    return {"skein (2," + std::to_string(m) + ")", [m](int N) { return torus2m_reduced(m, N - 1); }};
}

/// torus_braid(2, p) for odd p, from the Morton sum.
inline JonesSource morton_source(int p) {
    if (p % 2 == 0 || std::abs(p) < 3) throw OutOfRange("morton source needs odd |p| >= 3");
    const int k = (std::abs(p) - 1) / 2;
    return {"morton (2," + std::to_string(p) + ")", [k, p](int N) {
                const QPoly j = morton_2odd(k, N, MortonMode::exact);
                return p < 0 ? j : j.inverted();
            }};
}

/// torus_braid(2, p) for even p, from the Hikami sum.
inline JonesSource hikami_source(int p) {
    if (p % 2 != 0 || p == 0) throw OutOfRange("hikami source needs even p != 0");
    const int k = std::abs(p) / 2;
    return {"hikami (2," + std::to_string(p) + ")", [k, p](int N) {
                const QPoly j = hikami_2even_exact(k, N);
                return p < 0 ? j : j.inverted();
            }};
}

inline JonesSource psi_source(int m, int p) {
    psi_sum(m, p, 1, PsiSide::tail); // argument checks
    return {"psi (" + std::to_string(m) + "," + std::to_string(p) + ")",
            [m, p](int N) { return psi_sum(m, p, N, PsiSide::tail); }};
}

inline JonesSource walk25_source() { return {"walk (2,5)", [](int N) { return walk_25(N); }}; }

enum class TailStatus { stabilized, not_stabilized, split_by_parity };

inline std::string to_string(TailStatus s) {
    switch (s) {
    case TailStatus::stabilized: return "stabilized";
    case TailStatus::not_stabilized: return "not_stabilized";
    case TailStatus::split_by_parity: return "split_by_parity";
    }
    return "?";
}

inline TailStatus tail_status_from_string(const std::string& s) {
    if (s == "stabilized") return TailStatus::stabilized;
    if (s == "not_stabilized") return TailStatus::not_stabilized;
    if (s == "split_by_parity") return TailStatus::split_by_parity;
    throw SyntaxError("unknown tail status '" + s + "'");
}

/// prefixes[i] is the first colors[i] coefficients of canonical J_{colors[i]};
/// agreement[i] compares prefixes i and i+1 and is capped at colors[i].
/// A pair is verified when its depth reaches that cap. `stabilized` is the
/// prefix of the last color, cut to the requested order when every pair is
/// verified and otherwise to the smallest failing depth.
struct TailReport {
    std::vector<int> colors;
    std::vector<TruncatedSeries> prefixes;
    std::vector<int> agreement;
    TruncatedSeries stabilized;
    TailStatus status = TailStatus::not_stabilized;

    bool operator==(const TailReport&) const = default;
};

enum class Side { tail, head };

namespace detail {

inline TruncatedSeries color_prefix(const QPoly& j, int N) {
    const QPoly c = canonical(j).normalized;
    const QPoly low = c.truncated(QExp::whole(N));
    for (const auto& t : low.terms())
        if (t.exp % 4 != 0)
            throw OutOfRange("fractional exponent " + format_exponent(QExp{t.exp}) + " in canonical J_" +
                             std::to_string(N));
    return TruncatedSeries(low, N);
}

inline int agreement_depth(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int cap = std::min(a.order(), b.order());
    const int d = first_mismatch(a, b);
    return d < 0 ? cap : d;
}

inline std::vector<TruncatedSeries> compute_prefixes(const JonesSource& source, const std::vector<int>& colors,
                                                     Side side) {
    const auto policy = worker_count(0) > 1 ? std::launch::async : std::launch::deferred;
    std::vector<std::future<TruncatedSeries>> jobs;
    jobs.reserve(colors.size());
    for (int N : colors)
        jobs.push_back(std::async(policy, [&source, N, side] {
            const QPoly j = source.evaluate(N);
            return color_prefix(side == Side::head ? j.inverted() : j, N);
        }));
    std::vector<TruncatedSeries> out;
    out.reserve(colors.size());
    for (auto& f : jobs) out.push_back(f.get());
    return out;
}

inline bool all_verified(const std::vector<int>& colors, const std::vector<int>& agreement) {
    if (agreement.empty()) return false;
    for (std::size_t i = 0; i < agreement.size(); ++i)
        if (agreement[i] < std::min(colors[i], colors[i + 1])) return false;
    return true;
}

inline TailReport assemble(std::vector<int> colors, std::vector<TruncatedSeries> prefixes, int order) {
    TailReport r;
    r.colors = std::move(colors);
    r.prefixes = std::move(prefixes);
    for (std::size_t i = 0; i + 1 < r.prefixes.size(); ++i)
        r.agreement.push_back(agreement_depth(r.prefixes[i], r.prefixes[i + 1]));
    const TruncatedSeries& last = r.prefixes.back();
    if (all_verified(r.colors, r.agreement)) {
        r.status = TailStatus::stabilized;
        r.stabilized = last.truncated(order);
    } else {
        int depth = order;
        for (std::size_t i = 0; i < r.agreement.size(); ++i)
            if (r.agreement[i] < std::min(r.colors[i], r.colors[i + 1])) depth = std::min(depth, r.agreement[i]);
        r.stabilized = last.truncated(std::max(1, depth));
    }
    return r;
}

inline std::vector<int> color_range(int from, int to, int step) {
    std::vector<int> c;
    for (int N = from; N <= to; N += step) c.push_back(N);
    return c;
}

inline void check_args(int n_max, int order) {
    if (n_max < 1) throw OutOfRange("N_max must be >= 1");
    if (order < 1) throw OutOfRange("order must be >= 1");
}

inline TailReport extract(const JonesSource& source, int n_max, int order, Side side) {
    check_args(n_max, order);
    std::vector<int> colors = color_range(1, n_max, 1);
    std::vector<TruncatedSeries> prefixes = compute_prefixes(source, colors, side);
    TailReport r = assemble(colors, prefixes, order);
    if (r.status == TailStatus::stabilized || n_max < 4) return r;

    bool both = true;
    for (int start : {1, 2}) {
        std::vector<int> sub_colors;
        std::vector<TruncatedSeries> sub;
        for (std::size_t i = static_cast<std::size_t>(start - 1); i < colors.size(); i += 2) {
            sub_colors.push_back(colors[i]);
            sub.push_back(prefixes[i]);
        }
        both = both && assemble(sub_colors, sub, order).status == TailStatus::stabilized;
    }
    if (both) r.status = TailStatus::split_by_parity;
    return r;
}

} // namespace detail

/// Tail report over colors 1..n_max.
inline TailReport tail_extract(const JonesSource& source, int n_max, int order) {
    return detail::extract(source, n_max, order, Side::tail);
}

/// Tail of J_N(1/q) over colors 1..n_max.
inline TailReport head_extract(const JonesSource& source, int n_max, int order) {
    return detail::extract(source, n_max, order, Side::head);
}

/// Reports per residue class of N on either side. Modulus 1 is the plain
/// extraction; modulus 2 gives [odd N, even N], each compared along N, N+2, ...
inline std::vector<TailReport> multi_extract(const JonesSource& source, int n_max, int order, int modulus, Side side) {
    if (modulus == 1) return {detail::extract(source, n_max, order, side)};
    if (modulus != 2) throw OutOfRange("modulus must be 1 or 2");
    detail::check_args(n_max, order);
    if (n_max < 2) throw OutOfRange("parity split needs N_max >= 2");
    std::vector<TailReport> out;
    for (int start : {1, 2}) {
        std::vector<int> colors = detail::color_range(start, n_max, 2);
        out.push_back(detail::assemble(colors, detail::compute_prefixes(source, colors, side), order));
    }
    return out;
}

inline std::vector<TailReport> multi_head_extract(const JonesSource& source, int n_max, int order, int modulus) {
    return multi_extract(source, n_max, order, modulus, Side::head);
}

/// Product of tails, cut at the smaller order.
inline TruncatedSeries tail_product(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

} // namespace qtail
