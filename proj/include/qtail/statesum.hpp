#pragma once

// R-matrix state sum for the reduced colored Jones polynomial J_N of a braid
// closure.
//
// Conventions. Labels run over 0..N-1 and are read top to bottom. At a
// crossing between positions p and p+1 the top labels are (i, j) and the
// bottom labels are (k, l), left to right. The braid is closed on every
// position except the leftmost, whose top and bottom carry `fixed_label`.
// Every closed arc contributes mu_j and the total is multiplied by the framing
// correction q^{w (N^2-1)/4}, w the writhe. With the R above this is the
// sign that makes every closure of a single crossing evaluate to 1.
//
// Sign calibration. Letter +i is evaluated with R and -i with R^{-1}. With
// this choice the closure of "2: 1 1 1" has Jones polynomial q + q^3 - q^4,
// which is what the Kauffman bracket gives for a diagram of all-positive
// crossings with q = A^{-4}. Positive braids therefore have the trivial
// series at the q -> 0 end, and sigma_1^{-4} reproduces link24_formula
// exactly.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "qtail/braid.hpp"
#include "qtail/qlaurent.hpp"

namespace qtail {

/// Which of the two matrices an entry comes from: R (plus) or R^{-1} (minus).
enum class RSign { plus, minus };

/// Matrix used for a positive letter sigma_i.
inline constexpr RSign kPositiveLetterMatrix = RSign::plus;

inline RSign matrix_for_letter(int letter) {
    const bool positive = letter > 0;
    if (positive) return kPositiveLetterMatrix;
    return kPositiveLetterMatrix == RSign::plus ? RSign::minus : RSign::plus;
}

struct StateSumConfig {
    int N = 2;
    int fixed_label = 0;
    bool prune = true;
    int threads = 0; // 0 = hardware concurrency, capped by QTAIL_THREADS
};

/// Worker count: `requested` (or the hardware concurrency when 0), capped by
/// the QTAIL_THREADS environment variable when that holds a positive integer.
inline int worker_count(int requested) {
    int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("QTAIL_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0) n = std::min<long>(n, cap);
    }
    return n;
}

namespace detail {

class BraceFactorials {
public:
    explicit BraceFactorials(int n_max) {
        table_.push_back(QPoly(1));
        for (int m = 1; m <= n_max; ++m) table_.push_back(table_.back() * brace(m, false));
    }
    const QPoly& operator[](int m) const { return table_.at(static_cast<std::size_t>(m)); }

private:
    std::vector<QPoly> table_;
};

inline QPoly r_entry_with(const BraceFactorials& fact, int N, RSign sign, int i, int j, int k, int l) {
    const std::int64_t a = 2 * i - N + 1;
    const std::int64_t b = 2 * j - N + 1;
    if (sign == RSign::plus) {
        const int m = l - i;
        if (j - k != m || m < 0 || m > std::min(N - 1 - i, j)) return {};
        const QPoly num = fact[l] * fact[N - 1 - k];
        const QPoly den = fact[i] * fact[m] * fact[N - 1 - j];
        const std::int64_t e = -a * b + 2 * m * (i - j) + static_cast<std::int64_t>(m) * (m + 1);
        QPoly c = exact_div(num, den).shifted(QExp{e});
        return m % 2 ? -c : c;
    }
    const int m = i - l;
    if (k - j != m || m < 0 || m > std::min(N - 1 - j, i)) return {};
    const QPoly num = fact[k] * fact[N - 1 - l];
    const QPoly den = fact[j] * fact[m] * fact[N - 1 - i];
    const std::int64_t e = a * b + 2 * m * (i - j) - static_cast<std::int64_t>(m) * (m + 1);
    return exact_div(num, den).shifted(QExp{e});
}

} // namespace detail

/// Entry (R^{sign})^{i j}_{k l} for color N.
inline QPoly r_entry(int N, RSign sign, int i, int j, int k, int l) {
    for (int x : {i, j, k, l})
        if (x < 0 || x >= N) throw OutOfRange("R-matrix label " + std::to_string(x) + " for N=" + std::to_string(N));
    return detail::r_entry_with(detail::BraceFactorials(N), N, sign, i, j, k, l);
}

/// mu_j = q^{-(2j-N+1)/2}.
inline QPoly mu_factor(int N, int j) {
    if (j < 0 || j >= N) throw OutOfRange("mu label " + std::to_string(j) + " for N=" + std::to_string(N));
    return QPoly::monomial(1, QExp::half(-(2 * j - N + 1)));
}

namespace detail {

// All R and R^{-1} entries for one color, indexed [sign][i][j][k][l].
class RTable {
public:
    explicit RTable(int N) : N_(N), entries_(2 * static_cast<std::size_t>(N * N * N * N)) {
        const BraceFactorials fact(N);
        for (int s = 0; s < 2; ++s)
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j)
                    for (int k = 0; k < N; ++k)
                        for (int l = 0; l < N; ++l)
                            entries_[index(s, i, j, k, l)] =
                                r_entry_with(fact, N, s == 0 ? RSign::plus : RSign::minus, i, j, k, l);
    }

    const QPoly& at(RSign sign, int i, int j, int k, int l) const {
        return entries_[index(sign == RSign::plus ? 0 : 1, i, j, k, l)];
    }

private:
    int N_;
    std::vector<QPoly> entries_;

    std::size_t index(int s, int i, int j, int k, int l) const {
        return static_cast<std::size_t>((((s * N_ + i) * N_ + j) * N_ + k) * N_ + l);
    }
};

using LabelKey = std::uint64_t;

inline int label_at(LabelKey key, int pos, int N) {
    for (int p = 0; p < pos; ++p) key /= static_cast<LabelKey>(N);
    return static_cast<int>(key % static_cast<LabelKey>(N));
}

inline LabelKey encode(const std::vector<int>& labels, int N) {
    LabelKey key = 0;
    for (auto it = labels.rbegin(); it != labels.rend(); ++it) key = key * static_cast<LabelKey>(N) + static_cast<LabelKey>(*it);
    return key;
}

inline std::vector<int> decode(LabelKey key, int strands, int N) {
    std::vector<int> labels(static_cast<std::size_t>(strands));
    for (auto& x : labels) {
        x = static_cast<int>(key % static_cast<LabelKey>(N));
        key /= static_cast<LabelKey>(N);
    }
    return labels;
}

// Weighted paths from `top` through the word that end in `top` again.
inline QPoly propagate(const BraidWord& b, const RTable& table, int N, bool prune, const std::vector<int>& top) {
    std::map<LabelKey, QPoly> level{{encode(top, N), QPoly(1)}};
    for (int g : b.word) {
        const int p = std::abs(g) - 1;
        const RSign sign = matrix_for_letter(g);
        std::map<LabelKey, QPoly> next;
        for (const auto& [key, weight] : level) {
            std::vector<int> labels = decode(key, b.strands, N);
            const int i = labels[static_cast<std::size_t>(p)];
            const int j = labels[static_cast<std::size_t>(p + 1)];
            auto emit = [&](int k, int l) {
                const QPoly& r = table.at(sign, i, j, k, l);
                if (r.is_zero() && prune) return;
                labels[static_cast<std::size_t>(p)] = k;
                labels[static_cast<std::size_t>(p + 1)] = l;
                next[encode(labels, N)] += weight * r;
            };
            if (prune) {
                // Only label pairs with i + j = k + l inside the walker bounds survive.
                if (sign == RSign::plus) {
                    for (int m = 0; m <= std::min(N - 1 - i, j); ++m) emit(j - m, i + m);
                } else {
                    for (int m = 0; m <= std::min(N - 1 - j, i); ++m) emit(j + m, i - m);
                }
            } else {
                for (int k = 0; k < N; ++k)
                    for (int l = 0; l < N; ++l) emit(k, l);
            }
        }
        if (prune) std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
        level = std::move(next);
    }
    auto it = level.find(encode(top, N));
    return it == level.end() ? QPoly{} : it->second;
}

} // namespace detail

/// Reduced colored Jones polynomial J_N of the closure of b.
inline QPoly jones_statesum(const BraidWord& b, const StateSumConfig& cfg) {
    validate(b);
    const int N = cfg.N;
    if (N < 1) throw OutOfRange("color N must be >= 1");
    if (cfg.fixed_label < 0 || cfg.fixed_label >= N) throw OutOfRange("fixed label outside [0, N-1]");

    const detail::RTable table(N);
    const int closed = b.strands - 1;
    std::int64_t tops = 1;
    for (int s = 0; s < closed; ++s) tops *= N;

    auto top_of = [&](std::int64_t index) {
        std::vector<int> labels(static_cast<std::size_t>(b.strands));
        labels[0] = cfg.fixed_label;
        for (int s = 1; s < b.strands; ++s) {
            labels[static_cast<std::size_t>(s)] = static_cast<int>(index % N);
            index /= N;
        }
        return labels;
    };
    auto contribution = [&](std::int64_t index) {
        const std::vector<int> top = top_of(index);
        QPoly w = detail::propagate(b, table, N, cfg.prune, top);
        if (w.is_zero()) return w;
        for (int s = 1; s < b.strands; ++s) w *= mu_factor(N, top[static_cast<std::size_t>(s)]);
        return w;
    };

    const int workers = static_cast<int>(std::min<std::int64_t>(worker_count(cfg.threads), tops));
    std::vector<QPoly> partial(static_cast<std::size_t>(workers));
    if (workers <= 1) {
        for (std::int64_t t = 0; t < tops; ++t) partial[0] += contribution(t);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::int64_t t = w; t < tops; t += workers) partial[static_cast<std::size_t>(w)] += contribution(t);
            });
        for (auto& th : pool) th.join();
    }
    QPoly total;
    for (const auto& p : partial) total += p;

    std::int64_t writhe = 0;
    for (int g : b.word) writhe += g > 0 ? 1 : -1;
    return total.shifted(QExp{writhe * (static_cast<std::int64_t>(N) * N - 1)});
}

inline QPoly jones_statesum(const BraidWord& b, int N) {
    StateSumConfig cfg;
    cfg.N = N;
    return jones_statesum(b, cfg);
}

/// Closed double sum for the (2,-4) torus link with the open strand labelled 0.
/// The prefactor is the framing correction q^{w(N^2-1)/4} for w = -4.
inline QPoly link24_formula(int N) {
    if (N < 1) throw OutOfRange("color N must be >= 1");
    const detail::BraceFactorials fact(N);
    const std::int64_t n1 = N - 1;
    QPoly sum;
    for (std::int64_t j = 0; j <= n1; ++j) {
        for (std::int64_t l = 0; l <= j; ++l) {
            const QPoly num = fact[static_cast<int>(n1 - l)] * fact[static_cast<int>(j)] * fact[static_cast<int>(n1)];
            const QPoly den = fact[static_cast<int>(n1 - j)] * fact[static_cast<int>(l)] * fact[static_cast<int>(j - l)] *
                              fact[static_cast<int>(n1 - j + l)];
            const std::int64_t twoj = 2 * j - N + 1;
            const std::int64_t e = -2 * twoj - 3 * twoj * n1 - 2 * (l - j + 1) * (j - l) +
                                   (2 * j - 2 * l - N + 1) * (2 * l - N + 1);
            sum += exact_div(num, den).shifted(QExp{e});
        }
    }
    return sum.shifted(QExp::whole(1 - static_cast<std::int64_t>(N) * N));
}

} // namespace qtail
