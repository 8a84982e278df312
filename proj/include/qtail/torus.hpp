#pragma once

// Closed forms for torus knots and links. All results are classes up to ±q^s
// and are returned canonically normalized (lowest term +1 q^0).
//
// Chirality. "Negative" means the closure of a braid with negative letters,
// torus_braid(2, -(2k+1)); its tail is f(-q^{2k}, -q). The positive closures
// have trivial tail.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <vector>

#include "qtail/qlaurent.hpp"
#include "qtail/series.hpp"

namespace qtail {

enum class MortonMode { exact, tail };

/// sum_{R=-N+1}^{N} (-1)^R q^{k(R^2-R) + (R^2+R)/2}, which is (q^N - 1) J_N of the
/// negative (2,2k+1) torus knot up to ±q^s.
inline QPoly morton_sum(int k, int N) {
    std::vector<std::pair<std::int64_t, BigInt>> terms;
    for (std::int64_t r = -N + 1; r <= N; ++r)
        terms.emplace_back(QExp::whole(k * (r * r - r) + (r * r + r) / 2).quarters, BigInt(r % 2 ? -1 : 1));
    return QPoly::from_terms(std::move(terms));
}

/// Canonical J_N of the negative (2,2k+1) torus knot (exact), or its first N
/// canonical coefficients (tail), where the (q^N - 1) factor is invisible.
inline QPoly morton_2odd(int k, int N, MortonMode mode) {
    if (k < 1) throw OutOfRange("morton_2odd needs k >= 1");
    if (N < 1) throw OutOfRange("color N must be >= 1");
    const QPoly s = canonical(morton_sum(k, N)).normalized;
    if (mode == MortonMode::tail) return s.truncated(QExp::whole(N));
    return canonical(exact_div(s, QPoly(1) - QPoly::q(N))).normalized;
}

/// sum_{r=0}^{N-1} q^{kr^2+(k+1)r+1} - q^{kr^2+(k-1)r}, which is (q^N - 1) J_N of the
/// negative (2,2k) torus link up to ±q^s.
inline QPoly hikami_numerator(int k, int n_color) {
    QPoly num;
    for (std::int64_t r = 0; r < n_color; ++r) {
        num += QPoly::q(k * r * r + (k + 1) * r + 1);
        num -= QPoly::q(k * r * r + (k - 1) * r);
    }
    return num;
}

/// Canonical series of J_{Ncolor} for the negative (2,2k) torus link to the given order.
inline TruncatedSeries hikami_2even(int k, int n_color, int order) {
    if (k < 1) throw OutOfRange("hikami_2even needs k >= 1");
    if (n_color < 1) throw OutOfRange("color must be >= 1");
    return TruncatedSeries(series_div(hikami_numerator(k, n_color), QPoly::q(n_color) - QPoly(1), order), order);
}

/// The same quotient as an exact polynomial; the division leaves no remainder.
inline QPoly hikami_2even_exact(int k, int n_color) {
    if (k < 1) throw OutOfRange("hikami_2even needs k >= 1");
    if (n_color < 1) throw OutOfRange("color must be >= 1");
    const QPoly num = canonical(hikami_numerator(k, n_color)).normalized;
    return canonical(exact_div(num, QPoly(1) - QPoly::q(n_color))).normalized;
}

/// psi_{m,p}(r) = r^2 m p - r p + r m with r = s/2, in quarter units.
inline std::int64_t psi_quarters(std::int64_t m, std::int64_t p, std::int64_t s) {
    return s * s * m * p - 2 * s * p + 2 * s * m;
}

/// sum_r q^{psi(r + 1/m)} - q^{psi(r)} over r = -(N-1)/2 .. (N-1)/2, p > 0.
inline QPoly psi_numerator(int m, int p, int N) {
    std::vector<std::pair<std::int64_t, BigInt>> terms;
    for (std::int64_t s = -(N - 1); s <= N - 1; s += 2) {
        // psi(r + 1/m) = psi(r) + 2 r p + 1 with r = s/2
        terms.emplace_back(psi_quarters(m, p, s) + 4 * s * p + 4, BigInt(1));
        terms.emplace_back(psi_quarters(m, p, s), BigInt(-1));
    }
    return QPoly::from_terms(std::move(terms));
}

enum class PsiSide { tail, head };

/// Canonical J_N(q) (tail side) or J_N(1/q) (head side) of the (m,p) torus knot;
/// the sign of p selects the chirality as in torus_braid(m, p).
inline QPoly psi_sum(int m, int p, int N, PsiSide side) {
    if (m < 2 || p == 0) throw OutOfRange("psi_sum needs m >= 2, p != 0");
    if (N < 1) throw OutOfRange("color N must be >= 1");
    if (std::gcd(m, std::abs(p)) != 1) throw NotCoprime("(" + std::to_string(m) + "," + std::to_string(p) + ")");
    // The sum is (q^N - 1) J_N of the negative knot T(m, -|p|).
    const QPoly numerator = canonical(psi_numerator(m, std::abs(p), N)).normalized;
    QPoly j = canonical(exact_div(numerator, QPoly(1) - QPoly::q(N))).normalized;
    const bool want_inverted = (p > 0) != (side == PsiSide::head);
    return want_inverted ? canonical(j.inverted()).normalized : j;
}

/// J_N of the positive (2,5) torus knot from the two-walk expansion.
inline QPoly walk_25(int N) {
    if (N < 1) throw OutOfRange("color N must be >= 1");
    QPoly sum;
    for (int n = 0; n <= N - 1; ++n) {
        QPoly falling = 1;
        for (int i = 0; i <= n - 1; ++i) falling *= QPoly(1) - QPoly::q(N - 1 - i);
        QPoly inner;
        for (int k = 0; k <= n; ++k)
            inner += gauss_binomial(n, k) * QPoly::q(static_cast<std::int64_t>(n) * N + static_cast<std::int64_t>(k) * (2 * N - 1 - n));
        sum += inner * falling;
    }
    return sum * QPoly::q(2 * (N - 1));
}

/// prod_{j=1}^{N-1} (1-q^j) * sum q^{sum_j N_j(N_j+1)} / prod_i (q;q)_{n_i} modulo q^order,
/// over n_1..n_{k-1} >= 0 with N_j = n_1 + ... + n_j and N_{k-1} <= N-1.
inline TruncatedSeries walk_2odd_tail(int k, int N, int order) {
    if (k < 1) throw OutOfRange("walk_2odd_tail needs k >= 1");
    if (N < 1 || order < 1) throw OutOfRange("walk_2odd_tail needs N, order >= 1");
    const QExp bound = QExp::whole(order);
    detail::InverseFactorials inv(order);
    QPoly sum;
    const int depth = k - 1;
    std::function<void(int, std::int64_t, std::int64_t, QPoly)> visit =
        [&](int j, std::int64_t cumulative, std::int64_t exponent, QPoly weight) {
            if (j == depth) {
                sum += (weight * QPoly::q(exponent)).truncated(bound);
                return;
            }
            for (std::int64_t n = 0; cumulative + n <= N - 1; ++n) {
                const std::int64_t big_n = cumulative + n;
                const std::int64_t e = exponent + big_n * (big_n + 1);
                if (e + (depth - j - 1) * big_n * (big_n + 1) >= order) break;
                visit(j + 1, big_n, e, (weight * inv[static_cast<int>(n)]).truncated(bound));
            }
        };
    visit(0, 0, 0, QPoly(1));
    const QPoly falling = qfactorial(N - 1).truncated(bound);
    return TruncatedSeries(sum * falling, order);
}

} // namespace qtail
