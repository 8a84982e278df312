#pragma once

// Truncated q-series: theta and false theta functions, the Euler function and
// both sides of the Rogers-Ramanujan type identities.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qtail/qlaurent.hpp"

namespace qtail {

/// A q-series known modulo q^order. All exponents lie in [0, order).
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(QPoly poly, int order) : order_(order), poly_(poly.truncated(QExp::whole(order))) {
        if (order < 1) throw OutOfRange("series order must be >= 1");
        if (!poly_.is_zero() && poly_.min_exp().quarters < 0)
            throw OutOfRange("series with negative exponent " + format_exponent(poly_.min_exp()));
    }

    int order() const { return order_; }
    const QPoly& poly() const { return poly_; }

    /// Coefficient of q^i (whole power).
    BigInt coeff(int i) const { return poly_.coeff(QExp::whole(i)); }

    TruncatedSeries truncated(int order) const { return TruncatedSeries(poly_, std::min(order, order_)); }

    bool operator==(const TruncatedSeries&) const = default;

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        const int order = std::min(a.order_, b.order_);
        return TruncatedSeries(a.poly_.truncated(QExp::whole(order)) * b.poly_.truncated(QExp::whole(order)),
                               order);
    }
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        return TruncatedSeries(a.poly_ + b.poly_, std::min(a.order_, b.order_));
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return TruncatedSeries(a.poly_ - b.poly_, std::min(a.order_, b.order_));
    }

    std::string to_string() const { return poly_.to_string() + " + O(q^" + std::to_string(order_) + ")"; }

private:
    int order_ = 1;
    QPoly poly_;
};

inline std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) { return os << s.to_string(); }

/// First whole exponent (below `order`) where a and b differ, or -1.
inline int first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int order = std::min(a.order(), b.order());
    for (int i = 0; i < order; ++i)
        if (a.coeff(i) != b.coeff(i)) return i;
    for (const auto& t : (a.poly() - b.poly()).truncated(QExp::whole(order)).terms())
        return static_cast<int>(t.exp / 4); // fractional exponent mismatch
    return -1;
}

namespace detail {

inline void require_convergent(SignedMonomial a, SignedMonomial b, const char* what) {
    if (a.exp.quarters + b.exp.quarters <= 0)
        throw DivergentSeries(std::string(what) + "(" + a.to_string() + ", " + b.to_string() + ")");
}

// Adds sign(a)^{t1} sign(b)^{t2} q^{t1 e(a) + t2 e(b)} for triangular exponents t1, t2.
inline bool add_theta_term(std::vector<std::pair<std::int64_t, BigInt>>& out, SignedMonomial a,
                           SignedMonomial b, std::int64_t t1, std::int64_t t2, std::int64_t bound,
                           int sign = 1) {
    const std::int64_t e = t1 * a.exp.quarters + t2 * b.exp.quarters;
    if (e >= bound) return false;
    int s = sign;
    if (a.sign < 0 && (t1 & 1)) s = -s;
    if (b.sign < 0 && (t2 & 1)) s = -s;
    out.emplace_back(e, BigInt(s));
    return true;
}

// Enumerates k = 0, 1, 2, ... adding term(k) until the exponent is beyond the
// vertex of the quadratic and at or above the bound.
inline void sweep(const std::function<std::int64_t(std::int64_t)>& exponent,
                  const std::function<void(std::int64_t)>& emit, std::int64_t bound, int direction) {
    std::int64_t prev = std::numeric_limits<std::int64_t>::min();
    for (std::int64_t k = (direction > 0 ? 0 : -1);; k += direction) {
        const std::int64_t e = exponent(k);
        if (e >= bound && e >= prev) break;
        emit(k);
        prev = e;
    }
}

} // namespace detail

/// Ramanujan's theta function f(a,b) = sum_{k in Z} a^{k(k+1)/2} b^{k(k-1)/2}.
inline TruncatedSeries theta_f(SignedMonomial a, SignedMonomial b, int order) {
    detail::require_convergent(a, b, "f");
    const std::int64_t bound = QExp::whole(order).quarters;
    std::vector<std::pair<std::int64_t, BigInt>> terms;
    auto exponent = [&](std::int64_t k) {
        return (k * (k + 1) / 2) * a.exp.quarters + (k * (k - 1) / 2) * b.exp.quarters;
    };
    auto emit = [&](std::int64_t k) { detail::add_theta_term(terms, a, b, k * (k + 1) / 2, k * (k - 1) / 2, bound); };
    detail::sweep(exponent, emit, bound, +1);
    detail::sweep(exponent, emit, bound, -1);
    return TruncatedSeries(QPoly::from_terms(std::move(terms)), order);
}

/// f(a,b) through the triple product (-a;ab)_inf (-b;ab)_inf (ab;ab)_inf.
inline TruncatedSeries theta_f_product(SignedMonomial a, SignedMonomial b, int order) {
    if (a.exp.quarters + b.exp.quarters <= 0)
        throw DivergentProduct("f(" + a.to_string() + ", " + b.to_string() + ")");
    const SignedMonomial ab = a * b;
    const QExp bound = QExp::whole(order);
    QPoly r = pochhammer_infinite(a.negated(), ab, order);
    r = (r * pochhammer_infinite(b.negated(), ab, order)).truncated(bound);
    r = (r * pochhammer_infinite(ab, ab, order)).truncated(bound);
    return TruncatedSeries(r, order);
}

/// False theta Psi(a,b) = sum_{k>=0} a^{k(k+1)/2} b^{k(k-1)/2} - sum_{k>=1} a^{k(k-1)/2} b^{k(k+1)/2}.
inline TruncatedSeries false_theta_psi(SignedMonomial a, SignedMonomial b, int order) {
    detail::require_convergent(a, b, "Psi");
    const std::int64_t bound = QExp::whole(order).quarters;
    std::vector<std::pair<std::int64_t, BigInt>> terms;
    detail::sweep([&](std::int64_t k) { return (k * (k + 1) / 2) * a.exp.quarters + (k * (k - 1) / 2) * b.exp.quarters; },
                  [&](std::int64_t k) { detail::add_theta_term(terms, a, b, k * (k + 1) / 2, k * (k - 1) / 2, bound); },
                  bound, +1);
    // The second sum mirrors the first with a and b swapped, starting at k = 1.
    detail::sweep([&](std::int64_t k) { return ((k + 1) * k / 2) * a.exp.quarters + ((k + 1) * (k + 2) / 2) * b.exp.quarters; },
                  [&](std::int64_t k) {
                      detail::add_theta_term(terms, a, b, (k + 1) * k / 2, (k + 1) * (k + 2) / 2, bound, -1);
                  },
                  bound, +1);
    return TruncatedSeries(QPoly::from_terms(std::move(terms)), order);
}

/// (q;q)_infinity.
inline TruncatedSeries euler_inf(int order) {
    return TruncatedSeries(pochhammer_infinite(SignedMonomial::q(1), order), order);
}

/// 1/(q;q)_n as a truncated series.
inline TruncatedSeries inverse_qfactorial(int n, int order) {
    return TruncatedSeries(series_div(1, qfactorial(n), order), order);
}

namespace detail {

// Cache of 1/(q;q)_n for n = 0..; grown on demand.
class InverseFactorials {
public:
    explicit InverseFactorials(int order) : order_(order) {}
    const QPoly& operator[](int n) {
        while (static_cast<int>(table_.size()) <= n) {
            const int m = static_cast<int>(table_.size());
            if (m == 0) {
                table_.push_back(QPoly(1));
            } else {
                // 1/(q;q)_m = 1/(q;q)_{m-1} * 1/(1-q^m)
                const QPoly geom = series_div(1, QPoly(1) - QPoly::q(m), order_);
                table_.push_back((table_.back() * geom).truncated(QExp::whole(order_)));
            }
        }
        return table_[static_cast<std::size_t>(n)];
    }

private:
    int order_;
    std::vector<QPoly> table_;
};

} // namespace detail

/// (q;q)_inf * sum_{n_1..n_{k-1} >= 0} q^{sum N_j^2 + N_j} / prod (q;q)_{n_i},
/// with N_j = n_1 + ... + n_j.
inline TruncatedSeries andrews_gordon_rhs(int k, int order) {
    if (k < 2) throw OutOfRange("andrews_gordon_rhs needs k >= 2");
    const std::int64_t bound = order; // whole powers
    detail::InverseFactorials inv(order);
    QPoly sum;
    const int depth = k - 1;
    std::vector<int> parts(static_cast<std::size_t>(depth));

    // Depth-first over n_1, ..., n_{k-1}; N_j never decreases, so the
    // remaining indices contribute at least (depth - j) * (N^2 + N).
    std::function<void(int, std::int64_t, std::int64_t, QPoly)> visit =
        [&](int j, std::int64_t cumulative, std::int64_t exponent, QPoly weight) {
            if (j == depth) {
                sum += (weight * QPoly::q(exponent)).truncated(QExp::whole(order));
                return;
            }
            for (int n = 0;; ++n) {
                const std::int64_t big_n = cumulative + n;
                const std::int64_t e = exponent + big_n * big_n + big_n;
                if (e + (depth - j - 1) * (big_n * big_n + big_n) >= bound) break;
                visit(j + 1, big_n, e, (weight * inv[n]).truncated(QExp::whole(order - e)));
            }
        };
    visit(0, 0, 0, QPoly(1));
    return TruncatedSeries(sum, order) * euler_inf(order);
}

enum class P200Form { alternating, entry9, p200 };

/// The three equal expressions of Psi(q^3,q): sum (-1)^k q^{(k^2+k)/2};
/// (q;q)_inf sum q^{k^2+k}/(q;q)_k^2; (q;q)_inf^2 sum q^k/(q;q)_k^2.
inline TruncatedSeries ramanujan_p200(P200Form form, int order) {
    if (order < 1) throw OutOfRange("order must be >= 1");
    const QExp bound = QExp::whole(order);
    switch (form) {
    case P200Form::alternating: {
        std::vector<std::pair<std::int64_t, BigInt>> terms;
        for (std::int64_t k = 0; (k * k + k) / 2 < order; ++k)
            terms.emplace_back(QExp::whole((k * k + k) / 2).quarters, BigInt(k % 2 ? -1 : 1));
        return TruncatedSeries(QPoly::from_terms(std::move(terms)), order);
    }
    case P200Form::entry9: {
        detail::InverseFactorials inv(order);
        QPoly sum;
        for (std::int64_t k = 0; k * k + k < order; ++k)
            sum += (QPoly::q(k * k + k) * inv[static_cast<int>(k)] * inv[static_cast<int>(k)]).truncated(bound);
        return TruncatedSeries(sum, order) * euler_inf(order);
    }
    case P200Form::p200: {
        detail::InverseFactorials inv(order);
        QPoly sum;
        for (std::int64_t k = 0; k < order; ++k)
            sum += (QPoly::q(k) * inv[static_cast<int>(k)] * inv[static_cast<int>(k)]).truncated(bound);
        const TruncatedSeries e = euler_inf(order);
        return TruncatedSeries(sum, order) * e * e;
    }
    }
    throw OutOfRange("unknown form");
}

} // namespace qtail
