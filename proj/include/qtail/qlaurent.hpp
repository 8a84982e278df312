#pragma once

// Exact Laurent polynomials in q^{1/4} with arbitrary-precision coefficients.
//
// Every exponent is stored in quarter units, so q^{3/2} is QExp{6}. The
// skein variable A enters through A^k = q^{-k/4}, the R-matrix needs
// q^{m(m+1)/4}; a single integer lattice covers both.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qtail/errors.hpp"

namespace qtail {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent of q in quarter units.
struct QExp {
    std::int64_t quarters = 0;

    static constexpr QExp whole(std::int64_t n) { return QExp{4 * n}; }
    static constexpr QExp half(std::int64_t n) { return QExp{2 * n}; }

    constexpr bool is_whole() const { return quarters % 4 == 0; }
    constexpr std::int64_t whole_part() const { return quarters / 4; }

    constexpr auto operator<=>(const QExp&) const = default;
    constexpr QExp operator+(QExp o) const { return QExp{quarters + o.quarters}; }
    constexpr QExp operator-(QExp o) const { return QExp{quarters - o.quarters}; }
    constexpr QExp operator-() const { return QExp{-quarters}; }
};

/// Renders an exponent as a reduced fraction of whole q-powers ("3/2", "-1", "1/4").
inline std::string format_exponent(QExp e) {
    std::int64_t num = e.quarters;
    std::int64_t den = 4;
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g != 0) {
        num /= g;
        den /= g;
    }
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

class QPoly {
public:
    struct Term {
        std::int64_t exp; // quarter units
        BigInt coeff;     // never zero

        bool operator==(const Term&) const = default;
    };

    QPoly() = default;
    QPoly(long long constant) { // NOLINT(google-explicit-constructor)
        if (constant != 0) terms_.push_back({0, BigInt(constant)});
    }
    QPoly(const BigInt& constant) { // NOLINT(google-explicit-constructor)
        if (constant != 0) terms_.push_back({0, constant});
    }

    static QPoly monomial(const BigInt& coeff, QExp e) {
        QPoly p;
        if (coeff != 0) p.terms_.push_back({e.quarters, coeff});
        return p;
    }

    /// q^{n} for a whole power n.
    static QPoly q(std::int64_t n = 1) { return monomial(1, QExp::whole(n)); }

    /// Builds from arbitrary (exponent, coefficient) pairs; duplicates are summed.
    static QPoly from_terms(std::vector<std::pair<std::int64_t, BigInt>> raw) {
        std::sort(raw.begin(), raw.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        QPoly p;
        for (auto& [e, c] : raw) {
            if (!p.terms_.empty() && p.terms_.back().exp == e) {
                p.terms_.back().coeff += c;
                if (p.terms_.back().coeff == 0) p.terms_.pop_back();
            } else if (c != 0) {
                p.terms_.push_back({e, std::move(c)});
            }
        }
        return p;
    }

    /// Dense constructor from coefficients of q^0, q^1, ... (whole powers).
    static QPoly from_coeffs(const std::vector<long long>& coeffs) {
        QPoly p;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] != 0)
                p.terms_.push_back({4 * static_cast<std::int64_t>(i), BigInt(coeffs[i])});
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    QExp min_exp() const { return QExp{terms_.front().exp}; }
    QExp max_exp() const { return QExp{terms_.back().exp}; }

    BigInt coeff(QExp e) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e.quarters,
                                   [](const Term& t, std::int64_t x) { return t.exp < x; });
        if (it != terms_.end() && it->exp == e.quarters) return it->coeff;
        return 0;
    }

    bool operator==(const QPoly&) const = default;

    QPoly operator-() const {
        QPoly r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    QPoly& operator+=(const QPoly& o) {
        *this = merge(*this, o, false);
        return *this;
    }
    QPoly& operator-=(const QPoly& o) {
        *this = merge(*this, o, true);
        return *this;
    }
    QPoly& operator*=(const QPoly& o) {
        *this = multiply(*this, o);
        return *this;
    }

    friend QPoly operator+(const QPoly& a, const QPoly& b) { return merge(a, b, false); }
    friend QPoly operator-(const QPoly& a, const QPoly& b) { return merge(a, b, true); }
    friend QPoly operator*(const QPoly& a, const QPoly& b) { return multiply(a, b); }

    /// Multiplication by q^e.
    QPoly shifted(QExp e) const {
        QPoly r = *this;
        for (auto& t : r.terms_) t.exp += e.quarters;
        return r;
    }

    QPoly scaled(const BigInt& c) const {
        if (c == 0) return {};
        QPoly r = *this;
        for (auto& t : r.terms_) t.coeff *= c;
        return r;
    }

    /// The substitution q -> 1/q.
    QPoly inverted() const {
        QPoly r;
        r.terms_.reserve(terms_.size());
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
            r.terms_.push_back({-it->exp, it->coeff});
        return r;
    }

    /// Keeps only terms with exponent strictly below `bound`.
    QPoly truncated(QExp bound) const {
        QPoly r;
        for (const auto& t : terms_) {
            if (t.exp >= bound.quarters) break;
            r.terms_.push_back(t);
        }
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            BigInt mag = t.coeff < 0 ? BigInt(-t.coeff) : t.coeff;
            if (first) {
                if (t.coeff < 0) os << "-";
            } else {
                os << (t.coeff < 0 ? " - " : " + ");
            }
            first = false;
            if (t.exp == 0) {
                os << mag;
                continue;
            }
            if (mag != 1) os << mag << "*";
            os << "q";
            if (t.exp != 4) {
                const std::string e = format_exponent(QExp{t.exp});
                if (e.find('/') != std::string::npos || e.front() == '-')
                    os << "^(" << e << ")";
                else
                    os << "^" << e;
            }
        }
        return os.str();
    }

private:
    std::vector<Term> terms_;

    static QPoly merge(const QPoly& a, const QPoly& b, bool subtract) {
        QPoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->exp < ib->exp)) {
                r.terms_.push_back(*ia++);
            } else if (ia == a.terms_.end() || ib->exp < ia->exp) {
                r.terms_.push_back({ib->exp, subtract ? BigInt(-ib->coeff) : ib->coeff});
                ++ib;
            } else {
                BigInt c = subtract ? BigInt(ia->coeff - ib->coeff) : BigInt(ia->coeff + ib->coeff);
                if (c != 0) r.terms_.push_back({ia->exp, std::move(c)});
                ++ia;
                ++ib;
            }
        }
        return r;
    }

    static QPoly multiply(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.size() == 1) return b.shifted(a.min_exp()).scaled(a.terms_.front().coeff);
        if (b.size() == 1) return a.shifted(b.min_exp()).scaled(b.terms_.front().coeff);

        const std::int64_t lo = a.terms_.front().exp + b.terms_.front().exp;
        const std::int64_t hi = a.terms_.back().exp + b.terms_.back().exp;
        const auto pairs = static_cast<std::int64_t>(a.size() * b.size());
        QPoly r;
        if (hi - lo < 4 * pairs + 64) {
            std::vector<BigInt> acc(static_cast<std::size_t>(hi - lo + 1));
            for (const auto& ta : a.terms_)
                for (const auto& tb : b.terms_)
                    acc[static_cast<std::size_t>(ta.exp + tb.exp - lo)] += ta.coeff * tb.coeff;
            for (std::size_t i = 0; i < acc.size(); ++i)
                if (acc[i] != 0)
                    r.terms_.push_back({lo + static_cast<std::int64_t>(i), std::move(acc[i])});
            return r;
        }
        std::map<std::int64_t, BigInt> acc;
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) acc[ta.exp + tb.exp] += ta.coeff * tb.coeff;
        for (auto& [e, c] : acc)
            if (c != 0) r.terms_.push_back({e, std::move(c)});
        return r;
    }
};

inline std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.to_string(); }

/// ±q^{e}: the argument type of theta functions and Pochhammer symbols.
struct SignedMonomial {
    int sign = 1; // exactly +1 or -1
    QExp exp{};

    static constexpr SignedMonomial q(std::int64_t whole_exp, int sign = 1) {
        return SignedMonomial{sign, QExp::whole(whole_exp)};
    }

    QPoly to_poly() const { return QPoly::monomial(sign, exp); }

    friend SignedMonomial operator*(SignedMonomial a, SignedMonomial b) {
        return SignedMonomial{a.sign * b.sign, a.exp + b.exp};
    }
    SignedMonomial negated() const { return SignedMonomial{-sign, exp}; }

    bool operator==(const SignedMonomial&) const = default;

    std::string to_string() const {
        return (sign < 0 ? "-" : "") + QPoly::monomial(1, exp).to_string();
    }
};

/// Representative of a polynomial up to a global factor ±q^s: the input equals
/// sign * q^shift * normalized, and normalized starts with +c*q^0, c > 0.
struct CanonicalForm {
    QPoly normalized;
    int sign = 1;
    QExp shift{};

    bool operator==(const CanonicalForm&) const = default;
};

inline CanonicalForm canonical(const QPoly& p) {
    if (p.is_zero()) return {};
    CanonicalForm cf;
    cf.shift = p.min_exp();
    cf.sign = p.terms().front().coeff < 0 ? -1 : 1;
    cf.normalized = p.shifted(-cf.shift);
    if (cf.sign < 0) cf.normalized = -cf.normalized;
    return cf;
}

/// Whether a and b agree up to ±q^s modulo q^n (n in whole powers).
inline bool agree_mod(const QPoly& a, const QPoly& b, int n) {
    if (n < 1) throw OutOfRange("agree_mod needs n >= 1");
    const QExp bound = QExp::whole(n);
    return canonical(a).normalized.truncated(bound) == canonical(b).normalized.truncated(bound);
}

namespace detail {

// Long division starting from the lowest terms. Quotient terms are produced
// while their exponent is below `quotient_bound`; the remainder is tracked
// only below `remainder_bound`.
struct LowDivision {
    QPoly quotient;
    std::map<std::int64_t, BigInt> remainder;
};

inline LowDivision divide_from_low(const QPoly& num, const QPoly& den, std::int64_t quotient_bound,
                                   std::int64_t remainder_bound, bool require_exact_coeffs) {
    LowDivision out;
    for (const auto& t : num.terms())
        if (t.exp < remainder_bound) out.remainder.emplace(t.exp, t.coeff);
    const auto& d0 = den.terms().front();
    std::vector<std::pair<std::int64_t, BigInt>> qterms;
    while (!out.remainder.empty()) {
        auto it = out.remainder.begin();
        const std::int64_t qe = it->first - d0.exp;
        if (qe >= quotient_bound) break;
        if (require_exact_coeffs && it->second % d0.coeff != 0) break;
        BigInt qc = it->second / d0.coeff;
        for (const auto& dt : den.terms()) {
            const std::int64_t e = dt.exp + qe;
            if (e >= remainder_bound) break;
            auto [slot, inserted] = out.remainder.try_emplace(e, 0);
            slot->second -= qc * dt.coeff;
            if (slot->second == 0) out.remainder.erase(slot);
        }
        qterms.emplace_back(qe, std::move(qc));
    }
    out.quotient = QPoly::from_terms(std::move(qterms));
    return out;
}

} // namespace detail

/// Exact Laurent division; throws NonDivisible unless quotient*den == num.
inline QPoly exact_div(const QPoly& num, const QPoly& den) {
    if (den.is_zero()) throw NonDivisible("division by the zero polynomial");
    if (num.is_zero()) return {};
    const std::int64_t qmax = num.max_exp().quarters - den.max_exp().quarters;
    auto div = detail::divide_from_low(num, den, qmax + 1, std::numeric_limits<std::int64_t>::max(),
                                       true);
    if (!div.remainder.empty())
        throw NonDivisible("(" + num.to_string() + ") / (" + den.to_string() + ")");
    return div.quotient;
}

/// Power-series quotient canonical(num) / canonical(den) modulo q^order.
inline QPoly series_div(const QPoly& num, const QPoly& den, int order) {
    if (order < 1) throw OutOfRange("series_div needs order >= 1");
    const QPoly d = canonical(den).normalized;
    if (d.is_zero() || d.terms().front().coeff != 1)
        throw NonUnitLeadingTerm(den.to_string());
    const QPoly n = canonical(num).normalized;
    const std::int64_t bound = QExp::whole(order).quarters;
    return detail::divide_from_low(n, d, bound, bound, false).quotient;
}

/// (a;q)_k = prod_{j=0}^{k-1} (1 - a q^j), exact.
inline QPoly pochhammer(SignedMonomial a, int k) {
    if (k < 0) throw OutOfRange("pochhammer length must be >= 0");
    QPoly r = 1;
    for (int j = 0; j < k; ++j) r *= QPoly(1) - SignedMonomial{a.sign, a.exp + QExp::whole(j)}.to_poly();
    return r;
}

/// (a;base)_infinity truncated below q^order. Requires exp(base) > 0 and exp(a) >= 0.
inline QPoly pochhammer_infinite(SignedMonomial a, SignedMonomial base, int order) {
    if (base.exp.quarters <= 0 || a.exp.quarters < 0)
        throw DivergentProduct("(" + a.to_string() + ";" + base.to_string() + ")_inf");
    const QExp bound = QExp::whole(order);
    QPoly r = 1;
    SignedMonomial factor = a;
    while (factor.exp < bound) {
        r = (r * (QPoly(1) - factor.to_poly())).truncated(bound);
        factor = factor * base;
    }
    return r.truncated(bound);
}

/// (a;q)_infinity truncated below q^order; requires exp(a) > 0.
inline QPoly pochhammer_infinite(SignedMonomial a, int order) {
    if (a.exp.quarters <= 0) throw DivergentProduct("(" + a.to_string() + ";q)_inf");
    return pochhammer_infinite(a, SignedMonomial::q(1), order);
}

/// (q;q)_n.
inline QPoly qfactorial(int n) { return pochhammer(SignedMonomial::q(1), n); }

/// Gaussian binomial (n choose k)_q.
inline QPoly gauss_binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw OutOfRange("gauss_binomial needs 0 <= k <= n");
    return exact_div(qfactorial(n), qfactorial(n - k) * qfactorial(k));
}

/// {m} = q^{m/2} - q^{-m/2}, or {m}! = {1}{2}...{m} when factorial is set.
inline QPoly brace(int m, bool factorial) {
    if (m < 0) throw OutOfRange("brace needs m >= 0");
    auto single = [](int j) { return QPoly::monomial(1, QExp::half(j)) - QPoly::monomial(1, QExp::half(-j)); };
    if (!factorial) return single(m);
    QPoly r = 1;
    for (int j = 1; j <= m; ++j) r *= single(j);
    return r;
}

} // namespace qtail
