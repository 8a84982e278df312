#pragma once

// Kauffman bracket skein quantities in the variable A, and the closed form for
// the closure of a 2-strand twist region with Jones-Wenzl colored strands.
//
// q = A^{-4}. An APoly stores A-powers directly in the exponent slot of a
// QPoly, so A^k sits at QExp{k} and converts to q^{-k/4}, which is QExp{-k}:
// the conversion is the exponent negation QPoly::inverted().

#include <cstdlib>
#include <string>

#include "qtail/qlaurent.hpp"

namespace qtail {

class APoly {
public:
    APoly() = default;
    APoly(long long c) : p_(c) {} // NOLINT(google-explicit-constructor)
    explicit APoly(QPoly raw) : p_(std::move(raw)) {}

    /// c * A^k.
    static APoly monomial(const BigInt& c, std::int64_t k) { return APoly(QPoly::monomial(c, QExp{k})); }

    const QPoly& raw() const { return p_; }
    QPoly to_q() const { return p_.inverted(); }

    bool operator==(const APoly&) const = default;
    friend APoly operator+(const APoly& a, const APoly& b) { return APoly(a.p_ + b.p_); }
    friend APoly operator-(const APoly& a, const APoly& b) { return APoly(a.p_ - b.p_); }
    friend APoly operator*(const APoly& a, const APoly& b) { return APoly(a.p_ * b.p_); }
    APoly operator-() const { return APoly(-p_); }

    std::string to_string() const {
        // Reuse the q printer and rename; exponents here are whole A-powers.
        QPoly shown;
        for (const auto& t : p_.terms()) shown += QPoly::monomial(t.coeff, QExp::whole(t.exp));
        std::string s = shown.to_string();
        for (auto& ch : s)
            if (ch == 'q') ch = 'A';
        return s;
    }

private:
    QPoly p_;
};

inline std::ostream& operator<<(std::ostream& os, const APoly& p) { return os << p.to_string(); }

inline APoly exact_div(const APoly& num, const APoly& den) { return APoly(exact_div(num.raw(), den.raw())); }

/// Delta_n = (-1)^n (A^{2(n+1)} - A^{-2(n+1)}) / (A^2 - A^{-2}), as its telescoped sum.
inline APoly delta_n(int n) {
    if (n < -1) throw OutOfRange("Delta_n needs n >= -1");
    APoly r;
    for (int i = 0; i <= n; ++i) r = r + APoly::monomial(n % 2 ? -1 : 1, 2 * n - 4 * i);
    return r;
}

/// Delta_n! = Delta_n Delta_{n-1} ... Delta_1; empty for n <= 0.
inline APoly delta_fact(int n) {
    if (n < -1) throw OutOfRange("Delta_n! needs n >= -1");
    APoly r = 1;
    for (int i = 1; i <= n; ++i) r = r * delta_n(i);
    return r;
}

inline bool admissible(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) return false;
    return (a + b + c) % 2 == 0 && std::abs(a - b) <= c && c <= a + b;
}

/// Evaluation of the theta graph with edge colors a, b, c.
inline APoly theta_coeff(int a, int b, int c) {
    if (!admissible(a, b, c))
        throw NotAdmissible("(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
    const int x = (b + c - a) / 2;
    const int y = (a + c - b) / 2;
    const int z = (a + b - c) / 2;
    const APoly num = delta_fact(x + y + z) * delta_fact(x - 1) * delta_fact(y - 1) * delta_fact(z - 1);
    const APoly den = delta_fact(y + z - 1) * delta_fact(z + x - 1) * delta_fact(x + y - 1);
    return exact_div(num, den);
}

enum class TwistSign { plus, minus };

/// Half-twist eigenvalue at a trivalent vertex:
/// (-1)^{(a+b-c)/2} A^{a+b-c+(a^2+b^2-c^2)/2}, with A -> 1/A for the minus twist.
inline APoly gamma_twist(int a, int b, int c, TwistSign sign) {
    if (!admissible(a, b, c))
        throw NotAdmissible("(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
    const std::int64_t e = a + b - c + (a * a + b * b - c * c) / 2;
    const int s = ((a + b - c) / 2) % 2 ? -1 : 1;
    return APoly::monomial(s, sign == TwistSign::plus ? e : -e);
}

/// Twist used for one positive braid crossing sigma_1. Fixed by the same
/// N = 2 trefoil calibration as the state sum: with this choice the reduced
/// bracket of m positive twists matches jones_statesum(torus_braid(2, m)).
inline constexpr TwistSign kPositiveCrossingTwist = TwistSign::minus;

/// Unreduced bracket of the closure of m half-twists on two strands colored n:
/// sum_{j=0}^{n} gamma(n,n,2j)^{|m|} Delta_{2j}. m = 0 gives two parallel unknots.
inline APoly torus2m_bracket(int m, int n) {
    if (n < 0) throw OutOfRange("torus2m_bracket needs n >= 0");
    const TwistSign sign = m >= 0 ? kPositiveCrossingTwist
                                  : (kPositiveCrossingTwist == TwistSign::plus ? TwistSign::minus : TwistSign::plus);
    APoly r;
    for (int j = 0; j <= n; ++j) {
        const APoly g = gamma_twist(n, n, 2 * j, sign);
        APoly term = delta_n(2 * j);
        for (int t = 0; t < std::abs(m); ++t) term = term * g;
        r = r + term;
    }
    return r;
}

/// J_{n+1} of the (2,m) torus closure in q, up to ±q^s: bracket / Delta_n.
inline QPoly torus2m_reduced(int m, int n) { return exact_div(torus2m_bracket(m, n), delta_n(n)).to_q(); }

} // namespace qtail
