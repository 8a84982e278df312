#include <gtest/gtest.h>

#include <random>

#include "qtail/series.hpp"

using namespace qtail;

namespace {

SignedMonomial mq(std::int64_t e) { return SignedMonomial::q(e, -1); }
SignedMonomial pq(std::int64_t e) { return SignedMonomial::q(e, 1); }

TruncatedSeries series(std::vector<long long> coeffs, int order) { return TruncatedSeries(QPoly::from_coeffs(coeffs), order); }

// Bilateral sum computed by brute force over a fixed window, independent of the
// library's stopping rule.
TruncatedSeries naive_theta(SignedMonomial a, SignedMonomial b, int order) {
    QPoly sum;
    for (std::int64_t k = -60; k <= 60; ++k) {
        const std::int64_t ea = k * (k + 1) / 2, eb = k * (k - 1) / 2;
        const std::int64_t e = ea * a.exp.quarters + eb * b.exp.quarters;
        if (e >= 4 * order) continue;
        const int sign = ((ea % 2 != 0 && a.sign < 0) != (eb % 2 != 0 && b.sign < 0)) ? -1 : 1;
        sum += QPoly::monomial(sign, QExp{e});
    }
    return TruncatedSeries(sum, order);
}

} // namespace

TEST(TruncatedSeries, Invariants) {
    EXPECT_THROW(TruncatedSeries(QPoly(1), 0), OutOfRange);
    EXPECT_THROW(TruncatedSeries(QPoly::q(-1), 3), OutOfRange);
    const TruncatedSeries s(QPoly::from_coeffs({1, 2, 3, 4}), 2);
    EXPECT_EQ(s.poly(), QPoly::from_coeffs({1, 2}));
    EXPECT_NE(series({1}, 2), series({1}, 3));
    EXPECT_EQ(s.to_string(), "1 + 2*q + O(q^2)");
}

TEST(TruncatedSeries, FirstMismatch) {
    EXPECT_EQ(first_mismatch(series({1, -1, 0, 1}, 4), series({1, -1, 0, 1}, 6)), -1);
    EXPECT_EQ(first_mismatch(series({1, -1, 0, 1}, 4), series({1, -1, 1}, 4)), 2);
}

TEST(ThetaF, Examples) {
    EXPECT_EQ(theta_f(mq(2), mq(1), 8), series({1, -1, -1, 0, 0, 1, 0, 1}, 8));
    EXPECT_EQ(theta_f(mq(4), mq(1), 8), series({1, -1, 0, 0, -1, 0, 0, 1}, 8));
}

TEST(ThetaF, MatchesBruteForceWindow) {
    for (auto [a, b] : {std::pair{mq(2), mq(1)}, {mq(4), mq(1)}, {mq(1), mq(3)}, {pq(3), pq(1)}, {mq(5), pq(2)}})
        ASSERT_EQ(theta_f(a, b, 40), naive_theta(a, b, 40)) << a.to_string() << " " << b.to_string();
}

TEST(ThetaF, Symmetric) {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> e(1, 9), s(0, 1);
    for (int trial = 0; trial < 40; ++trial) {
        const SignedMonomial a = SignedMonomial::q(e(rng), s(rng) ? 1 : -1);
        const SignedMonomial b = SignedMonomial::q(e(rng), s(rng) ? 1 : -1);
        ASSERT_EQ(theta_f(a, b, 30), theta_f(b, a, 30));
    }
}

TEST(ThetaF, Divergent) {
    EXPECT_THROW(theta_f(mq(-1), mq(1), 8), DivergentSeries);
    EXPECT_THROW(false_theta_psi(mq(0), mq(0), 8), DivergentSeries);
    EXPECT_THROW(theta_f_product(mq(-2), mq(1), 8), DivergentProduct);
}

TEST(JacobiTripleProduct, SumEqualsProduct) {
    for (auto [a, b] : {std::pair{mq(2), mq(1)}, {mq(4), mq(1)}, {mq(6), mq(1)}, {mq(1), mq(3)}, {mq(1), mq(1)}})
        ASSERT_EQ(theta_f(a, b, 40), theta_f_product(a, b, 40)) << a.to_string() << " " << b.to_string();
}

TEST(FalseTheta, Examples) {
    EXPECT_EQ(false_theta_psi(pq(3), pq(1), 11), series({1, -1, 0, 1, 0, 0, -1, 0, 0, 0, 1}, 11));
    EXPECT_EQ(false_theta_psi(pq(1), pq(1), 20), series({1}, 20));
}

TEST(FalseTheta, ReflectionIdentity) {
    // Psi(a,b) + Psi(b,a) = 2
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> e(1, 9), s(0, 1);
    for (int trial = 0; trial < 40; ++trial) {
        const SignedMonomial a = SignedMonomial::q(e(rng), s(rng) ? 1 : -1);
        const SignedMonomial b = SignedMonomial::q(e(rng), s(rng) ? 1 : -1);
        ASSERT_EQ(false_theta_psi(a, b, 30) + false_theta_psi(b, a, 30), series({2}, 30));
    }
}

TEST(FalseTheta, SparseSignPattern) {
    for (int k : {2, 3}) {
        const TruncatedSeries s = false_theta_psi(pq(2 * k - 1), pq(1), 100);
        for (int i = 0; i < 100; ++i) {
            const BigInt c = s.coeff(i);
            ASSERT_TRUE(c == 0 || c == 1 || c == -1) << "k=" << k << " i=" << i;
        }
    }
}

TEST(Euler, Examples) {
    EXPECT_EQ(euler_inf(8), series({1, -1, -1, 0, 0, 1, 0, 1}, 8));
    EXPECT_EQ(euler_inf(1), series({1}, 1));
    EXPECT_EQ(euler_inf(50), theta_f(mq(2), mq(1), 50));
}

TEST(AndrewsGordon, Examples) {
    EXPECT_EQ(andrews_gordon_rhs(2, 8), series({1, -1, 0, 0, -1, 0, 0, 1}, 8));
    EXPECT_EQ(andrews_gordon_rhs(3, 1), series({1}, 1));
    EXPECT_THROW(andrews_gordon_rhs(1, 8), OutOfRange);
}

TEST(AndrewsGordon, EqualsTheta) {
    for (int k = 2; k <= 5; ++k) ASSERT_EQ(andrews_gordon_rhs(k, 60), theta_f(mq(2 * k), mq(1), 60)) << "k=" << k;
}

TEST(AndrewsGordon, BothIndexReadingsAgree) {
    // N_j = n_j + ... + n_{k-1} instead of n_1 + ... + n_j, by direct double loop for k = 3.
    const int order = 40;
    const QExp bound = QExp::whole(order);
    QPoly sum;
    for (int n1 = 0; n1 < order; ++n1)
        for (int n2 = 0; n2 < order; ++n2) {
            const std::int64_t big1 = n1 + n2, big2 = n2; // reversed reading
            const std::int64_t e = big1 * big1 + big2 * big2 + big1 + big2;
            if (e >= order) continue;
            sum += (QPoly::q(e) * inverse_qfactorial(n1, order).poly() * inverse_qfactorial(n2, order).poly()).truncated(bound);
        }
    EXPECT_EQ(TruncatedSeries(sum, order) * euler_inf(order), andrews_gordon_rhs(3, order));
}

TEST(RamanujanP200, Examples) {
    EXPECT_EQ(ramanujan_p200(P200Form::alternating, 11), series({1, -1, 0, 1, 0, 0, -1, 0, 0, 0, 1}, 11));
    EXPECT_EQ(ramanujan_p200(P200Form::p200, 1), series({1}, 1));
}

TEST(RamanujanP200, FormsAgree) {
    const TruncatedSeries alt = ramanujan_p200(P200Form::alternating, 60);
    EXPECT_EQ(ramanujan_p200(P200Form::entry9, 60), alt);
    EXPECT_EQ(ramanujan_p200(P200Form::p200, 60), alt);
    EXPECT_EQ(false_theta_psi(pq(3), pq(1), 60), alt);
}
