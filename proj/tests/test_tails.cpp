#include <gtest/gtest.h>

#include "qtail/tails.hpp"

using namespace qtail;

namespace {

SignedMonomial mq(std::int64_t e) { return SignedMonomial::q(e, -1); }
SignedMonomial pq(std::int64_t e) { return SignedMonomial::q(e, 1); }
TruncatedSeries series(std::vector<long long> coeffs, int order) { return TruncatedSeries(QPoly::from_coeffs(coeffs), order); }

const BraidWord kFigureEight{3, {1, -2, 1, -2}};
const BraidWord k920 = parse_braid("4: 1 1 1 -2 1 3 -2 3 3");

} // namespace

TEST(TailExtract, MortonFamilyIsThetaFunction) {
    for (int k = 1; k <= 4; ++k) {
        const TailReport r = tail_extract(morton_source(-(2 * k + 1)), 8, 8);
        ASSERT_EQ(r.status, TailStatus::stabilized) << k;
        ASSERT_EQ(r.stabilized, theta_f(mq(2 * k), mq(1), 8)) << k;
    }
}

TEST(TailExtract, ReportShape) {
    const TailReport r = tail_extract(statesum_source(torus_braid(2, -3)), 5, 4);
    EXPECT_EQ(r.colors, (std::vector<int>{1, 2, 3, 4, 5}));
    EXPECT_EQ(r.prefixes.size(), 5u);
    EXPECT_EQ(r.agreement, (std::vector<int>{1, 2, 3, 4}));
    EXPECT_EQ(r.stabilized, series({1, -1, -1}, 4));
    EXPECT_EQ(r.prefixes[1], series({1, -1}, 2));
}

TEST(TailExtract, SingleColorIsNotStabilized) {
    const TailReport r = tail_extract(statesum_source(torus_braid(2, -3)), 1, 5);
    EXPECT_EQ(r.status, TailStatus::not_stabilized);
    EXPECT_TRUE(r.agreement.empty());
    EXPECT_EQ(r.stabilized, series({1}, 1));
}

TEST(TailExtract, ArgumentChecks) {
    EXPECT_THROW(tail_extract(walk25_source(), 0, 5), OutOfRange);
    EXPECT_THROW(tail_extract(walk25_source(), 3, 0), OutOfRange);
    EXPECT_THROW(multi_extract(walk25_source(), 3, 3, 3, Side::tail), OutOfRange);
}

TEST(TailExtract, HikamiFamilyIsFalseTheta) {
    for (int k = 1; k <= 3; ++k) {
        const TailReport r = tail_extract(hikami_source(-2 * k), 8, 8);
        ASSERT_EQ(r.status, TailStatus::stabilized);
        ASSERT_EQ(r.stabilized, false_theta_psi(pq(2 * k - 1), pq(1), 8)) << k;
    }
}

TEST(TailExtract, FigureEight) {
    const TailReport r = tail_extract(statesum_source(kFigureEight), 6, 6);
    EXPECT_EQ(r.status, TailStatus::stabilized);
    EXPECT_EQ(r.stabilized, series({1, -1, -1, 0, 0, 1}, 6));
    // Amphichiral: both sides agree.
    EXPECT_EQ(head_extract(statesum_source(kFigureEight), 6, 6).stabilized, r.stabilized);
}

TEST(HeadExtract, HeadIsTailOfMirror) {
    for (const BraidWord& b : {torus_braid(2, 5), torus_braid(3, 4), k920}) {
        const TailReport head = head_extract(statesum_source(b), 4, 4);
        const TailReport tail = tail_extract(statesum_source(mirror_braid(b)), 4, 4);
        ASSERT_EQ(head.prefixes, tail.prefixes) << format_braid(b);
        ASSERT_EQ(head.status, tail.status);
    }
}

TEST(HeadExtract, NegativeTwoStrandHeadsAreTrivial) {
    for (int m = 3; m <= 7; ++m) {
        const TailReport r = head_extract(skein_source(-m), 6, 5);
        ASSERT_EQ(r.status, TailStatus::stabilized) << m;
        ASSERT_EQ(r.stabilized, series({1}, 5)) << m;
    }
}

TEST(TailExtract, SourcesAgree) {
    const TailReport a = tail_extract(statesum_source(torus_braid(2, -5)), 5, 5);
    EXPECT_EQ(tail_extract(morton_source(-5), 5, 5), a);
    EXPECT_EQ(tail_extract(skein_source(-5), 5, 5).prefixes, a.prefixes);
    EXPECT_EQ(tail_extract(psi_source(2, -5), 5, 5).prefixes, a.prefixes);
    EXPECT_EQ(head_extract(walk25_source(), 5, 5).prefixes, a.prefixes);
}

TEST(TailExtract, AlternatingFamiliesAgreeToDepthN) {
    for (const BraidWord& b : {torus_braid(2, -3), torus_braid(2, -7), kFigureEight, torus_braid(2, -4)}) {
        const TailReport r = tail_extract(statesum_source(b), 5, 5);
        for (std::size_t i = 0; i < r.agreement.size(); ++i) ASSERT_GE(r.agreement[i], r.colors[i]) << format_braid(b);
    }
}

TEST(MultiExtract, ModulusOneIsPlainExtraction) {
    const auto v = multi_head_extract(psi_source(2, 5), 5, 5, 1);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0], head_extract(psi_source(2, 5), 5, 5));
}

TEST(MultiExtract, ParityHeadsOfThreeStrandTorusKnots) {
    const auto v = multi_head_extract(psi_source(3, 4), 12, 8, 2);
    ASSERT_EQ(v.size(), 2u);
    EXPECT_EQ(v[0].colors, (std::vector<int>{1, 3, 5, 7, 9, 11}));
    EXPECT_EQ(v[1].colors, (std::vector<int>{2, 4, 6, 8, 10, 12}));
    EXPECT_EQ(v[0].status, TailStatus::stabilized);
    EXPECT_EQ(v[1].status, TailStatus::stabilized);
    EXPECT_EQ(v[0].stabilized, series({1, -1, 0, 0, 0, 0, -1}, 8));
    EXPECT_EQ(v[1].stabilized, series({1, 0, -1, -1, 0, 0, 0, 1}, 8));
    EXPECT_NE(v[0].stabilized, v[1].stabilized);

    const auto w = multi_head_extract(psi_source(3, 5), 12, 6, 2);
    EXPECT_NE(w[0].stabilized, w[1].stabilized);
}

TEST(MultiExtract, TwoStrandParitiesCoincide) {
    const auto v = multi_head_extract(psi_source(2, 5), 12, 8, 2);
    EXPECT_EQ(v[0].stabilized, v[1].stabilized);
    EXPECT_EQ(v[0].stabilized, series({1, -1, 0, 0, -1, 0, 0, 1}, 8));
}

TEST(MultiExtract, SplitByParityStatus) {
    const TailReport r = head_extract(psi_source(3, 4), 8, 3);
    EXPECT_EQ(r.status, TailStatus::split_by_parity);
}

TEST(TailProduct, Algebra) {
    const TruncatedSeries a = theta_f(mq(2), mq(1), 10), b = false_theta_psi(pq(3), pq(1), 8), c = euler_inf(12);
    EXPECT_EQ(tail_product(a, series({1}, 20)), a);
    EXPECT_EQ(tail_product(tail_product(a, b), c), tail_product(a, tail_product(b, c)));
    EXPECT_EQ(tail_product(a, b), tail_product(b, a));
    EXPECT_EQ(tail_product(a, b).order(), 8);
}

TEST(NineTwenty, TailsAreProducts) {
    const JonesSource src = statesum_source(k920);
    const TailReport tail = tail_extract(src, 5, 5);
    const TruncatedSeries f = theta_f(mq(2), mq(1), 5), psi = false_theta_psi(pq(3), pq(1), 5);
    EXPECT_EQ(tail.status, TailStatus::stabilized);
    EXPECT_EQ(tail.stabilized, tail_product(f, f));
    const TailReport head = head_extract(src, 5, 5);
    EXPECT_EQ(head.status, TailStatus::stabilized);
    EXPECT_EQ(head.stabilized, tail_product(tail_product(psi, psi), f));
}

TEST(TailStatus, StringRoundTrip) {
    for (TailStatus s : {TailStatus::stabilized, TailStatus::not_stabilized, TailStatus::split_by_parity})
        EXPECT_EQ(tail_status_from_string(to_string(s)), s);
    EXPECT_THROW(tail_status_from_string("nope"), SyntaxError);
}
