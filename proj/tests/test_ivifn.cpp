#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "ivif/error.hpp"
#include "ivif/ivifn.hpp"

using ivif::Ivifn;
using ivif::Ordering;

namespace {

void ExpectNear(const Ivifn& a, const Ivifn& b, double tol = 1e-12) {
    EXPECT_NEAR(a.lm(), b.lm(), tol);
    EXPECT_NEAR(a.rm(), b.rm(), tol);
    EXPECT_NEAR(a.ln(), b.ln(), tol);
    EXPECT_NEAR(a.rn(), b.rn(), tol);
}

// Straight transcriptions used as oracles, kept apart from the library code.
double OracleScore(double lm, double rm, double ln, double rn) {
    return ((lm + rm) * (lm + ln) - (ln + rn) * (rm + rn)) / 2.0;
}

double OracleAccuracy(double lm, double rm, double ln, double rn) {
    return ((1 - lm + rm) * (1 - lm - ln) + (1 - ln + rn) * (1 - rm - rn)) / 2.0;
}

}  // namespace

TEST(Ivifn, RejectsInvalidBounds) {
    EXPECT_THROW(Ivifn(0.6, 0.5, 0.1, 0.2), ivif::DomainError);
    EXPECT_THROW(Ivifn(0.1, 0.2, 0.4, 0.3), ivif::DomainError);
    EXPECT_THROW(Ivifn(0.5, 0.7, 0.2, 0.4), ivif::DomainError);
    EXPECT_THROW(Ivifn(-0.1, 0.2, 0.2, 0.3), ivif::DomainError);
    EXPECT_THROW(Ivifn(0.1, 1.2, 0.0, 0.0), ivif::DomainError);
    EXPECT_THROW(Ivifn(NAN, 0.2, 0.2, 0.3), ivif::DomainError);
    EXPECT_NO_THROW(Ivifn(0.0, 0.0, 0.0, 0.0));
    EXPECT_NO_THROW(Ivifn(0.3, 0.6, 0.1, 0.4));
}

TEST(Ivifn, Constants) {
    EXPECT_EQ(Ivifn::max(), Ivifn(1, 1, 0, 0));
    EXPECT_EQ(Ivifn::min(), Ivifn(0, 0, 1, 1));
}

TEST(Algebra, ComplementSwapsIntervals) {
    EXPECT_EQ(ivif::complement(Ivifn(0.5, 0.6, 0.25, 0.3)), Ivifn(0.25, 0.3, 0.5, 0.6));
    const Ivifn x(0.12, 0.37, 0.2, 0.55);
    EXPECT_EQ(ivif::complement(ivif::complement(x)), x);
    EXPECT_EQ(ivif::complement(Ivifn::max()), Ivifn::min());
}

TEST(Algebra, AddingMinimumIsIdentity) {
    const Ivifn x(0.31, 0.42, 0.18, 0.44);
    ExpectNear(ivif::add(x, Ivifn::min()), x);
}

TEST(Algebra, UnitScaleAndPower) {
    const Ivifn x(0.31, 0.42, 0.18, 0.44);
    ExpectNear(ivif::scale(1.0, x), x);
    ExpectNear(ivif::power(x, 1.0), x);
}

TEST(Algebra, ProductOfEqualOperands) {
    const Ivifn x(0.5, 0.5, 0.3, 0.3);
    ExpectNear(ivif::mul(x, x), Ivifn(0.25, 0.25, 0.3 + 0.3 - 0.09, 0.3 + 0.3 - 0.09));
    ExpectNear(ivif::mul(x, x), Ivifn(0.25, 0.25, 0.51, 0.51));
}

TEST(Algebra, JoinAndMeetAreComponentwise) {
    const Ivifn a(0.2, 0.5, 0.1, 0.3), b(0.3, 0.4, 0.2, 0.25);
    EXPECT_EQ(ivif::join(a, b), Ivifn(0.3, 0.5, 0.1, 0.25));
    EXPECT_EQ(ivif::meet(a, b), Ivifn(0.2, 0.4, 0.2, 0.3));
}

TEST(Algebra, ScaleAndPowerFormulas) {
    const Ivifn x(0.2, 0.5, 0.1, 0.3);
    ExpectNear(ivif::scale(2.0, x), Ivifn(1 - 0.64, 1 - 0.25, 0.01, 0.09));
    ExpectNear(ivif::power(x, 2.0), Ivifn(0.04, 0.25, 1 - 0.81, 1 - 0.49));
}

TEST(Algebra, NonPositiveMultiplierIsRejected) {
    const Ivifn x(0.2, 0.5, 0.1, 0.3);
    EXPECT_THROW(ivif::scale(0.0, x), ivif::DomainError);
    EXPECT_THROW(ivif::scale(-1.0, x), ivif::DomainError);
    EXPECT_THROW(ivif::power(x, 0.0), ivif::DomainError);
    EXPECT_THROW(ivif::power(x, -2.0), ivif::DomainError);
}

TEST(Hesitancy, Examples) {
    auto h = ivif::hesitancy(Ivifn(0.5, 0.6, 0.25, 0.3));
    EXPECT_NEAR(h.lo, 0.10, 1e-12);
    EXPECT_NEAR(h.hi, 0.25, 1e-12);
    h = ivif::hesitancy(Ivifn::max());
    EXPECT_EQ(h.lo, 0.0);
    EXPECT_EQ(h.hi, 0.0);
    h = ivif::hesitancy(Ivifn(0, 0, 0, 0));
    EXPECT_EQ(h.lo, 1.0);
    EXPECT_EQ(h.hi, 1.0);
}

TEST(Score, Extremes) {
    EXPECT_DOUBLE_EQ(ivif::score_wc(Ivifn::max()), 1.0);
    EXPECT_DOUBLE_EQ(ivif::score_wc(Ivifn::min()), -1.0);
    EXPECT_DOUBLE_EQ(ivif::accuracy_wc(Ivifn(0, 0, 0, 0)), 1.0);
    EXPECT_DOUBLE_EQ(ivif::accuracy_wc(Ivifn::max()), 0.0);
}

TEST(Score, AggregatedCellAgainstOracle) {
    const double expected = OracleScore(0.580, 0.682, 0.154, 0.212);
    EXPECT_NEAR(expected, 0.2996, 5e-5);
    EXPECT_NEAR(ivif::score_wc(Ivifn(0.580, 0.682, 0.154, 0.212)), expected, 1e-12);
}

TEST(Score, AverageSolutionAccuracyAgainstOracle) {
    const double expected = OracleAccuracy(0.607, 0.720, 0.142, 0.205);
    EXPECT_NEAR(expected, 0.1795, 5e-5);
    EXPECT_NEAR(ivif::accuracy_wc(Ivifn(0.607, 0.720, 0.142, 0.205)), expected, 1e-12);
}

TEST(Score, SimpleScoreAndAccuracy) {
    const Ivifn x(0.668, 0.782, 0.103, 0.172);
    EXPECT_NEAR(ivif::score_simple(x), (0.668 + 0.782 - 0.103 - 0.172) / 2.0, 1e-12);
    EXPECT_NEAR(ivif::accuracy_simple(x), (0.668 + 0.782 + 0.103 + 0.172) / 2.0, 1e-12);
    // The inputs are themselves rounded to three places, so the reference
    // values only agree to about one unit in the third decimal.
    EXPECT_NEAR(ivif::score_simple(x), 0.588, 1e-3);
    EXPECT_NEAR(ivif::accuracy_simple(x), 0.863, 1e-3);
    EXPECT_DOUBLE_EQ(ivif::score_simple(Ivifn::max()), 1.0);
    EXPECT_DOUBLE_EQ(ivif::accuracy_simple(Ivifn::max()), 1.0);
    EXPECT_DOUBLE_EQ(ivif::score_simple(Ivifn(0, 0, 0, 0)), 0.0);
    EXPECT_DOUBLE_EQ(ivif::accuracy_simple(Ivifn(0, 0, 0, 0)), 0.0);
}

TEST(Compare, Examples) {
    EXPECT_EQ(ivif::compare(Ivifn::max(), Ivifn::min()), Ordering::Greater);
    EXPECT_EQ(ivif::compare(Ivifn::min(), Ivifn::max()), Ordering::Less);
    const Ivifn x(0.3, 0.4, 0.2, 0.5);
    EXPECT_EQ(ivif::compare(x, x), Ordering::Equal);
    EXPECT_EQ(ivif::compare(Ivifn(0.580, 0.682, 0.154, 0.212), Ivifn(0.607, 0.720, 0.142, 0.205)), Ordering::Less);
}

TEST(Compare, AccuracyBreaksScoreTies) {
    // Both have score 0 but different accuracy.
    const Ivifn a(0.0, 0.0, 0.0, 0.0);
    const Ivifn b(0.2, 0.2, 0.2, 0.2);
    ASSERT_NEAR(ivif::score_wc(a), ivif::score_wc(b), 1e-15);
    const auto expected = OracleAccuracy(0, 0, 0, 0) > OracleAccuracy(0.2, 0.2, 0.2, 0.2) ? Ordering::Greater
                                                                                         : Ordering::Less;
    EXPECT_EQ(ivif::compare(a, b), expected);
}

TEST(Compare, DifferencesInsideToleranceAreTies) {
    const Ivifn a(0.3, 0.4, 0.2, 0.5);
    const Ivifn b(0.3 + 1e-12, 0.4, 0.2, 0.5);
    EXPECT_EQ(ivif::compare(a, b), Ordering::Equal);
}

TEST(Distance, Examples) {
    const Ivifn x(0.2, 0.5, 0.1, 0.3);
    EXPECT_EQ(ivif::dist_hybrid(x, x), 0.0);
    EXPECT_DOUBLE_EQ(ivif::dist_hamming(Ivifn::max(), Ivifn::min()), 1.0);
    EXPECT_DOUBLE_EQ(ivif::dist_hausdorff(Ivifn::max(), Ivifn::min()), 0.5);
    EXPECT_DOUBLE_EQ(ivif::dist_hybrid(Ivifn::max(), Ivifn::min()), 1.5);
}

TEST(Distance, HybridAgainstOracle) {
    const Ivifn a(0.775, 0.878, 0.050, 0.100), b(0.607, 0.720, 0.142, 0.205);
    const double diffs[] = {0.168, 0.158, 0.092, 0.105};
    const double oracle = (diffs[0] + diffs[1] + diffs[2] + diffs[3]) / 4.0 +
                          *std::max_element(std::begin(diffs), std::end(diffs)) / 2.0;
    EXPECT_NEAR(oracle, 0.2148, 5e-5);
    EXPECT_NEAR(ivif::dist_hybrid(a, b), oracle, 1e-12);
}
