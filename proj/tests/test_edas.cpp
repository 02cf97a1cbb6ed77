#include <gtest/gtest.h>

#include <cmath>

#include "golden.hpp"
#include "ivif/edas.hpp"
#include "ivif/error.hpp"

using ivif::Branch;
using ivif::CptParams;
using ivif::Grid;
using ivif::Ivifn;

namespace {

double Slope(double p, double a) {
    const double s = std::pow(p, a) + std::pow(1 - p, a);
    const double w = std::pow(p, a) / std::pow(s, 1 / a);
    return w * (a / p - (std::pow(p, a - 1) - std::pow(1 - p, a - 1)) / s);
}

}  // namespace

TEST(CptParams, DefaultsAndValidation) {
    const CptParams p;
    EXPECT_EQ(p.alpha, 0.61);
    EXPECT_EQ(p.beta, 0.69);
    EXPECT_EQ(p.gamma, 0.88);
    EXPECT_EQ(p.delta, 0.88);
    EXPECT_EQ(p.rho, 2.25);
    EXPECT_NO_THROW(p.validate());
    EXPECT_NO_THROW(p.with("alpha", 1.0));
    EXPECT_THROW(p.with("alpha", 0.0), ivif::DomainError);
    EXPECT_THROW(p.with("gamma", 1.2), ivif::DomainError);
    EXPECT_THROW(p.with("rho", 1.0), ivif::DomainError);
    EXPECT_THROW(p.with("lambda", 0.5), ivif::DomainError);
    EXPECT_EQ(p.with("delta", 0.25).get("delta"), 0.25);
}

TEST(CptWeight, CaseStudyCells) {
    const CptParams p;
    EXPECT_NEAR(ivif::cpt_weight(0.280, Branch::Gain, p), 0.308, 5e-4);
    EXPECT_NEAR(ivif::cpt_weight(0.280, Branch::Loss, p), 0.314, 5e-4);
}

TEST(CptWeight, Endpoints) {
    const CptParams p;
    for (auto b : {Branch::Gain, Branch::Loss}) {
        EXPECT_EQ(ivif::cpt_weight(0.0, b, p), 0.0);
        EXPECT_EQ(ivif::cpt_weight(1.0, b, p), 1.0);
    }
}

TEST(CptWeight, SlopeMatchesFiniteDifference) {
    const CptParams p;
    for (double x = 0.05; x < 0.96; x += 0.05) {
        for (auto [b, a] : {std::pair{Branch::Gain, p.alpha}, std::pair{Branch::Loss, p.beta}}) {
            const double h = 1e-6;
            const double fd = (ivif::cpt_weight(x + h, b, p) - ivif::cpt_weight(x - h, b, p)) / (2 * h);
            EXPECT_NEAR(fd, Slope(x, a), 1e-5) << x;
        }
    }
}

TEST(AverageSolution, IdenticalColumnIsItself) {
    const Ivifn x(0.2, 0.4, 0.3, 0.5);
    ivif::GroupMatrix m{Grid<Ivifn>(3, 1, x), true};
    const auto avg = ivif::average_solution(m);
    EXPECT_NEAR(avg[0].lm(), x.lm(), 1e-12);
    EXPECT_NEAR(avg[0].rm(), x.rm(), 1e-12);
    EXPECT_NEAR(avg[0].ln(), x.ln(), 1e-12);
    EXPECT_NEAR(avg[0].rn(), x.rn(), 1e-12);
}

TEST(AverageSolution, CaseStudyColumns) {
    const auto avg = ivif::average_solution(golden::GroupMatrix());
    for (std::size_t c = 0; c < 6; ++c) {
        const auto& ref = golden::kAverage[c];
        EXPECT_NEAR(avg[c].lm(), ref[0], 0.002) << c;
        EXPECT_NEAR(avg[c].rm(), ref[1], 0.002) << c;
        EXPECT_NEAR(avg[c].ln(), ref[2], 0.002) << c;
        EXPECT_NEAR(avg[c].rn(), ref[3], 0.002) << c;
    }
}

TEST(AverageSolution, EmptyIsRejected) {
    EXPECT_THROW(ivif::average_solution(ivif::GroupMatrix{}), ivif::ShapeError);
}

TEST(Branch, Examples) {
    const Ivifn avg(0.607, 0.720, 0.142, 0.205);
    EXPECT_EQ(ivif::branch_of(avg, avg), Branch::Gain);
    EXPECT_EQ(ivif::branch_of(Ivifn(0.775, 0.878, 0.050, 0.100), avg), Branch::Gain);
    EXPECT_EQ(ivif::branch_of(Ivifn(0.580, 0.682, 0.154, 0.212), avg), Branch::Loss);
}

TEST(Branch, ZeroPatternOfTheCaseStudy) {
    const auto m = golden::GroupMatrix();
    const auto avg = ivif::average_solution(m);
    const auto d = ivif::pda_nda(m, avg, CptParams{});
    for (std::size_t r = 0; r < 5; ++r) {
        for (std::size_t c = 0; c < 6; ++c) {
            EXPECT_EQ(d.pda(r, c) > 0, golden::kPda[r][c] > 0) << r << "," << c;
            EXPECT_EQ(d.nda(r, c) > 0, golden::kNda[r][c] > 0) << r << "," << c;
        }
    }
}

TEST(PdaNda, CaseStudyCells) {
    const auto m = golden::GroupMatrix();
    const auto d = ivif::pda_nda(m, ivif::average_solution(m), CptParams{});
    EXPECT_NEAR(d.pda(1, 0), 1.436, 0.01);
    EXPECT_EQ(d.nda(1, 0), 0.0);
    EXPECT_EQ(d.pda(0, 0), 0.0);
    EXPECT_NEAR(d.nda(0, 0), 0.740, 0.01);
}

TEST(PdaNda, CellAtAverageContributesNothing) {
    const Ivifn x(0.2, 0.4, 0.3, 0.5);
    ivif::GroupMatrix m{Grid<Ivifn>(2, 1, x), true};
    const auto d = ivif::pda_nda(m, {x}, CptParams{});
    EXPECT_EQ(d.pda(0, 0), 0.0);
    EXPECT_EQ(d.nda(0, 0), 0.0);
}

TEST(PdaNda, ZeroAccuracyAverageNamesTheAttribute) {
    ivif::GroupMatrix m{Grid<Ivifn>(2, 1, Ivifn::max()), true};
    try {
        ivif::pda_nda(m, {Ivifn::max()}, CptParams{}, {"HT9"});
        FAIL() << "expected an error";
    } catch (const ivif::DegenerateError& e) {
        EXPECT_NE(std::string(e.what()).find("HT9"), std::string::npos);
    }
}

TEST(RelativeWeights, CaseStudyAndEdgeCases) {
    const auto m = golden::GroupMatrix();
    const auto avg = ivif::average_solution(m);
    const auto g = ivif::relative_weights(m, avg, golden::ReferenceWeights(), CptParams{});
    EXPECT_NEAR(g(0, 0), 0.202, 0.002);
    EXPECT_NEAR(g(1, 0), 0.215, 0.002);

    ivif::GroupMatrix one{Grid<Ivifn>::from_rows({{Ivifn(0.1, 0.2, 0.6, 0.7)}, {Ivifn(0.7, 0.8, 0.1, 0.2)}}), true};
    const auto full = ivif::relative_weights(one, ivif::average_solution(one), ivif::WeightVector({1.0}), CptParams{});
    EXPECT_EQ(full(0, 0), 1.0);
    EXPECT_EQ(full(1, 0), 1.0);

    const auto same = ivif::relative_weights(m, avg, golden::ReferenceWeights(), CptParams{}.with("beta", 0.61));
    for (std::size_t c = 0; c < 6; ++c) {
        for (std::size_t r = 1; r < 5; ++r) EXPECT_EQ(same(r, c), same(0, c));
    }
}

TEST(ScoreAndRank, CaseStudy) {
    const auto t = ivif::score_and_rank(golden::GroupMatrix(), golden::ReferenceWeights(), CptParams{});
    for (std::size_t r = 0; r < 5; ++r) {
        EXPECT_NEAR(t.nsp[r], golden::kNsp[r], 0.01) << r;
        EXPECT_NEAR(t.nsn[r], golden::kNsn[r], 0.01) << r;
        EXPECT_NEAR(t.scores[r], golden::kScores[r], 0.01) << r;
        EXPECT_EQ(t.pda(r, 0) * t.nda(r, 0), 0.0);
    }
    EXPECT_EQ(t.ranking, std::vector<std::size_t>(golden::kRanking.begin(), golden::kRanking.end()));
}

TEST(ScoreAndRank, IdenticalAlternativesTieByIndex) {
    const Ivifn a(0.2, 0.4, 0.3, 0.5), b(0.5, 0.6, 0.1, 0.2);
    ivif::GroupMatrix m{Grid<Ivifn>::from_rows({{b, a}, {a, b}, {b, a}}), true};
    const auto t = ivif::score_and_rank(m, ivif::WeightVector({0.7, 0.3}), CptParams{});
    EXPECT_EQ(t.scores[0], t.scores[2]);
    const auto pos0 = std::find(t.ranking.begin(), t.ranking.end(), 0) - t.ranking.begin();
    const auto pos2 = std::find(t.ranking.begin(), t.ranking.end(), 2) - t.ranking.begin();
    EXPECT_LT(pos0, pos2);
}

TEST(ScoreAndRank, AllEqualGivesHalf) {
    ivif::GroupMatrix m{Grid<Ivifn>(3, 2, Ivifn(0.2, 0.4, 0.3, 0.5)), true};
    const auto t = ivif::score_and_rank(m, ivif::WeightVector({0.5, 0.5}), CptParams{});
    for (double s : t.scores) EXPECT_EQ(s, 0.5);
    EXPECT_TRUE(t.sp_degenerate);
    EXPECT_TRUE(t.sn_degenerate);
}

TEST(ScoreAndRank, NeedsTwoAlternatives) {
    ivif::GroupMatrix m{Grid<Ivifn>(1, 2, Ivifn(0.2, 0.4, 0.3, 0.5)), true};
    EXPECT_THROW(ivif::score_and_rank(m, ivif::WeightVector({0.5, 0.5}), CptParams{}), ivif::DegenerateError);
}

TEST(CrispEdas, AverageExamples) {
    EXPECT_EQ(ivif::crisp_average(Grid<double>::from_rows({{1.0}, {2.0}, {3.0}}))[0], 2.0);
    EXPECT_EQ(ivif::crisp_average(Grid<double>::from_rows({{0.4}, {0.4}}))[0], 0.4);
    EXPECT_DOUBLE_EQ(ivif::crisp_average(Grid<double>::from_rows({{0.2}, {0.8}}))[0], 0.5);
}

TEST(CrispEdas, BenefitColumnDistances) {
    const auto m = Grid<double>::from_rows({{1.0}, {2.0}, {3.0}});
    const auto t = ivif::crisp_edas(m, {{"x", ivif::AttributeKind::Benefit}}, ivif::WeightVector({1.0}), CptParams{});
    EXPECT_NEAR(t.pda(2, 0), std::pow(1.0, 0.88) / 2.0, 1e-12);
    EXPECT_NEAR(t.nda(0, 0), 2.25 * std::pow(1.0, 0.88) / 2.0, 1e-12);
    EXPECT_EQ(t.pda(1, 0), 0.0);
    EXPECT_EQ(t.nda(1, 0), 0.0);
    EXPECT_EQ(t.ranking, (std::vector<std::size_t>{2, 1, 0}));
}

TEST(CrispEdas, CostColumnFlipsTheSides) {
    const auto m = Grid<double>::from_rows({{1.0}, {2.0}, {3.0}});
    const auto t = ivif::crisp_edas(m, {{"x", ivif::AttributeKind::Cost}}, ivif::WeightVector({1.0}), CptParams{});
    EXPECT_NEAR(t.pda(0, 0), 0.5, 1e-12);
    EXPECT_NEAR(t.nda(2, 0), 1.125, 1e-12);
    EXPECT_EQ(t.ranking, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(CrispEdas, AllRowsEqualAndBadMean) {
    const auto flat = Grid<double>::from_rows({{2.0, 5.0}, {2.0, 5.0}});
    const auto attrs = std::vector<ivif::AttributeSpec>{{"a", ivif::AttributeKind::Benefit}, {"b", ivif::AttributeKind::Cost}};
    const auto t = ivif::crisp_edas(flat, attrs, ivif::WeightVector({0.5, 0.5}), CptParams{});
    EXPECT_EQ(t.scores[0], t.scores[1]);
    EXPECT_EQ(t.scores[0], 0.5);

    const auto bad = Grid<double>::from_rows({{-1.0, 5.0}, {1.0, 5.0}});
    try {
        ivif::crisp_edas(bad, attrs, ivif::WeightVector({0.5, 0.5}), CptParams{});
        FAIL() << "expected an error";
    } catch (const ivif::Error& e) {
        EXPECT_NE(std::string(e.what()).find("a"), std::string::npos);
    }
}
