// Copyright 2026 The qsn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsn/discrimination.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "test_util.hpp"

namespace qsn {
namespace {

constexpr DiscriminationTask kTaskA{Case::same_vs_different};
constexpr DiscriminationTask kTaskB{Case::similar_vs_different};

TEST(ErrorProbability, ClampsRoundingAndRejectsOutliers) {
    EXPECT_EQ(ErrorProbability(1.0 + 1e-13).value(), 1.0);
    EXPECT_EQ(ErrorProbability(-1e-13).value(), 0.0);
    EXPECT_EQ(static_cast<double>(ErrorProbability(0.3)), 0.3);
    EXPECT_THROW(ErrorProbability(1.1), std::domain_error);
    EXPECT_THROW(ErrorProbability(-1e-9), std::domain_error);
}

TEST(Discrimination, OverlapExamples) {
    EXPECT_NEAR(local_plus_overlap(PhaseConfig({0.0, 0.0})), 1.0, 1e-16);
    EXPECT_NEAR(local_plus_overlap(PhaseConfig({kPi, 0.0})), 0.0, 1e-16);
    EXPECT_NEAR(local_plus_overlap(PhaseConfig({kPi / 2, 0.0})), 0.5, 1e-15);
    EXPECT_NEAR(local_plus_overlap(PhaseConfig({0.4, 1.0, 0.9, 0.3})), 1.0, 1e-15);
    EXPECT_NEAR(w_overlap(PhaseConfig({0.0, kPi})), 0.0, 1e-16);
    EXPECT_NEAR(w_overlap(PhaseConfig::uniform(7, 2.5)), 1.0, 1e-15);
    EXPECT_NEAR(w_overlap(PhaseConfig({0.0, kPi / 2, kPi, 3 * kPi / 2})), 0.0, 1e-15);
    EXPECT_THROW(local_plus_overlap(PhaseConfig({0.1, 0.2, 0.3})), std::invalid_argument);
}

TEST(Discrimination, ClosedFormExamples) {
    EXPECT_NEAR(perr_local_a(PhaseConfig({kPi, 0.0})), 0.0, 1e-16);
    EXPECT_NEAR(perr_local_a(PhaseConfig({0.0, 0.0})), 0.5, 1e-16);
    EXPECT_NEAR(perr_nonlocal_a(PhaseConfig({0.0, kPi})), 0.0, 1e-16);
    EXPECT_NEAR(perr_nonlocal_a(PhaseConfig({1.0, 1.0, 1.0})), 0.5, 1e-15);
    EXPECT_NEAR(perr_local_b(PhaseConfig({0.0, 0.0}), PhaseConfig({kPi, 0.0})), 0.0, 1e-16);
    EXPECT_NEAR(perr_local_b(PhaseConfig({kPi, 0.0}), PhaseConfig({0.0, 0.0})), 1.0, 1e-16);
    EXPECT_NEAR(perr_nonlocal_b(PhaseConfig({0.0, 0.0}), PhaseConfig({0.0, 0.0})), 0.5, 1e-16);
}

TEST(Discrimination, ErrorProbabilityCombinesPriors) {
    const DiscriminationTask task{Case::same_vs_different, 0.3, 0.7};
    const double p = error_probability(task, {0.9, 0.1}, {0.4, 0.6});
    EXPECT_NEAR(p, 1.0 - 0.3 * 0.9 - 0.7 * 0.6, 1e-15);
    EXPECT_NEAR(perr_local_a(PhaseConfig({kPi / 2, 0.0}), task), 0.7 * 0.5, 1e-15);

    const DiscriminationTask skewed_b{Case::similar_vs_different, 0.8, 0.2};
    const PhaseConfig sim({0.1, -0.2});
    const PhaseConfig diff({2.0, 0.5});
    EXPECT_NEAR(perr_nonlocal_b(sim, diff, skewed_b), 0.8 * (1.0 - w_overlap(sim)) + 0.2 * w_overlap(diff), 1e-15);
}

TEST(Discrimination, RejectsMismatchedInputs) {
    EXPECT_THROW(perr_local_a(PhaseConfig({0.0, 0.0}), kTaskB), std::invalid_argument);
    EXPECT_THROW(perr_nonlocal_b(PhaseConfig({0.0}), PhaseConfig({0.0}), kTaskA), std::invalid_argument);
    EXPECT_THROW(perr_nonlocal_b(PhaseConfig({0.0}), PhaseConfig({0.0, 0.0})), std::invalid_argument);
    EXPECT_THROW(perr_local_a(PhaseConfig({0.0}), kTaskA), std::invalid_argument);
    EXPECT_THROW(perr_local_a(PhaseConfig({0.0, 0.0}), DiscriminationTask{Case::same_vs_different, 0.6, 0.6}),
                 std::invalid_argument);
    EXPECT_THROW(simulate_perr<ExcitationState>(Strategy::local, kTaskA, PhaseConfig({0.0, 0.0, 0.0}),
                                                PhaseConfig({0.0, 0.0, 0.0})),
                 std::invalid_argument);
}

struct Branches {
    PhaseConfig first;
    PhaseConfig different;
};

Branches random_branches(Case which, std::size_t n, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> rate(0.0, kTwoPi);
    PhaseConfig first = which == Case::same_vs_different ? PhaseConfig::uniform(n, rate(gen))
                                                         : PhaseConfig(testing::random_phases(n, gen, -0.3, 0.3));
    return {std::move(first), PhaseConfig(testing::random_phases(n, gen))};
}

double closed_form(Strategy strategy, const DiscriminationTask& task, const Branches& b) {
    if (task.which == Case::same_vs_different) {
        return strategy == Strategy::local ? perr_local_a(b.different, task) : perr_nonlocal_a(b.different, task);
    }
    return strategy == Strategy::local ? perr_local_b(b.first, b.different, task)
                                       : perr_nonlocal_b(b.first, b.different, task);
}

// The closed forms, the compact simulator and the dense simulator are three
// routes to the same number.
TEST(DiscriminationProperty, ClosedFormMatchesSimulators) {
    std::mt19937_64 gen(31);
    for (const auto& task : {kTaskA, kTaskB}) {
        for (Strategy strategy : {Strategy::local, Strategy::nonlocal}) {
            for (std::size_t n : {2u, 4u, 8u}) {
                for (int draw = 0; draw < 1000; ++draw) {
                    const auto b = random_branches(task.which, n, gen);
                    const double cf = closed_form(strategy, task, b);
                    const double compact = simulate_perr<ExcitationState>(strategy, task, b.first, b.different);
                    ASSERT_NEAR(cf, compact, 1e-12);
                    if (draw % 10 == 0) {
                        const double dense = simulate_perr<QubitRegisterState>(strategy, task, b.first, b.different);
                        ASSERT_NEAR(cf, dense, 1e-12);
                    }
                }
            }
        }
    }
}

TEST(DiscriminationProperty, ValuesStayInUnitInterval) {
    std::mt19937_64 gen(32);
    std::uniform_real_distribution<double> prior(0.0, 1.0);
    for (int draw = 0; draw < 2000; ++draw) {
        const std::size_t n = 2 + 2 * static_cast<std::size_t>(draw % 6);
        const double p = prior(gen);
        const DiscriminationTask task{draw % 2 == 0 ? Case::same_vs_different : Case::similar_vs_different, p, 1.0 - p};
        const auto b = random_branches(task.which, n, gen);
        for (Strategy strategy : {Strategy::local, Strategy::nonlocal}) {
            const double v = closed_form(strategy, task, b);
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 1.0);
        }
    }
}

TEST(DiscriminationProperty, Symmetries) {
    std::mt19937_64 gen(33);
    for (int draw = 0; draw < 500; ++draw) {
        const std::size_t n = 4 + 2 * static_cast<std::size_t>(draw % 3);
        auto thetas = testing::random_phases(n, gen);
        const PhaseConfig base(thetas);

        // Plates 1 and 3 enter the alternating sum with the same sign.
        auto swapped = thetas;
        std::swap(swapped[0], swapped[2]);
        EXPECT_NEAR(perr_local_a(base), perr_local_a(PhaseConfig(swapped)), 1e-12);
        EXPECT_NEAR(perr_nonlocal_a(base), perr_nonlocal_a(PhaseConfig(swapped)), 1e-12);

        auto negated = thetas;
        for (double& t : negated) {
            t = -t;
        }
        EXPECT_NEAR(perr_local_a(base), perr_local_a(PhaseConfig(negated)), 1e-12);
        EXPECT_NEAR(perr_nonlocal_a(base), perr_nonlocal_a(PhaseConfig(negated)), 1e-12);

        // The W overlap is invariant under any permutation of plates.
        std::shuffle(thetas.begin(), thetas.end(), gen);
        EXPECT_NEAR(perr_nonlocal_a(base), perr_nonlocal_a(PhaseConfig(thetas)), 1e-12);
    }
}

TEST(Discrimination, AnalyticMeanExamples) {
    const auto a_local = analytic_mean(Case::same_vs_different, Strategy::local, 8);
    EXPECT_EQ(a_local.value, 0.25);
    EXPECT_EQ(a_local.accuracy, Accuracy::exact);
    EXPECT_NEAR(analytic_mean(Case::same_vs_different, Strategy::nonlocal, 4).value, 0.125, 1e-16);
    EXPECT_NEAR(analytic_mean(Case::same_vs_different, Strategy::nonlocal, 7).value, 1.0 / 14.0, 1e-16);

    const auto b_local = analytic_mean(Case::similar_vs_different, Strategy::local, 10, 10000);
    EXPECT_NEAR(b_local.value, 0.25 + 10.0 * kPi * kPi / 24e8, 1e-16);
    EXPECT_EQ(b_local.accuracy, Accuracy::leading_order);

    // pi^2/3e8 = 3.2898681e-8; times (1 - 1/1000), plus 1/1000, halved.
    const auto b_nonlocal = analytic_mean(Case::similar_vs_different, Strategy::nonlocal, 1000, 10000);
    EXPECT_NEAR(b_nonlocal.value, 5.0001643e-4, 1e-11);
    EXPECT_EQ(to_string(b_nonlocal.accuracy), "leading-order");

    // Leading order is not clamped: for small M it runs past 1.
    EXPECT_GT(analytic_mean(Case::similar_vs_different, Strategy::local, 1000, 2).value, 1.0);
}

TEST(Discrimination, AnalyticMeanRejectsBadArguments) {
    EXPECT_THROW(analytic_mean(Case::similar_vs_different, Strategy::local, 4), std::invalid_argument);
    EXPECT_THROW(analytic_mean(Case::similar_vs_different, Strategy::nonlocal, 4, 1), std::invalid_argument);
    EXPECT_THROW(analytic_mean(Case::same_vs_different, Strategy::local, 3), std::invalid_argument);
    EXPECT_THROW(analytic_mean(Case::same_vs_different, Strategy::nonlocal, 0), std::invalid_argument);
}

TEST(Discrimination, NonlocalBeatsLocalOnAverageForLargerN) {
    for (std::size_t n = 4; n <= 20; n += 2) {
        EXPECT_LT(analytic_mean(Case::same_vs_different, Strategy::nonlocal, n).value,
                  analytic_mean(Case::same_vs_different, Strategy::local, n).value);
    }
    EXPECT_EQ(analytic_mean(Case::same_vs_different, Strategy::nonlocal, 2).value,
              analytic_mean(Case::same_vs_different, Strategy::local, 2).value);
}

}  // namespace
}  // namespace qsn
