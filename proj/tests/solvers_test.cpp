#include <gtest/gtest.h>

#include "lcwis/random.hpp"
#include "lcwis/solvers.hpp"

using namespace cwis;

namespace {

const Sequence kExampleA{1, 2, 5, 2, 5, 3};
const Sequence kExampleB{2, 4, 5, 2, 3, 4};

void expect_valid_witness(const SolveResult& r, const Sequence& a, const Sequence& b, const WeightedAlphabet* w) {
    ASSERT_TRUE(r.witness.has_value());
    const auto& c = *r.witness;
    EXPECT_TRUE(is_weakly_increasing(c));
    EXPECT_TRUE(is_subsequence(c, a));
    EXPECT_TRUE(is_subsequence(c, b));
    EXPECT_EQ(w ? total_weight(c, *w) : static_cast<Weight>(c.size()), r.value);
}

}  // namespace

TEST(Lcwis, WorkedExample) {
    const auto r = lcwis(kExampleA, kExampleB, true);
    EXPECT_EQ(r.value, 3);
    EXPECT_EQ(*r.witness, (Sequence{2, 2, 3}));
    EXPECT_EQ(lcwis(kExampleA, kExampleB).value, 3);
    EXPECT_FALSE(lcwis(kExampleA, kExampleB).witness.has_value());
}

TEST(Lcwis, EdgeCases) {
    EXPECT_EQ(lcwis(Sequence{}, kExampleB).value, 0);
    EXPECT_EQ(lcwis(kExampleA, Sequence{}, true).value, 0);
    EXPECT_TRUE(lcwis(Sequence{}, Sequence{}, true).witness->empty());
    EXPECT_EQ(lcwis(Sequence{4, 4, 4}, Sequence{4, 4, 4}).value, 3);
    EXPECT_EQ(lcwis(Sequence{3, 2, 1}, Sequence{3, 2, 1}).value, 1);
    // Repeated symbol in b must not let one a-position match twice.
    EXPECT_EQ(lcwis(Sequence{5}, Sequence{5, 5, 5}).value, 1);
    EXPECT_EQ(lcwis(Sequence{5, 5, 5}, Sequence{5}).value, 1);
}

TEST(Wlcwis, Examples) {
    const auto unit = WeightedAlphabet::unit(0, 9);
    EXPECT_EQ(wlcwis(kExampleA, kExampleB, unit).value, 3);
    WeightedAlphabet w;
    w.set(5, 7);
    EXPECT_EQ(wlcwis(Sequence{5}, Sequence{5}, w).value, 7);
}

TEST(Wlcwis, HeavySymbolBeatsLongerRun) {
    WeightedAlphabet w;
    w.set(1, 1);
    w.set(2, 10);
    const Sequence a{1, 1, 1, 2};
    const Sequence b{2, 1, 1, 1};
    const auto r = wlcwis(a, b, w, true);
    EXPECT_EQ(r.value, 10);
    EXPECT_EQ(*r.witness, Sequence{2});
}

TEST(Wlcwis, MissingWeightIsAnError) {
    WeightedAlphabet w;
    w.set(1, 1);
    EXPECT_THROW(wlcwis(Sequence{1}, Sequence{1, 2}, w), MissingWeight);
    EXPECT_THROW(wlcwis_oracle(Sequence{1, 2}, Sequence{1}, w), MissingWeight);
}

TEST(Oracle, Examples) {
    EXPECT_EQ(lcwis_oracle(kExampleA, kExampleB), 3);
    EXPECT_EQ(lcwis_oracle(Sequence{1, 2}, Sequence{3, 4}), 0);
    WeightedAlphabet w;
    w.set(3, 9);
    EXPECT_EQ(wlcwis_oracle(Sequence{3}, Sequence{3}, w), 9);
}

TEST(Oracle, RefusesLongInputs) {
    const Sequence long_a(15, 1);
    EXPECT_THROW(lcwis_oracle(long_a, long_a), BudgetExceeded);
    // Only the shorter side is bounded.
    EXPECT_EQ(lcwis_oracle(Sequence(14, 1), Sequence(40, 1)), 14);
}

TEST(Oracle, UnitWeightsMatchUnweighted) {
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_sequence(rng, rng.uniform(0, 10), 0, 3);
        const auto b = random_sequence(rng, rng.uniform(0, 10), 0, 3);
        ASSERT_EQ(wlcwis_oracle(a, b, WeightedAlphabet::unit(0, 3)), lcwis_oracle(a, b));
    }
}

// 200 random pairs, both argument orders, against the oracle.
TEST(SolverProperties, MatchesOracleBothDirections) {
    Rng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const auto k = static_cast<Symbol>(rng.uniform(1, 4));
        const auto a = random_sequence(rng, rng.uniform(0, 10), 0, k - 1);
        const auto b = random_sequence(rng, rng.uniform(0, 10), 0, k - 1);
        const auto expected = lcwis_oracle(a, b);
        ASSERT_EQ(lcwis(a, b).value, expected);
        ASSERT_EQ(lcwis(b, a).value, expected);
        ASSERT_EQ(lcwis(a, b, true).value, expected);
    }
}

TEST(SolverProperties, WeightedMatchesOracleWithValidWitness) {
    Rng rng(43);
    for (int trial = 0; trial < 500; ++trial) {
        const auto k = static_cast<Symbol>(rng.uniform(1, 5));
        const auto a = random_sequence(rng, rng.uniform(0, 12), 0, k - 1);
        const auto b = random_sequence(rng, rng.uniform(0, 12), 0, k - 1);
        const auto w = random_weights(rng, 0, k - 1, 6);
        const auto r = wlcwis(a, b, w, true);
        ASSERT_EQ(r.value, wlcwis_oracle(a, b, w));
        ASSERT_EQ(wlcwis(b, a, w).value, r.value);
        expect_valid_witness(r, a, b, &w);
        ASSERT_LE(r.value, std::min(total_weight(a, w), total_weight(b, w)));
    }
}

TEST(SolverProperties, Monotonicity) {
    Rng rng(44);
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = random_sequence(rng, rng.uniform(0, 20), 0, 5);
        const auto b = random_sequence(rng, rng.uniform(0, 20), 0, 5);
        Sequence sub;
        for (Symbol x : a) {
            if (rng.coin()) sub.push_back(x);
        }
        const auto full = lcwis(a, b).value;
        ASSERT_LE(lcwis(sub, b).value, full);
        ASSERT_GE(full, 0);
        ASSERT_LE(full, static_cast<Weight>(std::min(a.size(), b.size())));
    }
}

TEST(SolverProperties, WitnessOnLargerInputs) {
    Rng rng(45);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_sequence(rng, rng.uniform(0, 200), 0, 30);
        const auto b = random_sequence(rng, rng.uniform(0, 200), 0, 30);
        const auto r = lcwis(a, b, true);
        ASSERT_EQ(r.value, lcwis(a, b).value);
        expect_valid_witness(r, a, b, nullptr);
    }
}

TEST(SolverProperties, UnitWeightDegeneracy) {
    Rng rng(46);
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = random_sequence(rng, rng.uniform(0, 40), 0, 8);
        const auto b = random_sequence(rng, rng.uniform(0, 40), 0, 8);
        ASSERT_EQ(wlcwis(a, b, WeightedAlphabet::unit(0, 8)).value, lcwis(a, b).value);
    }
}

TEST(Wlcwis, OverflowingInputIsRejected) {
    WeightedAlphabet w;
    w.set(1, kWeightBudget);
    EXPECT_THROW(wlcwis(Sequence{1, 1}, Sequence{1}, w), Overflow);
}
