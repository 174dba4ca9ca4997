#include <gtest/gtest.h>

#include <algorithm>

#include "lcwis/random.hpp"
#include "lcwis/sequence.hpp"

using namespace cwis;

TEST(MakeSequence, PreservesOrderAndMultiplicity) {
    EXPECT_EQ(make_sequence({1, 2, 5, 2, 5, 3}), (Sequence{1, 2, 5, 2, 5, 3}));
    EXPECT_TRUE(make_sequence({}).empty());
    EXPECT_EQ(make_sequence({7, 7, 7}).size(), 3u);
}

TEST(MakeSequence, RejectsValuesOutside32Bits) {
    EXPECT_THROW(make_sequence({1, -1}), InvalidArgument);
    EXPECT_THROW(make_sequence({std::int64_t{1} << 32}), InvalidArgument);
    EXPECT_NO_THROW(make_sequence({(std::int64_t{1} << 32) - 1}));
}

TEST(WeaklyIncreasing, Basics) {
    EXPECT_TRUE(is_weakly_increasing(Sequence{2, 2, 3}));
    EXPECT_TRUE(is_weakly_increasing(Sequence{}));
    EXPECT_FALSE(is_weakly_increasing(Sequence{3, 2}));
}

TEST(Subsequence, Basics) {
    EXPECT_TRUE(is_subsequence(Sequence{2, 2, 3}, Sequence{1, 2, 5, 2, 5, 3}));
    EXPECT_TRUE(is_subsequence(Sequence{}, Sequence{4, 1}));
    EXPECT_TRUE(is_subsequence(Sequence{}, Sequence{}));
    EXPECT_FALSE(is_subsequence(Sequence{5, 1}, Sequence{1, 5}));
    EXPECT_FALSE(is_subsequence(Sequence{1}, Sequence{}));
}

TEST(TotalWeight, Examples) {
    const auto unit = WeightedAlphabet::unit(0, 10);
    EXPECT_EQ(total_weight(Sequence{3, 4}, unit), 2);
    EXPECT_EQ(total_weight(Sequence{}, WeightedAlphabet{}), 0);
    WeightedAlphabet w;
    w.set(9, 5);
    EXPECT_EQ(total_weight(Sequence{9, 9}, w), 10);
}

TEST(TotalWeight, MissingWeightIsAnError) {
    WeightedAlphabet w;
    w.set(1, 1);
    try {
        total_weight(Sequence{1, 4}, w);
        FAIL() << "expected MissingWeight";
    } catch (const MissingWeight& e) {
        EXPECT_EQ(e.symbol(), 4u);
    }
}

TEST(TotalWeight, OverflowIsAnError) {
    WeightedAlphabet w;
    w.set(0, kWeightBudget);
    EXPECT_EQ(total_weight(Sequence{0}, w), kWeightBudget);
    EXPECT_THROW(total_weight(Sequence{0, 0}, w), Overflow);
}

TEST(WeightedAlphabet, RejectsNonPositiveWeights) {
    WeightedAlphabet w;
    EXPECT_THROW(w.set(3, 0), InvalidArgument);
    EXPECT_THROW(w.set(3, -2), InvalidArgument);
    EXPECT_THROW(w.set(3, kWeightBudget + 1), Overflow);
}

TEST(SequenceProperties, SubsequenceIsReflexiveAndTransitive) {
    Rng rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const auto c = random_sequence(rng, rng.uniform(0, 12), 0, 4);
        // Build b ⊇ c and a ⊇ b by random insertions.
        auto grow = [&](Sequence s) {
            const auto extra = rng.uniform(0, 5);
            for (std::uint64_t k = 0; k < extra; ++k) {
                s.insert(s.begin() + static_cast<std::ptrdiff_t>(rng.uniform(0, s.size())),
                         static_cast<Symbol>(rng.uniform(0, 4)));
            }
            return s;
        };
        const auto b = grow(c);
        const auto a = grow(b);
        ASSERT_TRUE(is_subsequence(c, c));
        ASSERT_TRUE(is_subsequence(c, b));
        ASSERT_TRUE(is_subsequence(b, a));
        ASSERT_TRUE(is_subsequence(c, a));

        // Unrelated random triples: transitivity must hold whenever the
        // premises do.
        const auto x = random_sequence(rng, rng.uniform(0, 3), 0, 2);
        const auto y = random_sequence(rng, rng.uniform(0, 5), 0, 2);
        const auto z = random_sequence(rng, rng.uniform(0, 8), 0, 2);
        if (is_subsequence(x, y) && is_subsequence(y, z)) {
            ASSERT_TRUE(is_subsequence(x, z));
        }
    }
}

TEST(SequenceProperties, UnitWeightEqualsLengthAndSortedIsIncreasing) {
    Rng rng(11);
    const auto unit = WeightedAlphabet::unit(0, 50);
    for (int trial = 0; trial < 300; ++trial) {
        auto s = random_sequence(rng, rng.uniform(0, 30), 0, 50);
        ASSERT_EQ(total_weight(s, unit), static_cast<Weight>(s.size()));
        std::sort(s.begin(), s.end());
        ASSERT_TRUE(is_weakly_increasing(s));
    }
}
