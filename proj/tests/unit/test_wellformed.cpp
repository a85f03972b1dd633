#include <gtest/gtest.h>

#include "../oracles.hpp"
#include "wcidp/wellformed.hpp"

using namespace wcidp;

TEST(WellFormed, TableRowPasses) {
    const Candidate c({2, 2, 3, 3, 3}, 6, 6);
    const auto r = check_wf(c);
    EXPECT_TRUE(r.passed);
    EXPECT_TRUE(r.violations.empty());
    EXPECT_TRUE(is_well_formed(c));
}

TEST(WellFormed, TripleGcdViolation) {
    const Candidate c({1, 2, 2, 5, 5}, 6, 7);
    const auto r = check_wf(c);
    ASSERT_FALSE(r.passed);
    const WfViolation expected{WfCondition::triple_gcd, IndexSet{0, 1, 2}, 5};
    EXPECT_NE(std::find(r.violations.begin(), r.violations.end(), expected), r.violations.end());
    EXPECT_FALSE(is_well_formed(c));
}

TEST(WellFormed, SingleGcdViolation) {
    for (Int d1 = 1; d1 <= 8; ++d1) {
        for (Int d2 = d1; d2 <= 12; ++d2) {
            const auto r = check_wf(Candidate({2, 2, 3, 4, 6}, d1, d2));
            ASSERT_FALSE(r.passed);
            const WfViolation expected{WfCondition::single_gcd, IndexSet{2}, 2};
            EXPECT_NE(std::find(r.violations.begin(), r.violations.end(), expected), r.violations.end());
        }
    }
}

TEST(WellFormed, PairGcdViolation) {
    // gcd(4, 4, 6) = 2 must divide both degrees.
    const auto r = check_wf(Candidate({1, 3, 4, 4, 6}, 8, 9));
    ASSERT_FALSE(r.passed);
    const WfViolation expected{WfCondition::pair_gcd, IndexSet{0, 1}, 2};
    EXPECT_NE(std::find(r.violations.begin(), r.violations.end(), expected), r.violations.end());
}

TEST(WellFormed, ConditionNames) {
    EXPECT_STREQ(to_string(WfCondition::triple_gcd), "triple-gcd");
    EXPECT_STREQ(to_string(WfCondition::pair_gcd), "pair-gcd");
    EXPECT_STREQ(to_string(WfCondition::single_gcd), "single-gcd");
}

TEST(WellFormed, AgreesWithDefinitionOnSmallTuples) {
    std::size_t checked = 0;
    for (Int a0 = 1; a0 <= 6; ++a0)
        for (Int a1 = a0; a1 <= 6; ++a1)
            for (Int a2 = a1; a2 <= 6; ++a2)
                for (Int a3 = a2; a3 <= 6; ++a3)
                    for (Int a4 = a3; a4 <= 6; ++a4)
                        for (Int d1 = 1; d1 <= 12; ++d1)
                            for (Int d2 = d1; d2 <= 12; ++d2) {
                                const Candidate c({a0, a1, a2, a3, a4}, d1, d2);
                                const bool expected = oracle::well_formed(c.to_seven());
                                ASSERT_EQ(check_wf(c).passed, expected) << c;
                                ASSERT_EQ(is_well_formed(c), expected) << c;
                                ++checked;
                            }
    EXPECT_GT(checked, 10000U);
}
