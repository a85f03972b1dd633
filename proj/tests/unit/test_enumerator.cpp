#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "../oracles.hpp"
#include "wcidp/enumerator.hpp"

using namespace wcidp;

namespace {

bool contains(const std::vector<Candidate>& v, const Candidate& c) { return std::binary_search(v.begin(), v.end(), c); }

// Every sorted tuple and degree pair inside the bounds, judged by the definitional oracle.
std::vector<Candidate> oracle_solutions(Int A, Int D) {
    std::vector<Candidate> out;
    for (Int a0 = 1; a0 <= A; ++a0)
        for (Int a1 = a0; a1 <= A; ++a1)
            for (Int a2 = a1; a2 <= A; ++a2)
                for (Int a3 = a2; a3 <= A; ++a3)
                    for (Int a4 = a3; a4 <= A; ++a4)
                        for (Int d1 = 1; d1 <= D; ++d1)
                            for (Int d2 = d1; d2 <= D; ++d2) {
                                const std::array<Int, 7> t{a0, a1, a2, a3, a4, d1, d2};
                                if (oracle::del_pezzo(t)) out.push_back(Candidate::from_seven(t));
                            }
    return out;
}

}  // namespace

TEST(Shapes, Examples) {
    EXPECT_EQ(lemma1_shapes(WeightSystem({1, 1, 1, 1, 1})), (std::vector<std::pair<Int, Int>>{{2, 2}}));
    const auto s = lemma1_shapes(WeightSystem({1, 1, 2, 2, 3}));
    EXPECT_NE(std::find(s.begin(), s.end(), std::pair<Int, Int>{4, 4}), s.end());
    const auto t = lemma1_shapes(WeightSystem({1, 2, 3, 4, 5}));
    EXPECT_NE(std::find(t.begin(), t.end(), std::pair<Int, Int>{6, 7}), t.end());
    EXPECT_NE(std::find(t.begin(), t.end(), std::pair<Int, Int>{5, 10}), t.end());
    // Six pairs with d2 < 2a4, and d1 in {5, 6, 7, 8, 9, 10} with d2 = 10: the
    // fifteen items coincide in three places for consecutive weights.
    const std::vector<std::pair<Int, Int>> expected = {{5, 10}, {6, 7}, {6, 8}, {6, 9}, {6, 10}, {7, 8},
                                                       {7, 9},  {7, 10}, {8, 9}, {8, 10}, {9, 10}, {10, 10}};
    EXPECT_EQ(t, expected);
}

TEST(Shapes, FifteenItemsBySubstitution) {
    for (Int a0 = 1; a0 <= 6; ++a0)
        for (Int a1 = a0; a1 <= 7; ++a1)
            for (Int a2 = a1; a2 <= 8; ++a2)
                for (Int a3 = a2; a3 <= 9; ++a3)
                    for (Int a4 = a3; a4 <= 10; ++a4) {
                        const Int a[5] = {a0, a1, a2, a3, a4};
                        std::set<std::pair<Int, Int>> want;
                        for (int i = 0; i < 4; ++i)
                            for (int j = i + 1; j < 4; ++j) want.insert({a[i] + a4, a[j] + a4});
                        for (int i = 0; i < 5; ++i)
                            for (int j = std::max(i, 3); j < 5; ++j) want.insert({a[i] + a[j], 2 * a4});
                        const auto got = lemma1_shapes(WeightSystem({a0, a1, a2, a3, a4}));
                        EXPECT_EQ(got, (std::vector<std::pair<Int, Int>>(want.begin(), want.end())));
                    }
}

TEST(Bounds, Validation) {
    EXPECT_THROW((Bounds{0, 10}.validate()), std::invalid_argument);
    EXPECT_THROW((Bounds{5, 1}.validate()), std::invalid_argument);
    EXPECT_THROW((Bounds{Bounds::kMaxA4 + 1, 10}.validate()), std::length_error);
    EXPECT_NO_THROW((Bounds{1, 2}.validate()));
    EXPECT_THROW(enumerate(Bounds{0, 10}), std::invalid_argument);
}

TEST(Enumerate, ExhaustiveLimitIsReported) {
    EnumerateOptions opts;
    opts.mode = Mode::exhaustive;
    EXPECT_THROW(enumerate(Bounds{kExhaustiveLimit + 1, 10}, opts), std::length_error);
}

TEST(Enumerate, Examples) {
    for (Mode m : {Mode::exhaustive, Mode::shaped}) {
        SCOPED_TRACE(to_string(m));
        EXPECT_EQ(enumerate(Bounds{1, 10}, m).solutions, (std::vector<Candidate>{Candidate({1, 1, 1, 1, 1}, 2, 2)}));
        const auto small = enumerate(Bounds{3, 6}, m).solutions;
        EXPECT_TRUE(contains(small, Candidate({1, 1, 2, 2, 3}, 4, 4)));
        EXPECT_TRUE(contains(small, Candidate({2, 2, 3, 3, 3}, 6, 6)));
        EXPECT_TRUE(contains(small, Candidate({1, 2, 2, 3, 3}, 4, 6)));
        const auto seven = enumerate(Bounds{7, 12}, m).solutions;
        EXPECT_TRUE(contains(seven, Candidate({3, 4, 5, 6, 7}, 10, 12)));
        EXPECT_TRUE(contains(seven, Candidate({3, 4, 5, 6, 7}, 11, 12)));
    }
}

TEST(Enumerate, SporadicExamples) {
    EXPECT_EQ(sporadic(Bounds{3, 6}),
              (std::vector<Candidate>{Candidate({1, 2, 2, 3, 3}, 4, 6), Candidate({2, 2, 3, 3, 3}, 6, 6)}));
    EXPECT_TRUE(sporadic(Bounds{1, 10}).empty());
    EXPECT_TRUE(sporadic(Bounds{1, 10}, Mode::exhaustive).empty());
}

TEST(Enumerate, ResultIsSortedUniqueAndSplit) {
    const auto r = enumerate(Bounds{20, 40});
    EXPECT_TRUE(std::is_sorted(r.solutions.begin(), r.solutions.end()));
    EXPECT_EQ(std::adjacent_find(r.solutions.begin(), r.solutions.end()), r.solutions.end());
    EXPECT_EQ(r.sporadic.size() + r.family_instances.size(), r.solutions.size());
    for (const auto& c : r.sporadic) EXPECT_TRUE(match_tuple(c).empty()) << c;
    for (const auto& fi : r.family_instances) EXPECT_FALSE(fi.matches.empty()) << fi.candidate;
    for (const auto& c : r.solutions) {
        EXPECT_LE(c.a(4), 20);
        EXPECT_LE(c.d2(), 40);
    }
}

TEST(Enumerate, AgreesWithDefinitionalOracle) {
    const auto expected = oracle_solutions(7, 14);
    ASSERT_FALSE(expected.empty());
    EXPECT_EQ(enumerate(Bounds{7, 14}, Mode::exhaustive).solutions, expected);
    EXPECT_EQ(enumerate(Bounds{7, 14}, Mode::shaped).solutions, expected);
}

TEST(Enumerate, ModesAgreeOnSmallBounds) {
    for (const Bounds b : {Bounds{6, 100}, Bounds{10, 15}, Bounds{12, 24}, Bounds{12, 60}}) {
        EXPECT_EQ(enumerate(b, Mode::exhaustive).solutions, enumerate(b, Mode::shaped).solutions)
            << b.max_a4 << "/" << b.max_d2;
    }
}

TEST(Enumerate, ExhaustiveSolutionsHaveLemmaShapes) {
    for (const auto& c : enumerate(Bounds{12, 60}, Mode::exhaustive).solutions) {
        const auto s = lemma1_shapes(c.weights());
        EXPECT_TRUE(std::binary_search(s.begin(), s.end(), std::pair<Int, Int>{c.d1(), c.d2()})) << c;
        EXPECT_LE(c.d2(), 2 * c.a(4)) << c;
        EXPECT_GE(c.d1(), c.a(0) + c.a(3)) << c;
    }
}

TEST(Enumerate, CongruenceSearchMatchesPlainTraversal) {
    for (const Bounds b : {Bounds{40, 50}, Bounds{40, 80}, Bounds{33, 1000}}) {
        EXPECT_EQ(enumerate(b, Mode::shaped).solutions, detail::shaped_reference(b)) << b.max_a4 << "/" << b.max_d2;
    }
}

TEST(Partition, SingleJobCoversEverything) {
    const auto r = partition(Bounds{10, 20}, 1);
    ASSERT_EQ(r.size(), 1U);
    EXPECT_EQ(r[0], (WorkRange{1, 10}));
    EXPECT_THROW(partition(Bounds{10, 20}, 0), std::invalid_argument);
}

TEST(Partition, RangesAreDisjointAndCovering) {
    for (Mode m : {Mode::shaped, Mode::exhaustive}) {
        for (unsigned jobs : {2U, 3U, 4U, 7U, 16U, 50U}) {
            const Bounds b{12, 24};
            const auto r = partition(b, jobs, m);
            ASSERT_EQ(r.size(), jobs);
            Int next = 1;
            for (const auto& w : r) {
                if (w.empty()) continue;
                EXPECT_EQ(w.a2_lo, next);
                next = w.a2_hi + 1;
            }
            EXPECT_EQ(next, b.max_a4 + 1);
        }
    }
    const auto many = partition(Bounds{3, 6}, 8);
    EXPECT_TRUE(many.back().empty());
}

TEST(Partition, MergedResultIsIndependentOfJobs) {
    for (Mode m : {Mode::shaped, Mode::exhaustive}) {
        const Bounds b{10, 20};
        const auto ranges = partition(b, 4, m);
        ASSERT_EQ(ranges.size(), 4U);
        std::vector<Candidate> merged;
        for (const auto& r : ranges) {
            const auto part = enumerate_range(b, m, r);
            merged.insert(merged.end(), part.begin(), part.end());
        }
        std::sort(merged.begin(), merged.end());
        const auto single = enumerate(b, m).solutions;
        EXPECT_EQ(merged, single);
        for (unsigned jobs : {2U, 4U, 8U, 13U}) {
            EnumerateOptions opts;
            opts.mode = m;
            opts.jobs = jobs;
            const auto r = enumerate(b, opts);
            EXPECT_EQ(r.solutions, single);
            EXPECT_EQ(r.sporadic, enumerate(b, m).sporadic);
        }
    }
}

TEST(Enumerate, ProgressIsReportedPerA2) {
    EnumerateOptions opts;
    opts.jobs = 3;
    std::vector<Int> seen;
    opts.on_progress = [&](const ProgressEvent& e) { seen.push_back(e.a2); };
    (void)enumerate(Bounds{9, 18}, opts);
    std::sort(seen.begin(), seen.end());
    std::vector<Int> all(9);
    for (Int i = 0; i < 9; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    EXPECT_EQ(seen, all);
}

TEST(Congruence, SolveAgreesWithScan) {
    for (Int m = 2; m <= 30; ++m)
        for (Int c = 1; c < m; ++c)
            for (Int r = 0; r < m; ++r) {
                Int base = 0, step = 0;
                const bool ok = detail::solve_congruence(c, r, m, base, step);
                std::vector<Int> scan;
                for (Int x = 0; x < 2 * m; ++x)
                    if (detail::mod(c * x - r, m) == 0) scan.push_back(x);
                if (!ok) {
                    EXPECT_TRUE(scan.empty()) << c << "x = " << r << " mod " << m;
                    continue;
                }
                std::vector<Int> got;
                for (Int x = base; x < 2 * m; x += step) got.push_back(x);
                EXPECT_EQ(got, scan) << c << "x = " << r << " mod " << m;
            }
}
