#include <gtest/gtest.h>

#include "gaprep/census.hpp"
#include "gaprep/factorization.hpp"
#include "gaprep/gapped.hpp"
#include "gaprep/oracle.hpp"
#include "gaprep/verify.hpp"
#include "helpers.hpp"

using namespace gaprep;
using testing_helpers::copies;
using testing_helpers::sorted;

namespace {

using Repeats = std::vector<GappedRepeat>;

Repeats gr(const char* s, const Rational& alpha) {
    return sorted(find_maximal_gapped_repeats(Word(s), alpha).flatten());
}

// Start lists as they stand before step i.
StartLists lists_before(const Word& w, const Rational& alpha, std::size_t i) {
    StartLists snapshot(w.size());
    GappedTrace trace;
    trace.after_step = [&](std::size_t step, const StartLists& lists) {
        if (step + 1 == i) snapshot = lists;
    };
    find_maximal_gapped_repeats(w, alpha, &trace);
    return snapshot;
}

}  // namespace

TEST(Gapped, Examples) {
    const Rational two(2, 1);
    EXPECT_EQ(gr("abaab", two), (Repeats{copies(1, 1, 3, 3), copies(1, 2, 4, 5)}));
    EXPECT_EQ(gr("abyabcabyab", two), (Repeats{copies(1, 2, 4, 5), copies(1, 5, 7, 11), copies(4, 5, 7, 8),
                                               copies(7, 8, 10, 11)}));
    EXPECT_EQ(gr("aaaa", Rational(3, 1)), (Repeats{copies(1, 1, 4, 4)}));
    EXPECT_TRUE(gr("abc", two).empty());
    EXPECT_TRUE(gr("", two).empty());
    EXPECT_TRUE(gr("a", two).empty());
    EXPECT_THROW(find_maximal_gapped_repeats(Word("abc"), Rational(1, 1)), std::invalid_argument);
}

TEST(Gapped, LeftRightCases) {
    const Word w("abyabcabyab");
    const auto fs = s_factorize(w);
    ASSERT_EQ(fs[5].start, 7u);
    ASSERT_EQ(fs[5].len, 5u);
    EXPECT_EQ(sorted(fgr_lrt(w, fs, 6, 2)), (Repeats{copies(7, 8, 10, 11)}));
    EXPECT_EQ(sorted(fgr_rrt(w, fs, 6, 2)), (Repeats{copies(1, 5, 7, 11), copies(4, 5, 7, 8)}));

    const Word v("abaab");
    const auto gs = s_factorize(v);
    EXPECT_TRUE(fgr_lrt(v, gs, 4, 2).empty());
    EXPECT_EQ(sorted(fgr_rrt(v, gs, 4, 2)), (Repeats{copies(1, 2, 4, 5)}));
    EXPECT_EQ(sorted(fgr_rrt(v, gs, 3, 2)), (Repeats{copies(1, 1, 3, 3)}));
    EXPECT_TRUE(fgr_lrt(v, gs, 2, 2).empty());
    EXPECT_TRUE(fgr_end(v, gs, 4, 2).empty());
}

TEST(Gapped, MidLadder) {
    EXPECT_EQ(mid_ladder(8, 2), (std::vector<std::size_t>{9, 5, 3, 2}));
    EXPECT_EQ(mid_ladder(3, 4), (std::vector<std::size_t>{4, 3, 2}));
}

TEST(Gapped, MidCase) {
    const Word w("aabaaba");
    const auto fs = s_factorize(w);
    ASSERT_EQ(fs[3].start, 4u);
    ASSERT_EQ(fs[3].len, 3u);
    EXPECT_EQ(sorted(fgr_mid(w, fs, 4, 4)), (Repeats{copies(1, 1, 5, 5)}));
    EXPECT_TRUE(fgr_mid(w, fs, 4, 2).empty());
}

TEST(Gapped, EndPinned) {
    const Word w("qabzabcqabzab");
    const auto fs = s_factorize(w);
    ASSERT_EQ(fs[6].start, 8u);
    ASSERT_EQ(fs[6].len, 6u);
    EXPECT_EQ(sorted(fgr_end(w, fs, 7, 2)), (Repeats{copies(9, 10, 12, 13)}));
    EXPECT_TRUE(sgr_replicate(w, fs, 7, lists_before(w, Rational(2, 1), 7)).empty());
}

TEST(Gapped, Replication) {
    const Word w("zabcabzdzabcabz");
    const auto fs = s_factorize(w);
    ASSERT_EQ(fs[7].start, 9u);
    ASSERT_EQ(fs[7].len, 7u);
    ASSERT_EQ(fs[7].delta, 8u);
    EXPECT_EQ(sorted(sgr_replicate(w, fs, 8, lists_before(w, Rational(2, 1), 8))), (Repeats{copies(10, 11, 13, 14)}));
}

TEST(Gapped, StepArgumentsChecked) {
    const Word w("abaab");
    const auto fs = s_factorize(w);
    EXPECT_THROW(fgr_lrt(w, fs, 1, 2), std::out_of_range);
    EXPECT_THROW(fgr_rrt(w, fs, 9, 2), std::out_of_range);
    EXPECT_THROW(fgr_mid(w, fs, 3, 1), std::invalid_argument);
}

TEST(Classify, Examples) {
    EXPECT_EQ(classify(Word("aabaa"), copies(1, 2, 4, 5)), RepeatClass::Periodic);
    EXPECT_EQ(classify(Word("aaabcaaab"), copies(1, 4, 6, 9)), RepeatClass::PrefixSemiperiodic);
    EXPECT_EQ(classify(Word("abaab"), copies(1, 2, 4, 5)), RepeatClass::Ordinary);
    EXPECT_EQ(classify(Word("baaacbaaa"), copies(1, 4, 6, 9)), RepeatClass::SuffixSemiperiodic);
}

namespace {

void check_word(const Word& w, const Rational& alpha) {
    GappedTrace trace;
    trace.after_step = [&](std::size_t, const StartLists& lists) {
        for (pos_t j = 1; j <= w.size(); ++j) {
            const auto list = lists.at(j);
            for (std::size_t x = 1; x < list.size(); ++x) ASSERT_LE(list[x - 1].end(), list[x].end());
        }
    };
    const auto lists = find_maximal_gapped_repeats(w, alpha, &trace);
    const auto flat = lists.flatten();
    auto got = sorted(flat);
    ASSERT_EQ(got, oracle::oracle_gapped(w, alpha)) << w.str() << " alpha=" << alpha.to_string();
    // Each repeat is emitted once across all sub-searches.
    ASSERT_EQ(trace.total_emitted(), got.size());
    ASSERT_EQ(std::adjacent_find(got.begin(), got.end()), got.end());
    for (const auto& g : got) {
        ASSERT_TRUE(is_valid_gapped_repeat(w, g));
        ASSERT_TRUE(is_maximal(w, g));
        ASSERT_LT(g.copy_len, g.period);
        ASSERT_TRUE(alpha_gapped_test(g.period, g.copy_len, alpha));
    }
    const double k = static_cast<double>(alpha.ceil());
    ASSERT_LE(static_cast<double>(got.size()), 2 * 9.8697 * k * k * static_cast<double>(w.size()));
}

}  // namespace

TEST(Gapped, ExhaustiveAgainstOracle) {
    for (const Rational alpha : {Rational(3, 2), Rational(2, 1), Rational(3, 1), Rational(4, 1), Rational(7, 3)})
        for_each_word(10, 2, [&](const Word& w) {
            check_word(w, alpha);
            return !::testing::Test::HasFatalFailure();
        });
    for_each_word(7, 3, [&](const Word& w) {
        check_word(w, Rational(2, 1));
        check_word(w, Rational(5, 2));
        return !::testing::Test::HasFatalFailure();
    });
}

TEST(Gapped, RandomAgainstOracle) {
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        for (unsigned sigma : {2u, 4u})
            for (const Rational alpha : {Rational(3, 2), Rational(2, 1), Rational(5, 1)}) {
                check_word(random_word(1000, sigma, seed), alpha);
                if (HasFatalFailure()) return;
            }
}
