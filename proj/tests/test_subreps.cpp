#include <gtest/gtest.h>

#include "gaprep/census.hpp"
#include "gaprep/oracle.hpp"
#include "gaprep/subreps.hpp"
#include "gaprep/verify.hpp"
#include "helpers.hpp"

using namespace gaprep;
using testing_helpers::copies;

namespace {

using Triple = std::tuple<pos_t, std::size_t, pos_t, OsrKind>;

std::vector<Triple> osr_of(const char* s, const Rational& delta) {
    const Word w(s);
    std::vector<Triple> out;
    for (const auto& e : build_osr(find_runs(w), find_maximal_gapped_repeats(w, delta.reciprocal()).flatten()))
        out.emplace_back(e.beg, e.period, e.end, e.kind);
    return out;
}

}  // namespace

TEST(Osr, Examples) {
    EXPECT_EQ(osr_of("aabaa", Rational(1, 2)),
              (std::vector<Triple>{{1, 1, 2, OsrKind::Run},
                                   {1, 3, 5, OsrKind::Repeat},
                                   {2, 2, 4, OsrKind::Repeat},
                                   {4, 1, 5, OsrKind::Run}}));
    EXPECT_EQ(osr_of("aaaa", Rational(1, 3)),
              (std::vector<Triple>{{1, 1, 4, OsrKind::Run}, {1, 3, 4, OsrKind::Repeat}}));
    EXPECT_TRUE(build_osr({}, {}).empty());
}

TEST(Filter, UnaryWordTrace) {
    const Word w("aaaa");
    const auto osr = build_osr(find_runs(w), find_maximal_gapped_repeats(w, Rational(3, 1)).flatten());
    Srq final_queue;
    const auto marks = filter_stretchable(osr, &final_queue);
    EXPECT_EQ(marks, (std::vector<bool>{false, true}));
    EXPECT_EQ(final_queue.contents(), (std::vector<Srq::Pair>{{1, 4}}));
}

TEST(Filter, TieReplacementTrace) {
    const Word w("aabaa");
    const auto osr = build_osr(find_runs(w), find_maximal_gapped_repeats(w, Rational(2, 1)).flatten());
    Srq final_queue;
    std::vector<std::vector<Srq::Pair>> states;
    const auto marks =
        filter_stretchable<Srq>(osr, &final_queue, [&](const Srq& q) { states.push_back(q.contents()); });
    EXPECT_EQ(marks, (std::vector<bool>(4, false)));
    EXPECT_EQ(final_queue.contents(), (std::vector<Srq::Pair>{{1, 5}}));
    EXPECT_EQ(states, (std::vector<std::vector<Srq::Pair>>{
                          {{1, 2}}, {{1, 2}, {3, 5}}, {{1, 2}, {2, 4}, {3, 5}}, {{1, 5}}}));
}

TEST(Filter, EmptyInput) {
    EXPECT_TRUE(filter_stretchable(std::vector<OsrElement>{}).empty());
}

TEST(Filter, RunMarkedIsALogicFault) {
    const std::vector<OsrElement> osr{{1, 1, 10, OsrKind::Run, 0}, {2, 2, 8, OsrKind::Run, 1}};
    EXPECT_THROW(filter_stretchable(osr), logic_fault);
}

TEST(Srq, InsertKeepsDoubleMonotonicity) {
    Srq q;
    q.insert(5, 10);
    q.insert(8, 12);
    q.insert(3, 4);
    EXPECT_EQ(q.contents(), (std::vector<Srq::Pair>{{3, 4}, {5, 10}, {8, 12}}));
    q.insert(4, 11);
    EXPECT_EQ(q.contents(), (std::vector<Srq::Pair>{{3, 4}, {4, 11}, {8, 12}}));
    EXPECT_EQ(q.predecessor(7), (Srq::Pair{4, 11}));
    EXPECT_FALSE(q.predecessor(2).has_value());
    q.insert(1, 20);
    EXPECT_EQ(q.contents(), (std::vector<Srq::Pair>{{1, 20}}));
    EXPECT_TRUE(q.well_formed());
}

TEST(Subreps, Examples) {
    const Rational half(1, 2);
    EXPECT_EQ(find_subrepetitions(Word("abaab"), half), (std::vector<Subrepetition>{{1, 3, 2}, {1, 5, 3}}));
    EXPECT_EQ(find_subrepetitions(Word("abyabcabyab"), half),
              (std::vector<Subrepetition>{{1, 5, 3}, {1, 11, 6}, {4, 8, 3}, {7, 11, 3}}));
    EXPECT_TRUE(find_subrepetitions(Word("aaaa"), Rational(1, 3)).empty());
    EXPECT_TRUE(find_subrepetitions(Word("abc"), half).empty());
    EXPECT_THROW(find_subrepetitions(Word("abc"), Rational(1, 1)), std::invalid_argument);
}

TEST(Subreps, PrincipalDirect) {
    EXPECT_FALSE(is_principal_direct(Word("aaaa"), copies(1, 1, 4, 4)));
    EXPECT_TRUE(is_principal_direct(Word("abaab"), copies(1, 2, 4, 5)));
    EXPECT_TRUE(is_principal_direct(Word("aabaa"), copies(2, 2, 4, 4)));
}

namespace {

void check_word(const Word& w, const Rational& delta) {
    std::size_t observed = 0;
    const auto search = search_subrepetitions(w, delta);
    ASSERT_EQ(search.subreps, oracle::oracle_subreps(w, delta)) << w.str() << " delta=" << delta.to_string();
    for (std::size_t i = 0; i < search.repeats.size(); ++i)
        ASSERT_NE(search.repeat_stretchable[i], is_principal_direct(w, search.repeats[i])) << w.str();
    filter_stretchable<Srq>(build_osr(search.runs, search.repeats), nullptr, [&](const Srq& q) {
        ++observed;
        ASSERT_TRUE(q.well_formed());
    });
    ASSERT_EQ(observed, search.runs.size() + search.repeats.size());
    const Rational lower = Rational(1, 1) + delta;
    for (const auto& r : search.subreps) {
        ASSERT_GE(r.exponent(), lower);
        ASSERT_LT(r.exponent(), Rational(2, 1));
        ASSERT_TRUE(is_maximal_periodic_span(w, r.start, r.end, r.period));
        ASSERT_EQ(oracle::minimal_period_naive(w.slice(r.start, r.end)), r.period);
    }
    const double inv = static_cast<double>(delta.reciprocal().ceil());
    ASSERT_LE(static_cast<double>(search.subreps.size()), 2 * 9.8697 * inv * inv * static_cast<double>(w.size()));
}

}  // namespace

TEST(Subreps, ExhaustiveAgainstOracle) {
    for (const Rational delta : {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3)})
        for_each_word(10, 2, [&](const Word& w) {
            check_word(w, delta);
            return !::testing::Test::HasFatalFailure();
        });
}

TEST(Subreps, RandomAgainstOracle) {
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        for (unsigned sigma : {2u, 4u})
            for (const Rational delta : {Rational(1, 4), Rational(1, 2)}) {
                check_word(random_word(1000, sigma, seed), delta);
                if (HasFatalFailure()) return;
            }
}
