#include <gtest/gtest.h>

#include "gaprep/census.hpp"
#include "gaprep/factorization.hpp"
#include "gaprep/oracle.hpp"
#include "gaprep/verify.hpp"

using namespace gaprep;

TEST(Factorize, Examples) {
    const auto f = s_factorize(Word("abaabab"));
    ASSERT_EQ(f.size(), 5u);
    EXPECT_EQ(f[3].start, 4u);
    EXPECT_EQ(f[3].len, 3u);
    EXPECT_EQ(f[3].delta, 3u);
    EXPECT_FALSE(f[4].delta.has_value());

    const auto g = s_factorize(Word("aaaaa"));
    ASSERT_EQ(g.size(), 4u);
    EXPECT_EQ(g[2].len, 2u);
    EXPECT_EQ(g[2].delta, 2u);

    const auto h = s_factorize(Word("abc"));
    ASSERT_EQ(h.size(), 3u);
    for (const auto& x : h) EXPECT_FALSE(x.delta.has_value());

    EXPECT_TRUE(s_factorize(Word("")).empty());
}

namespace {

// The one-letter extension of each non-final factor has no occurrence inside
// the prefix before the factor.
bool greedy(const Word& w, const std::vector<Factor>& fs) {
    for (const auto& f : fs) {
        if (f.end() + 1 > w.size()) continue;
        const std::string_view prefix = w.slice(1, f.start - 1);
        if (prefix.find(w.slice(f.start, f.end() + 1)) != std::string_view::npos) return false;
    }
    return true;
}

void check(const Word& w) {
    const auto fs = s_factorize(w);
    ASSERT_TRUE(factorization_well_formed(w, fs)) << w.str();
    ASSERT_TRUE(greedy(w, fs)) << w.str();
    ASSERT_TRUE(same_factor_boundaries(fs, oracle::oracle_factorize(w))) << w.str();
}

}  // namespace

TEST(Factorize, ExhaustiveBinary) {
    for_each_word(12, 2, [](const Word& w) {
        check(w);
        return !::testing::Test::HasFatalFailure();
    });
}

TEST(Factorize, RandomWords) {
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        for (unsigned sigma : {2u, 4u, 26u}) check(random_word(2000, sigma, seed));
}

TEST(Factorize, ArbitraryBytes) {
    std::string s;
    for (int i = 0; i < 600; ++i) s.push_back(static_cast<char>((i * 37 + i / 7) % 256));
    s += s.substr(100, 300);
    check(Word(s));
}
