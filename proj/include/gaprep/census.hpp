#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "gaprep/core.hpp"
#include "gaprep/gapped.hpp"
#include "gaprep/runs.hpp"
#include "gaprep/subreps.hpp"

namespace gaprep {

/// Portable generator for experiment words: xorshift64* (shifts 12, 25, 27;
/// multiplier 0x2545F4914F6CDD1D) with its state seeded by one SplitMix64
/// step (increment 0x9E3779B97F4A7C15, mixers 0xBF58476D1CE4E5B9 and
/// 0x94D049BB133111EB), so seed 0 is valid.
class WordGenerator {
public:
    explicit WordGenerator(std::uint64_t seed) {
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        state_ = z ^ (z >> 31);
        if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
    }

    std::uint64_t next() noexcept {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    /// Uniform in [0, bound) by rejecting the top partial block.
    std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
        for (;;) {
            const std::uint64_t x = next();
            if (x <= limit) return x % bound;
        }
    }

private:
    std::uint64_t state_;
};

/// Word of length n over the first sigma lowercase letters.
inline Word random_word(std::size_t n, unsigned sigma, std::uint64_t seed) {
    if (sigma < 2 || sigma > 26) throw std::invalid_argument("alphabet size must be in [2, 26]");
    WordGenerator gen(seed);
    std::string s(n, 'a');
    for (auto& ch : s) ch = static_cast<char>('a' + gen.below(sigma));
    return Word(std::move(s));
}

struct CensusReport {
    std::size_t n = 0;
    std::size_t alphabet_size = 0;
    Rational alpha;
    std::optional<Rational> delta;
    std::size_t run_count = 0;
    BigRational sum_exponents = 0;
    std::size_t repeat_count = 0;
    std::array<std::size_t, 4> counts_by_class{};  // indexed by RepeatClass
    std::optional<std::size_t> subrep_count;

    std::size_t class_count(RepeatClass c) const noexcept { return counts_by_class[static_cast<std::size_t>(c)]; }

    /// |GR_alpha| / (alpha n)
    double ratio_alpha_n() const noexcept {
        return n == 0 ? 0.0 : static_cast<double>(repeat_count) / (alpha.to_double() * static_cast<double>(n));
    }
    /// |GR_alpha| / (alpha^2 n)
    double ratio_alpha2_n() const noexcept {
        const double a = alpha.to_double();
        return n == 0 ? 0.0 : static_cast<double>(repeat_count) / (a * a * static_cast<double>(n));
    }
};

inline CensusReport census(const Word& w, const Rational& alpha, const std::optional<Rational>& delta = std::nullopt) {
    require_alpha(alpha);
    if (delta) require_delta(*delta);

    CensusReport report;
    report.n = w.size();
    std::array<bool, 256> seen{};
    for (unsigned char c : w.view()) seen[c] = true;
    for (bool b : seen) report.alphabet_size += b ? 1 : 0;
    report.alpha = alpha;
    report.delta = delta;

    const auto runs = find_runs(w);
    report.run_count = runs.size();
    report.sum_exponents = sum_exponents(runs);

    const auto repeats = find_maximal_gapped_repeats(w, alpha).flatten();
    report.repeat_count = repeats.size();
    for (const auto& g : repeats) ++report.counts_by_class[static_cast<std::size_t>(classify(w, g))];

    if (delta) report.subrep_count = find_subrepetitions(w, *delta).size();
    return report;
}

}  // namespace gaprep
