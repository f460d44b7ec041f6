#pragma once

// Main-vs-oracle comparisons shared by the `verify` command and the test
// suites.

#include <optional>
#include <string>
#include <vector>

#include "gaprep/factorization.hpp"
#include "gaprep/gapped.hpp"
#include "gaprep/oracle.hpp"
#include "gaprep/runs.hpp"
#include "gaprep/subreps.hpp"

namespace gaprep {

/// Tiling, back-offset validity and non-overlap of a factorization.
inline bool factorization_well_formed(const Word& w, const std::vector<Factor>& factors) {
    pos_t next = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const Factor& f = factors[i];
        if (f.index != i + 1 || f.start != next || f.len == 0) return false;
        if (f.end() > w.size()) return false;
        if (f.len > 1) {
            if (!f.delta || *f.delta < f.len || *f.delta >= f.start) return false;
            if (w.slice(f.start - *f.delta, f.end() - *f.delta) != w.slice(f.start, f.end())) return false;
        } else if (f.delta) {
            return false;
        }
        next = f.end() + 1;
    }
    return next == w.size() + 1 && (factors.empty() || factors.front().len == 1);
}

/// Same factor boundaries; back-offsets may point at different occurrences.
inline bool same_factor_boundaries(const std::vector<Factor>& a, const std::vector<Factor>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].start != b[i].start || a[i].len != b[i].len || a[i].delta.has_value() != b[i].delta.has_value())
            return false;
    return true;
}

struct VerifyPlan {
    bool runs = true;
    bool factorization = true;
    std::vector<Rational> alphas{Rational(3, 2), Rational(2, 1), Rational(3, 1), Rational(4, 1)};
    std::vector<Rational> deltas{Rational(1, 4), Rational(1, 3), Rational(1, 2)};
};

/// Name of the first failing check for w, or nullopt when all agree.
inline std::optional<std::string> verify_word(const Word& w, const VerifyPlan& plan = {}) {
    if (plan.runs && find_runs(w) != oracle::oracle_runs(w)) return "runs";
    if (plan.factorization) {
        const auto fs = s_factorize(w);
        if (!factorization_well_formed(w, fs) || !same_factor_boundaries(fs, oracle::oracle_factorize(w)))
            return "factorize";
    }
    for (const Rational& alpha : plan.alphas) {
        auto got = find_maximal_gapped_repeats(w, alpha).flatten();
        std::sort(got.begin(), got.end());
        if (got != oracle::oracle_gapped(w, alpha)) return "repeats alpha=" + alpha.to_string();
    }
    for (const Rational& delta : plan.deltas) {
        const auto search = search_subrepetitions(w, delta);
        if (search.subreps != oracle::oracle_subreps(w, delta)) return "subreps delta=" + delta.to_string();
        for (std::size_t i = 0; i < search.repeats.size(); ++i)
            if (search.repeat_stretchable[i] == is_principal_direct(w, search.repeats[i]))
                return "principal delta=" + delta.to_string();
    }
    return std::nullopt;
}

/// Calls f(word) for every word of length 0..max_len over the first sigma
/// lowercase letters; stops early when f returns false.
template <class F>
bool for_each_word(std::size_t max_len, unsigned sigma, F&& f) {
    const char last = static_cast<char>('a' + sigma - 1);
    for (std::size_t len = 0; len <= max_len; ++len) {
        std::string s(len, 'a');
        for (;;) {
            if (!f(Word(s))) return false;
            bool carry = true;
            for (std::size_t pos = len; carry && pos > 0; --pos) {
                if (s[pos - 1] < last) {
                    ++s[pos - 1];
                    carry = false;
                } else {
                    s[pos - 1] = 'a';
                }
            }
            if (carry) break;
        }
    }
    return true;
}

}  // namespace gaprep
