#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gaprep/core.hpp"
#include "gaprep/extensions.hpp"

namespace gaprep {

namespace detail {

// Smallest d dividing p such that u (of length >= p, period p) also has
// period d. Only divisors need checking: a span of length >= 2p with periods
// p and d has period gcd(p, d).
inline std::size_t smallest_root_period(std::string_view root) {
    const std::size_t p = root.size();
    for (std::size_t d = 1; d < p; ++d) {
        if (p % d != 0) continue;
        bool ok = true;
        for (std::size_t t = 0; t + d < p; ++t)
            if (root[t] != root[t + d]) {
                ok = false;
                break;
            }
        if (ok) return d;
    }
    return p;
}

// Collects runs contained in w[l..r] that cover both m and m+1 where
// m = (l + r) / 2, then recurses into the halves.
inline void collect_runs(const Word& w, pos_t l, pos_t r, std::vector<Run>& out) {
    if (r <= l) return;
    const pos_t m = l + (r - l) / 2;
    const std::string_view u = w.slice(l, m);
    const std::string_view v = w.slice(m + 1, r);
    const std::size_t n = w.size();

    auto emit = [&](pos_t block_start, pos_t block_end, std::size_t p) {
        // Match block [block_start, block_end] for period p spans
        // [block_start, block_end + p].
        const pos_t start = block_start;
        const pos_t end = block_end + p;
        if (start > 1 && w.at(start - 1) == w.at(start - 1 + p)) return;
        if (end < n && w.at(end + 1 - p) == w.at(end + 1)) return;
        out.push_back({start, end, p});
    };

    {
        // Right case: the run has at least p letters right of m, so x = m is
        // inside the match block.
        const auto right_ext = lp_self(v);
        const auto left_ext = ls_cross(u, v);
        for (std::size_t p = 1; p <= v.size(); ++p) {
            const std::size_t ls = left_ext(p);
            const std::size_t lp = right_ext(p + 1);
            if (ls >= 1 && ls + lp >= p) emit(m - ls + 1, m + lp, p);
        }
    }
    {
        // Left case: at least p letters at or left of m, so x = m - p + 1 is
        // inside the match block.
        const auto left_ext = ls_self(u);
        const auto right_ext = lp_cross(u, v);
        for (std::size_t p = 1; p <= u.size(); ++p) {
            const std::size_t ls = left_ext(p);
            const std::size_t lp = right_ext(p - 1);
            if (lp >= 1 && ls + lp >= p) emit(m - p + 1 - ls, m - p + lp, p);
        }
    }

    collect_runs(w, l, m, out);
    collect_runs(w, m + 1, r, out);
}

}  // namespace detail

/// All maximal repetitions of w with minimal periods, sorted by (start, period).
inline std::vector<Run> find_runs(const Word& w) {
    std::vector<Run> candidates;
    if (w.size() < 2) return candidates;
    detail::collect_runs(w, 1, w.size(), candidates);

    // A span found at several periods keeps the smallest one.
    std::sort(candidates.begin(), candidates.end(), [](const Run& a, const Run& b) {
        return std::tie(a.start, a.end, a.period) < std::tie(b.start, b.end, b.period);
    });
    std::vector<Run> runs;
    for (const Run& r : candidates)
        if (runs.empty() || runs.back().start != r.start || runs.back().end != r.end) runs.push_back(r);

    for (const Run& r : runs)
        GAPREP_ENSURE(detail::smallest_root_period(w.slice(r.start, r.start + r.period - 1)) == r.period,
                      "run reported with a non-minimal period");
    std::sort(runs.begin(), runs.end());
    return runs;
}

using BigRational = boost::multiprecision::cpp_rational;

/// Sum of exponents |r| / p(r) over the given runs, exactly. Lengths are
/// grouped by period first so the big-number work is per distinct period.
inline BigRational sum_exponents(const std::vector<Run>& runs) {
    std::map<std::size_t, std::uint64_t> length_by_period;
    for (const Run& r : runs) length_by_period[r.period] += r.length();
    BigRational total = 0;
    for (const auto& [period, length] : length_by_period)
        total += BigRational(boost::multiprecision::cpp_int(length), boost::multiprecision::cpp_int(period));
    return total;
}

inline std::string to_string(const BigRational& q) {
    const auto num = boost::multiprecision::numerator(q);
    const auto den = boost::multiprecision::denominator(q);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

}  // namespace gaprep
