#pragma once

// Brute-force reference implementations. They depend only on the domain
// types in core.hpp and share no algorithmic code with the fast modules.
// Everything here is quadratic or worse.

#include <algorithm>
#include <vector>

#include "gaprep/core.hpp"

namespace gaprep::oracle {

/// Smallest p >= 1 such that u[i] = u[i+p] for all valid i, by direct scan.
inline std::size_t minimal_period_naive(std::string_view u) {
    const std::size_t n = u.size();
    for (std::size_t p = 1; p < n; ++p) {
        bool ok = true;
        for (std::size_t i = 0; i + p < n; ++i)
            if (u[i] != u[i + p]) {
                ok = false;
                break;
            }
        if (ok) return p;
    }
    return n == 0 ? 1 : n;
}

namespace detail {

// Calls f(start, c) for each maximal block of consecutive positions x with
// w[x] = w[x+p]; start is 1-based, c is the block length.
template <class F>
void for_each_match_block(const Word& w, std::size_t p, F&& f) {
    const std::size_t n = w.size();
    std::size_t x = 1;
    while (x + p <= n) {
        if (w.at(x) != w.at(x + p)) {
            ++x;
            continue;
        }
        const std::size_t start = x;
        while (x + p <= n && w.at(x) == w.at(x + p)) ++x;
        f(start, x - start);
    }
}

inline bool period_within(std::size_t p, std::size_t c, const Rational& alpha) {
    // p / c <= num / den
    return static_cast<unsigned __int128>(p) * alpha.den() <= static_cast<unsigned __int128>(c) * alpha.num();
}

}  // namespace detail

inline std::vector<GappedRepeat> oracle_gapped(const Word& w, const Rational& alpha) {
    require_alpha(alpha);
    std::vector<GappedRepeat> out;
    for (std::size_t p = 1; p < w.size(); ++p)
        detail::for_each_match_block(w, p, [&](std::size_t start, std::size_t c) {
            if (c < p && detail::period_within(p, c, alpha)) out.push_back({start, c, p});
        });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Run> oracle_runs(const Word& w) {
    std::vector<Run> out;
    for (std::size_t p = 1; p < w.size(); ++p)
        detail::for_each_match_block(w, p, [&](std::size_t start, std::size_t c) {
            if (c < p) return;
            const std::size_t end = start + p + c - 1;
            if (minimal_period_naive(w.slice(start, end)) == p) out.push_back({start, end, p});
        });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Run& a, const Run& b) { return a.start == b.start && a.end == b.end; }),
              out.end());
    return out;
}

inline std::vector<Subrepetition> oracle_subreps(const Word& w, const Rational& delta) {
    require_delta(delta);
    std::vector<Subrepetition> out;
    for (std::size_t p = 1; p < w.size(); ++p)
        detail::for_each_match_block(w, p, [&](std::size_t start, std::size_t c) {
            // c >= delta * p  <=>  c * den >= num * p
            if (c >= p) return;
            if (static_cast<unsigned __int128>(c) * delta.den() < static_cast<unsigned __int128>(delta.num()) * p)
                return;
            const std::size_t end = start + p + c - 1;
            if (minimal_period_naive(w.slice(start, end)) == p) out.push_back({start, end, p});
        });
    std::sort(out.begin(), out.end());
    return out;
}

/// Greedy factorization by quadratic search for the longest earlier
/// occurrence that ends before the current position.
inline std::vector<Factor> oracle_factorize(const Word& w) {
    const std::size_t n = w.size();
    std::vector<Factor> out;
    std::size_t a = 1;
    while (a <= n) {
        std::size_t best_len = 0;
        std::size_t best_start = 0;
        for (std::size_t s = 1; s < a; ++s) {
            std::size_t l = 0;
            while (a + l <= n && s + l < a && w.at(s + l) == w.at(a + l)) ++l;
            if (l > best_len) {
                best_len = l;
                best_start = s;
            }
        }
        Factor f{out.size() + 1, a, best_len == 0 ? 1 : best_len, std::nullopt};
        if (best_len > 1) f.delta = a - best_start;
        out.push_back(f);
        a += f.len;
    }
    return out;
}

}  // namespace gaprep::oracle
