#pragma once

// Maximal alpha-gapped repeats by a left-to-right scan over the factors of
// the non-overlapping s-factorization.
//
// Step i (i = 2..t) finds every repeat whose end lies in f_i = w[a_i..b_i]:
//   FGR'_i  beg <= a_i, split by which copy (if any) contains the frontier
//           b_{i-1}:  lrt (left copy), rrt (right copy), mid (neither);
//   SGR_i   strictly inside f_i, copied from the earlier occurrence of f_i;
//   FGR''_i end = b_i and beg > a_i.
// The integer search runs with k = ceil(alpha); every candidate is then
// filtered with the exact alpha test.

#include <algorithm>
#include <functional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gaprep/core.hpp"
#include "gaprep/extensions.hpp"
#include "gaprep/factorization.hpp"

namespace gaprep {

/// Found repeats bucketed by left start; each bucket is kept sorted by
/// non-decreasing end position.
class StartLists {
public:
    StartLists() = default;
    explicit StartLists(std::size_t n) : lists_(n + 1) {}

    std::size_t word_size() const noexcept { return lists_.empty() ? 0 : lists_.size() - 1; }

    /// Repeats with left start j (1-based).
    std::span<const GappedRepeat> at(pos_t j) const noexcept { return lists_[j]; }

    void push(const GappedRepeat& g) {
        auto& list = lists_[g.left_start];
        GAPREP_ENSURE(list.empty() || list.back().end() <= g.end(), "start list order violated");
        list.push_back(g);
        ++count_;
    }

    std::size_t size() const noexcept { return count_; }

    /// All repeats sorted by (left start, end, period).
    std::vector<GappedRepeat> flatten() const {
        std::vector<GappedRepeat> out;
        out.reserve(count_);
        for (const auto& list : lists_) {
            const std::size_t from = out.size();
            out.insert(out.end(), list.begin(), list.end());
            std::sort(out.begin() + static_cast<std::ptrdiff_t>(from), out.end(),
                      [](const GappedRepeat& a, const GappedRepeat& b) {
                          return std::pair(a.end(), a.period) < std::pair(b.end(), b.period);
                      });
        }
        return out;
    }

private:
    std::vector<std::vector<GappedRepeat>> lists_;
    std::size_t count_ = 0;
};

/// Per-step emission counts, for checking that the sub-searches partition
/// the output.
struct GappedTrace {
    struct Step {
        std::size_t factor = 0;
        std::size_t lrt = 0, rrt = 0, mid = 0, sgr = 0, end = 0;
        std::size_t total() const noexcept { return lrt + rrt + mid + sgr + end; }
    };
    std::vector<Step> steps;
    std::function<void(std::size_t factor, const StartLists&)> after_step;

    std::size_t total_emitted() const noexcept {
        std::size_t s = 0;
        for (const auto& st : steps) s += st.total();
        return s;
    }
};

namespace detail {

struct FactorView {
    const Word& w;
    std::span<const Factor> factors;

    std::size_t count() const noexcept { return factors.size(); }
    const Factor& f(std::size_t i) const noexcept { return factors[i - 1]; }
    pos_t a(std::size_t i) const noexcept { return f(i).start; }
    pos_t b(std::size_t i) const noexcept { return f(i).end(); }
    std::size_t l(std::size_t i) const noexcept { return f(i).len; }
    /// End of f'_i = w[a_i..b_i+1]; the last factor has no following letter.
    pos_t fprime_end(std::size_t i) const noexcept { return i < count() ? b(i) + 1 : b(i); }
};

inline void require_step(const FactorView& fv, std::size_t i, std::size_t k) {
    if (i < 2 || i > fv.count()) throw std::out_of_range("factor ordinal out of range");
    if (k < 2) throw std::invalid_argument("k must be at least 2");
}

/// O(1) sanity check of a k-gapped candidate: boundary columns of the copies
/// agree, both maximality inequalities hold, gap non-empty, period <= k*c.
inline void verify_candidate(const Word& w, const GappedRepeat& g, std::size_t k, const char* origin) {
    const std::size_t n = w.size();
    const bool ok = g.copy_len >= 1 && g.copy_len < g.period && g.left_start >= 1 && g.right_end() <= n &&
                    g.period <= k * g.copy_len && w.at(g.left_start) == w.at(g.right_start()) &&
                    w.at(g.left_end()) == w.at(g.right_end()) &&
                    (g.left_start == 1 || w.at(g.left_start - 1) != w.at(g.right_start() - 1)) &&
                    (g.right_end() == n || w.at(g.left_end() + 1) != w.at(g.right_end() + 1));
    GAPREP_ENSURE(ok, std::string(origin) + ": candidate (" + std::to_string(g.left_start) + ", c=" +
                          std::to_string(g.copy_len) + ", p=" + std::to_string(g.period) +
                          ") fails the boundary check");
}

inline bool gap_ratio_ok(std::size_t p, std::size_t c, std::size_t k) noexcept { return c < p && c * k >= p; }

}  // namespace detail

/// Positions d_0 > d_1 > ... of the mid-case ladder for a factor of length l:
/// d_s = floor(((k-1)/k)^s * l) + 1, stopping at the first d_s <= 2.
inline std::vector<std::size_t> mid_ladder(std::size_t l, std::size_t k) {
    using boost::multiprecision::cpp_int;
    std::vector<std::size_t> d{l + 1};
    if (l < 2) return d;
    cpp_int num = l, den = 1;
    while (d.back() > 2) {
        num *= (k - 1);
        den *= k;
        d.push_back(static_cast<std::size_t>(num / den) + 1);
    }
    return d;
}

/// Repeats of FGR'_i whose left copy contains the frontier b_{i-1}.
inline std::vector<GappedRepeat> fgr_lrt(const Word& w, std::span<const Factor> factors, std::size_t i,
                                         std::size_t k) {
    const detail::FactorView fv{w, factors};
    detail::require_step(fv, i, k);
    const pos_t a = fv.a(i);
    const std::size_t l = fv.l(i);
    const pos_t g_start = a > l ? a - l : 1;
    const auto lp = lp_self(w.slice(a, fv.fprime_end(i)));
    const auto ls = ls_cross(w.slice(g_start, a - 1), w.slice(a, fv.b(i)));

    std::vector<GappedRepeat> out;
    for (std::size_t p = 1; p <= l; ++p) {
        const std::size_t right = lp(p + 1);
        const std::size_t left = ls(p);
        if (!detail::gap_ratio_ok(p, left + right, k) || right + p > l) continue;
        const GappedRepeat g{a - left, left + right, p};
        detail::verify_candidate(w, g, k, "lrt");
        out.push_back(g);
    }
    return out;
}

/// Repeats of FGR'_i whose right copy contains the frontier b_{i-1}.
inline std::vector<GappedRepeat> fgr_rrt(const Word& w, std::span<const Factor> factors, std::size_t i,
                                         std::size_t k) {
    const detail::FactorView fv{w, factors};
    detail::require_step(fv, i, k);
    const pos_t a = fv.a(i);
    const std::size_t l = fv.l(i);
    const std::size_t reach = k * (fv.l(i - 1) + l);
    const pos_t g_start = fv.a(i - 1) > reach ? fv.a(i - 1) - reach : 1;
    const std::string_view g = w.slice(g_start, a - 1);
    const auto ls = ls_self(g);
    const auto lp = lp_cross(g, w.slice(a, fv.fprime_end(i)));

    std::vector<GappedRepeat> out;
    const std::size_t p_max = std::min(reach - 1, g.size());
    for (std::size_t p = 1; p <= p_max; ++p) {
        const std::size_t right = lp(p - 1);
        const std::size_t left = ls(p);
        if (!detail::gap_ratio_ok(p, left + right, k) || right == 0 || right > l) continue;
        const GappedRepeat g_rep{a - p - left, left + right, p};
        detail::verify_candidate(w, g_rep, k, "rrt");
        out.push_back(g_rep);
    }
    return out;
}

/// Repeats of FGR'_i where neither copy contains the frontier b_{i-1}: the
/// right copy lies strictly inside f'_i and is located through the ladder
/// letters f'_i[d_s].
inline std::vector<GappedRepeat> fgr_mid(const Word& w, std::span<const Factor> factors, std::size_t i,
                                         std::size_t k) {
    const detail::FactorView fv{w, factors};
    detail::require_step(fv, i, k);
    const pos_t a = fv.a(i);
    const pos_t frontier = a - 1;
    const pos_t fprime_end = fv.fprime_end(i);
    const auto d = mid_ladder(fv.l(i), k);

    std::vector<GappedRepeat> out;
    for (std::size_t s = 1; s < d.size(); ++s) {
        const std::size_t d_prev = d[s - 1];
        const std::size_t d_s = d[s];
        if (d_s >= d_prev) continue;
        // h ends at f'_i[d_s - 1], h' = f'_i[d_s .. d_{s-1}] starts at the covered letter.
        const pos_t covered = frontier + d_s;
        const pos_t h_start = a > k * d_prev ? a - k * d_prev : 1;
        const std::string_view h = w.slice(h_start, covered - 1);
        const std::string_view h2 = w.slice(covered, std::min(frontier + d_prev, fprime_end));
        const auto ls = ls_self(h);
        const auto lp = lp_cross(h, h2);

        const std::size_t p_max = std::min(k * d_prev - 1, h.size());
        for (std::size_t p = 1; p <= p_max; ++p) {
            const std::size_t right = lp(p - 1);
            const std::size_t left = ls(p);
            if (!detail::gap_ratio_ok(p, left + right, k)) continue;
            if (right == 0 || p < d_s || right > p - d_s || right > d_prev - d_s || left + 1 >= d_s) continue;
            const GappedRepeat g{covered - left - p, left + right, p};
            detail::verify_candidate(w, g, k, "mid");
            out.push_back(g);
        }
    }
    return out;
}

/// FGR''_i: repeats ending exactly at b_i that start after a_i.
inline std::vector<GappedRepeat> fgr_end(const Word& w, std::span<const Factor> factors, std::size_t i,
                                         std::size_t k) {
    const detail::FactorView fv{w, factors};
    detail::require_step(fv, i, k);
    const pos_t a = fv.a(i);
    const pos_t b = fv.b(i);
    const std::size_t l = fv.l(i);
    const std::size_t n = w.size();
    const auto ls = ls_self(w.slice(a, b));

    std::vector<GappedRepeat> out;
    for (std::size_t p = 1; p < l; ++p) {
        const std::size_t c = ls(p);
        // A match reaching a_i may continue left of the factor: not this case.
        if (c + p >= l) continue;
        if (!detail::gap_ratio_ok(p, c, k)) continue;
        if (b < n && w.at(b - p + 1) == w.at(b + 1)) continue;
        const GappedRepeat g{b - p - c + 1, c, p};
        if (w.at(g.left_start - 1) == w.at(g.right_start() - 1)) continue;
        detail::verify_candidate(w, g, k, "end");
        out.push_back(g);
    }
    return out;
}

/// SGR_i: repeats strictly inside f_i, obtained by shifting the repeats
/// strictly inside its earlier occurrence by delta_i. Order within each
/// source list is preserved.
inline std::vector<GappedRepeat> sgr_replicate(const Word& w, std::span<const Factor> factors, std::size_t i,
                                               const StartLists& lists) {
    const detail::FactorView fv{w, factors};
    if (i < 2 || i > fv.count()) throw std::out_of_range("factor ordinal out of range");
    const Factor& f = fv.f(i);
    std::vector<GappedRepeat> out;
    if (f.len <= 1) return out;
    GAPREP_ENSURE(f.delta.has_value() && *f.delta >= f.len, "factor without a valid back-offset");
    const std::size_t delta = *f.delta;
    const pos_t source_end = f.end() - delta;
    for (pos_t j = f.start + 1; j + 1 <= f.end(); ++j) {
        for (const GappedRepeat& src : lists.at(j - delta)) {
            if (src.end() >= source_end) break;
            const GappedRepeat g = src.shifted(delta);
            const bool ok = w.at(g.left_start) == w.at(g.right_start()) &&
                            w.at(g.left_end()) == w.at(g.right_end()) &&
                            w.at(g.left_start - 1) != w.at(g.right_start() - 1) &&
                            w.at(g.left_end() + 1) != w.at(g.right_end() + 1);
            GAPREP_ENSURE(ok, "sgr: translated repeat fails the boundary check");
            out.push_back(g);
        }
    }
    return out;
}

/// All maximal alpha-gapped repeats of w, bucketed by left start.
inline StartLists find_maximal_gapped_repeats(const Word& w, const Rational& alpha, GappedTrace* trace = nullptr) {
    require_alpha(alpha);
    const std::size_t n = w.size();
    StartLists lists(n);
    if (n < 3) return lists;
    const std::size_t k = std::max<std::uint64_t>(2, alpha.ceil());
    const auto factors = s_factorize(w);
    const detail::FactorView fv{w, factors};

    auto keep = [&](const GappedRepeat& g) { return alpha_gapped_test(g.period, g.copy_len, alpha); };

    std::vector<std::vector<GappedRepeat>> fin;
    for (std::size_t i = 2; i <= fv.count(); ++i) {
        GappedTrace::Step step;
        step.factor = i;
        const pos_t a = fv.a(i);

        // FGR'_i goes through per-step end buckets so each start list
        // receives its new repeats in order of end position.
        fin.assign(fv.l(i), {});
        auto bucket = [&](const std::vector<GappedRepeat>& found, std::size_t& counter) {
            for (const auto& g : found)
                if (keep(g)) {
                    fin[g.end() - a].push_back(g);
                    ++counter;
                }
        };
        bucket(fgr_lrt(w, factors, i, k), step.lrt);
        bucket(fgr_rrt(w, factors, i, k), step.rrt);
        bucket(fgr_mid(w, factors, i, k), step.mid);
        for (const auto& list : fin)
            for (const auto& g : list) lists.push(g);

        if (fv.l(i) > 1) {
            for (const auto& g : sgr_replicate(w, factors, i, lists)) {
                lists.push(g);
                ++step.sgr;
            }
        }

        for (const auto& g : fgr_end(w, factors, i, k))
            if (keep(g)) {
                lists.push(g);
                ++step.end;
            }

        if (trace) {
            trace->steps.push_back(step);
            if (trace->after_step) trace->after_step(i, lists);
        }
    }
    return lists;
}

namespace detail {

// Minimal period of every prefix u[0..L) via the prefix function.
inline std::vector<std::size_t> prefix_periods(std::string_view u) {
    const std::size_t n = u.size();
    std::vector<std::size_t> border(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t j = border[i - 1];
        while (j > 0 && u[i] != u[j]) j = border[j - 1];
        if (u[i] == u[j]) ++j;
        border[i] = j;
    }
    std::vector<std::size_t> period(n + 1, 0);
    for (std::size_t len = 1; len <= n; ++len) period[len] = len - border[len - 1];
    return period;
}

inline bool has_long_repetition_prefix(std::string_view u) {
    const auto period = prefix_periods(u);
    for (std::size_t len = (u.size() + 1) / 2; len <= u.size(); ++len)
        if (len >= 1 && 2 * period[len] <= len) return true;
    return false;
}

}  // namespace detail

/// Periodic / prefix- or suffix-semiperiodic / ordinary, from the copy alone.
/// A copy with both a long repetition prefix and suffix reports
/// PrefixSemiperiodic.
inline RepeatClass classify(const Word& w, const GappedRepeat& sigma) {
    const std::string_view copy = w.slice(sigma.left_start, sigma.left_end());
    const auto period = detail::prefix_periods(copy);
    if (2 * period[copy.size()] <= copy.size()) return RepeatClass::Periodic;
    if (detail::has_long_repetition_prefix(copy)) return RepeatClass::PrefixSemiperiodic;
    const std::string reversed(copy.rbegin(), copy.rend());
    if (detail::has_long_repetition_prefix(reversed)) return RepeatClass::SuffixSemiperiodic;
    return RepeatClass::Ordinary;
}

}  // namespace gaprep
