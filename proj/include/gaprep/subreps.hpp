#pragma once

// Maximal delta-subrepetitions from the principal 1/delta-gapped repeats.
//
// A maximal gapped repeat is principal exactly when no maximal repetition or
// maximal gapped repeat of smaller period contains it. Runs and repeats are
// merged into one sequence ordered by (start, period) and swept once; the
// sweep keeps a queue of (period, end) pairs increasing in both coordinates,
// so the predecessor by period holds the furthest reaching element of
// smaller or equal period seen so far.

#include <algorithm>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gaprep/core.hpp"
#include "gaprep/gapped.hpp"
#include "gaprep/runs.hpp"

namespace gaprep {

enum class OsrKind { Run, Repeat };

struct OsrElement {
    pos_t beg = 0;
    std::size_t period = 0;
    pos_t end = 0;
    OsrKind kind = OsrKind::Run;
    std::size_t source = 0;  // index into the runs or repeats input

    friend bool operator==(const OsrElement&, const OsrElement&) = default;
};

/// Merges runs and repeats into (start, period) order with two stable
/// counting-sort passes.
inline std::vector<OsrElement> build_osr(const std::vector<Run>& runs, const std::vector<GappedRepeat>& repeats) {
    std::vector<OsrElement> items;
    items.reserve(runs.size() + repeats.size());
    std::size_t max_key = 0;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        items.push_back({runs[i].start, runs[i].period, runs[i].end, OsrKind::Run, i});
        max_key = std::max({max_key, runs[i].end});
    }
    for (std::size_t i = 0; i < repeats.size(); ++i) {
        items.push_back({repeats[i].left_start, repeats[i].period, repeats[i].end(), OsrKind::Repeat, i});
        max_key = std::max(max_key, repeats[i].end());
    }

    auto counting_sort = [&](auto key) {
        std::vector<std::size_t> count(max_key + 2, 0);
        for (const auto& e : items) ++count[key(e) + 1];
        for (std::size_t x = 1; x < count.size(); ++x) count[x] += count[x - 1];
        std::vector<OsrElement> sorted(items.size());
        for (const auto& e : items) sorted[count[key(e)]++] = e;
        items.swap(sorted);
    };
    counting_sort([](const OsrElement& e) { return e.period; });
    counting_sort([](const OsrElement& e) { return e.beg; });
    return items;
}

/// Ordered (period, end) pairs, strictly increasing in both coordinates.
/// Backed by an ordered map, giving O(log n) predecessor, insert and erase.
class Srq {
public:
    using Pair = std::pair<std::size_t, pos_t>;

    /// Pair with the largest period <= p.
    std::optional<Pair> predecessor(std::size_t p) const {
        auto it = pairs_.upper_bound(p);
        if (it == pairs_.begin()) return std::nullopt;
        --it;
        return Pair{it->first, it->second};
    }

    /// Inserts (p, q), replacing an entry of equal period, then drops every
    /// pair with a larger period whose end is <= q.
    void insert(std::size_t p, pos_t q) {
        auto [it, inserted] = pairs_.insert_or_assign(p, q);
        auto next = std::next(it);
        while (next != pairs_.end() && next->second <= q) next = pairs_.erase(next);
    }

    std::size_t size() const noexcept { return pairs_.size(); }
    std::vector<Pair> contents() const { return {pairs_.begin(), pairs_.end()}; }

    bool well_formed() const {
        for (auto it = pairs_.begin(); it != pairs_.end() && std::next(it) != pairs_.end(); ++it)
            if (!(it->second < std::next(it)->second)) return false;
        return true;
    }

private:
    std::map<std::size_t, pos_t> pairs_;
};

/// Flags, per OSR position, the repeats stretched by an earlier element of
/// smaller period. Runs are never flagged.
/// `final_queue` receives the queue after the sweep; `observe` is called
/// after every element.
template <class Queue = Srq>
std::vector<bool> filter_stretchable(const std::vector<OsrElement>& osr, Queue* final_queue = nullptr,
                                     const std::function<void(const Queue&)>& observe = {}) {
    Queue queue;
    std::vector<bool> stretchable(osr.size(), false);
    for (std::size_t idx = 0; idx < osr.size(); ++idx) {
        const OsrElement& e = osr[idx];
        const auto pred = queue.predecessor(e.period);
        if (pred && e.end <= pred->second) {
            GAPREP_ENSURE(e.kind == OsrKind::Repeat, "a maximal repetition was found stretchable");
            GAPREP_ENSURE(pred->first < e.period, "element contained in another of the same period");
            stretchable[idx] = true;
        } else {
            queue.insert(e.period, e.end);
        }
        if (observe) observe(queue);
    }
    if (final_queue) *final_queue = std::move(queue);
    return stretchable;
}

/// Principality by definition: the span's minimal period equals the period
/// of the repeat. Computed with the prefix function over the span.
inline bool is_principal_direct(const Word& w, const GappedRepeat& sigma) {
    const auto periods = detail::prefix_periods(w.slice(sigma.begin(), sigma.end()));
    return periods.back() == sigma.period;
}

/// Result of one subrepetition search, kept together so callers can inspect
/// the filter verdict for every repeat.
struct SubrepSearch {
    std::vector<Run> runs;
    std::vector<GappedRepeat> repeats;      // GR_{1/delta}, sorted by (beg, end, period)
    std::vector<bool> repeat_stretchable;   // parallel to `repeats`
    std::vector<Subrepetition> subreps;     // sorted by (start, period)
};

inline SubrepSearch search_subrepetitions(const Word& w, const Rational& delta) {
    require_delta(delta);
    SubrepSearch out;
    const Rational alpha = delta.reciprocal();
    out.runs = find_runs(w);
    out.repeats = find_maximal_gapped_repeats(w, alpha).flatten();
    const auto osr = build_osr(out.runs, out.repeats);
    const auto flags = filter_stretchable(osr);
    out.repeat_stretchable.assign(out.repeats.size(), false);
    for (std::size_t idx = 0; idx < osr.size(); ++idx)
        if (osr[idx].kind == OsrKind::Repeat) out.repeat_stretchable[osr[idx].source] = flags[idx];

    for (std::size_t idx = 0; idx < osr.size(); ++idx) {
        const OsrElement& e = osr[idx];
        if (e.kind != OsrKind::Repeat || flags[idx]) continue;
        const GappedRepeat& g = out.repeats[e.source];
        // c >= delta * p, exactly
        if (static_cast<unsigned __int128>(g.copy_len) * delta.den() <
            static_cast<unsigned __int128>(delta.num()) * g.period)
            continue;
        out.subreps.push_back({g.begin(), g.end(), g.period});
    }
    return out;
}

/// All maximal delta-subrepetitions of w, sorted by (start, period).
inline std::vector<Subrepetition> find_subrepetitions(const Word& w, const Rational& delta) {
    return search_subrepetitions(w, delta).subreps;
}

}  // namespace gaprep
