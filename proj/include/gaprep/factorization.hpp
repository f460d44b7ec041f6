#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "gaprep/core.hpp"

namespace gaprep {

namespace detail {

// Suffix automaton built online over a growing prefix of the word. Each state
// remembers the end position of its first occurrence, which is enough to
// recover an occurrence of any matched string. Transitions live in a shared
// edge pool as per-state singly linked lists, so memory stays O(n) for any
// byte alphabet.
class PrefixAutomaton {
public:
    static constexpr std::int32_t none = -1;

    explicit PrefixAutomaton(std::size_t capacity) {
        states_.reserve(2 * capacity + 1);
        edges_.reserve(3 * capacity + 1);
        states_.push_back({0, none, 0, none});
    }

    std::int32_t root() const noexcept { return 0; }

    std::int32_t next(std::int32_t state, unsigned char c) const noexcept {
        for (std::int32_t e = states_[state].head; e != none; e = edges_[e].next)
            if (edges_[e].symbol == c) return edges_[e].target;
        return none;
    }

    /// 1-based end position of the first occurrence of the strings in `state`.
    std::size_t first_end(std::int32_t state) const noexcept { return states_[state].first_end; }

    /// Appends symbol `c` located at 1-based position `pos`.
    void extend(unsigned char c, std::size_t pos) {
        const std::int32_t cur = add_state(states_[last_].len + 1, pos);
        std::int32_t p = last_;
        while (p != none && next(p, c) == none) {
            add_edge(p, c, cur);
            p = states_[p].link;
        }
        if (p == none) {
            states_[cur].link = 0;
        } else {
            const std::int32_t q = next(p, c);
            if (states_[p].len + 1 == states_[q].len) {
                states_[cur].link = q;
            } else {
                const std::int32_t clone = add_state(states_[p].len + 1, states_[q].first_end);
                for (std::int32_t e = states_[q].head; e != none; e = edges_[e].next)
                    add_edge(clone, edges_[e].symbol, edges_[e].target);
                states_[clone].link = states_[q].link;
                while (p != none && next(p, c) == q) {
                    redirect(p, c, clone);
                    p = states_[p].link;
                }
                states_[q].link = clone;
                states_[cur].link = clone;
            }
        }
        last_ = cur;
    }

private:
    struct State {
        std::int32_t len;
        std::int32_t link;
        std::size_t first_end;
        std::int32_t head;
    };
    struct Edge {
        unsigned char symbol;
        std::int32_t target;
        std::int32_t next;
    };

    std::int32_t add_state(std::int32_t len, std::size_t first_end) {
        states_.push_back({len, none, first_end, none});
        return static_cast<std::int32_t>(states_.size() - 1);
    }
    void add_edge(std::int32_t from, unsigned char c, std::int32_t to) {
        edges_.push_back({c, to, states_[from].head});
        states_[from].head = static_cast<std::int32_t>(edges_.size() - 1);
    }
    void redirect(std::int32_t from, unsigned char c, std::int32_t to) {
        for (std::int32_t e = states_[from].head; e != none; e = edges_[e].next)
            if (edges_[e].symbol == c) {
                edges_[e].target = to;
                return;
            }
    }

    std::vector<State> states_;
    std::vector<Edge> edges_;
    std::int32_t last_ = 0;
};

}  // namespace detail

/// Non-overlapping s-factorization: f1 = w[1], and each later factor is the
/// longest fragment starting right after the previous one that occurs inside
/// the already factored prefix (a single letter when no such fragment exists).
inline std::vector<Factor> s_factorize(const Word& w) {
    const std::size_t n = w.size();
    std::vector<Factor> factors;
    if (n == 0) return factors;
    if (n >= static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max() / 3))
        throw std::length_error("word too long for factorization");

    detail::PrefixAutomaton automaton(n);
    pos_t a = 1;
    while (a <= n) {
        std::int32_t state = automaton.root();
        std::size_t matched = 0;
        while (a + matched <= n) {
            const std::int32_t nxt = automaton.next(state, w.at(a + matched));
            if (nxt == detail::PrefixAutomaton::none) break;
            state = nxt;
            ++matched;
        }
        Factor f{factors.size() + 1, a, matched == 0 ? 1 : matched, std::nullopt};
        if (matched > 1) {
            const std::size_t occ_start = automaton.first_end(state) - matched + 1;
            f.delta = a - occ_start;
        }
        for (pos_t x = a; x <= f.end(); ++x) automaton.extend(w.at(x), x);
        a = f.end() + 1;
        factors.push_back(f);
    }
    return factors;
}

}  // namespace gaprep
