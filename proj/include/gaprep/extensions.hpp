#pragma once

// Longest common prefix / suffix extension tables.
//
//   lp_self(u)(i)     = lcp(u, u[i..|u|])                 i = 2..|u|
//   ls_self(u)(i)     = lcs(u, u[1..|u|-i])               i = 1..|u|-1
//   lp_cross(u,v)(i)  = lcp(u[|u|-i..|u|] v, v)           i = 0..|u|-1
//   ls_cross(u,v)(i)  = lcs(u, u v[1..i])                 i = 1..|v|
//
// All positions inside u and v are 1-based. Every table is built with one
// Z-array pass over a concatenation, so its cost is linear in |u|+|v|.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace gaprep {

/// Table of extension lengths over the index range [first, first+size).
class ExtensionTable {
public:
    ExtensionTable() = default;
    ExtensionTable(std::size_t first, std::vector<std::size_t> values)
        : first_(first), values_(std::move(values)) {}

    std::size_t first_index() const noexcept { return first_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    /// Value at a domain index; indices outside the domain read as 0.
    std::size_t operator()(std::size_t i) const noexcept {
        if (i < first_ || i - first_ >= values_.size()) return 0;
        return values_[i - first_];
    }

    const std::vector<std::size_t>& values() const noexcept { return values_; }

private:
    std::size_t first_ = 0;
    std::vector<std::size_t> values_;
};

namespace detail {

// Symbols are widened to int so that -1 can act as a separator that never
// matches an input byte.
using symbol_t = std::int16_t;
inline constexpr symbol_t separator = -1;

inline void append_forward(std::vector<symbol_t>& out, std::string_view s) {
    for (unsigned char c : s) out.push_back(static_cast<symbol_t>(c));
}

inline void append_reversed(std::vector<symbol_t>& out, std::string_view s) {
    for (auto it = s.rbegin(); it != s.rend(); ++it)
        out.push_back(static_cast<symbol_t>(static_cast<unsigned char>(*it)));
}

/// z[i] = lcp(s, s[i..]) for i >= 1; z[0] = |s|.
inline std::vector<std::size_t> z_array(const std::vector<symbol_t>& s) {
    const std::size_t n = s.size();
    std::vector<std::size_t> z(n, 0);
    if (n == 0) return z;
    z[0] = n;
    std::size_t l = 0, r = 0;  // [l, r) is the rightmost match window
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t k = 0;
        if (i < r) k = std::min(r - i, z[i - l]);
        while (i + k < n && s[k] == s[i + k]) ++k;
        z[i] = k;
        if (i + k > r) {
            l = i;
            r = i + k;
        }
    }
    return z;
}

}  // namespace detail

inline ExtensionTable lp_self(std::string_view u) {
    if (u.size() < 2) return {2, {}};
    std::vector<detail::symbol_t> s;
    s.reserve(u.size());
    detail::append_forward(s, u);
    const auto z = detail::z_array(s);
    // LP_u(i) = z[i-1]
    return {2, std::vector<std::size_t>(z.begin() + 1, z.end())};
}

inline ExtensionTable ls_self(std::string_view u) {
    if (u.size() < 2) return {1, {}};
    std::vector<detail::symbol_t> s;
    s.reserve(u.size());
    detail::append_reversed(s, u);
    const auto z = detail::z_array(s);
    // In reverse(u), the suffix starting at 0-based index i is reverse(u[1..|u|-i]).
    return {1, std::vector<std::size_t>(z.begin() + 1, z.end())};
}

inline ExtensionTable lp_cross(std::string_view u, std::string_view v) {
    if (u.empty() || v.empty()) return {0, {}};
    // s = v # u v ; the suffix u[|u|-i..|u|] v starts at |v| + 1 + (|u|-1-i).
    std::vector<detail::symbol_t> s;
    s.reserve(u.size() + 2 * v.size() + 1);
    detail::append_forward(s, v);
    s.push_back(detail::separator);
    detail::append_forward(s, u);
    detail::append_forward(s, v);
    const auto z = detail::z_array(s);
    std::vector<std::size_t> values(u.size());
    const std::size_t base = v.size() + 1;
    for (std::size_t i = 0; i < u.size(); ++i) values[i] = z[base + (u.size() - 1 - i)];
    return {0, std::move(values)};
}

inline ExtensionTable ls_cross(std::string_view u, std::string_view v) {
    if (u.empty() || v.empty()) return {1, {}};
    // s = rev(u) # rev(v) rev(u); rev(u v[1..i]) starts at |u| + 1 + (|v| - i).
    std::vector<detail::symbol_t> s;
    s.reserve(2 * u.size() + v.size() + 1);
    detail::append_reversed(s, u);
    s.push_back(detail::separator);
    detail::append_reversed(s, v);
    detail::append_reversed(s, u);
    const auto z = detail::z_array(s);
    std::vector<std::size_t> values(v.size());
    const std::size_t base = u.size() + 1;
    for (std::size_t i = 1; i <= v.size(); ++i) values[i - 1] = z[base + (v.size() - i)];
    return {1, std::move(values)};
}

}  // namespace gaprep
