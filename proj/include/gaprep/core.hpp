#pragma once

#include <algorithm>
#include <cassert>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>

namespace gaprep {

// Positions in every public type are 1-based, inclusive.
using pos_t = std::size_t;

/// Raised when an internal consistency check fails (a bug, not bad input).
class logic_fault : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

#define GAPREP_ENSURE(cond, msg)                                              \
    do {                                                                      \
        if (!(cond)) throw ::gaprep::logic_fault(std::string(msg));           \
    } while (0)

/// Immutable byte string addressed with 1-based positions.
class Word {
public:
    Word() = default;
    explicit Word(std::string bytes) : bytes_(std::move(bytes)) {}
    explicit Word(std::string_view bytes) : bytes_(bytes) {}
    explicit Word(const char* bytes) : bytes_(bytes) {}

    std::size_t size() const noexcept { return bytes_.size(); }
    bool empty() const noexcept { return bytes_.empty(); }

    /// Symbol at 1-based position `pos`.
    unsigned char at(pos_t pos) const noexcept {
        assert(pos >= 1 && pos <= bytes_.size());
        return static_cast<unsigned char>(bytes_[pos - 1]);
    }

    /// w[from..to], 1-based inclusive; empty when to < from.
    std::string_view slice(pos_t from, pos_t to) const noexcept {
        if (to < from) return {};
        return std::string_view(bytes_).substr(from - 1, to - from + 1);
    }

    std::string_view view() const noexcept { return bytes_; }
    const std::string& str() const noexcept { return bytes_; }

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::string bytes_;
};

/// Positive rational in lowest terms. Used for alpha, delta and exponents.
class Rational {
public:
    constexpr Rational() = default;

    Rational(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        normalize();
    }

    /// Accepts "P/Q" or "P" with decimal digits only; anything else throws.
    static Rational parse(std::string_view text) {
        auto parse_uint = [&](std::string_view part) {
            std::uint64_t value = 0;
            if (part.empty()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
            auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
            if (ec != std::errc{} || ptr != part.data() + part.size())
                throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
            return value;
        };
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(parse_uint(text), 1);
        return Rational(parse_uint(text.substr(0, slash)), parse_uint(text.substr(slash + 1)));
    }

    constexpr std::uint64_t num() const noexcept { return num_; }
    constexpr std::uint64_t den() const noexcept { return den_; }

    /// Smallest integer >= this value.
    std::uint64_t ceil() const noexcept { return num_ / den_ + (num_ % den_ != 0 ? 1 : 0); }

    Rational reciprocal() const {
        if (num_ == 0) throw std::invalid_argument("reciprocal of zero");
        return Rational(den_, num_);
    }

    Rational& operator+=(const Rational& other) {
        const std::uint64_t g = std::gcd(den_, other.den_);
        const unsigned __int128 lhs = static_cast<unsigned __int128>(num_) * (other.den_ / g);
        const unsigned __int128 rhs = static_cast<unsigned __int128>(other.num_) * (den_ / g);
        const unsigned __int128 den = static_cast<unsigned __int128>(den_ / g) * other.den_;
        unsigned __int128 sum = lhs + rhs;
        unsigned __int128 d = den;
        const unsigned __int128 common = gcd128(sum, d);
        sum /= common;
        d /= common;
        if (sum > UINT64_MAX || d > UINT64_MAX) throw std::overflow_error("rational overflow");
        num_ = static_cast<std::uint64_t>(sum);
        den_ = static_cast<std::uint64_t>(d);
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
        const unsigned __int128 lhs = static_cast<unsigned __int128>(a.num_) * b.den_;
        const unsigned __int128 rhs = static_cast<unsigned __int128>(b.num_) * a.den_;
        return lhs <=> rhs;
    }

    std::string to_string() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    static unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
        while (b != 0) {
            const auto t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }
    void normalize() {
        const std::uint64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

/// A maximal repetition w[start..end] with minimal period `period`.
struct Run {
    pos_t start = 0;
    pos_t end = 0;
    std::size_t period = 0;

    std::size_t length() const noexcept { return end - start + 1; }
    Rational exponent() const { return Rational(length(), period); }

    friend bool operator==(const Run&, const Run&) = default;
    friend auto operator<=>(const Run& a, const Run& b) {
        return std::tie(a.start, a.period, a.end) <=> std::tie(b.start, b.period, b.end);
    }
};

/// Gapped repeat (u', u'') given by the left copy start, copy length and
/// period. Identity is the triple; equal spans with different periods differ.
struct GappedRepeat {
    pos_t left_start = 0;
    std::size_t copy_len = 0;
    std::size_t period = 0;

    pos_t left_end() const noexcept { return left_start + copy_len - 1; }
    pos_t right_start() const noexcept { return left_start + period; }
    pos_t right_end() const noexcept { return left_start + period + copy_len - 1; }
    pos_t begin() const noexcept { return left_start; }
    pos_t end() const noexcept { return right_end(); }
    std::size_t gap() const noexcept { return period - copy_len; }

    GappedRepeat shifted(std::size_t offset) const noexcept {
        return {left_start + offset, copy_len, period};
    }

    friend bool operator==(const GappedRepeat&, const GappedRepeat&) = default;
    friend auto operator<=>(const GappedRepeat& a, const GappedRepeat& b) {
        return std::tie(a.left_start, a.period, a.copy_len) <=> std::tie(b.left_start, b.period, b.copy_len);
    }
};

/// Maximal delta-subrepetition w[start..end] with minimal period `period`.
struct Subrepetition {
    pos_t start = 0;
    pos_t end = 0;
    std::size_t period = 0;

    std::size_t length() const noexcept { return end - start + 1; }
    Rational exponent() const { return Rational(length(), period); }

    friend bool operator==(const Subrepetition&, const Subrepetition&) = default;
    friend auto operator<=>(const Subrepetition& a, const Subrepetition& b) {
        return std::tie(a.start, a.period, a.end) <=> std::tie(b.start, b.period, b.end);
    }
};

enum class RepeatClass { Periodic, PrefixSemiperiodic, SuffixSemiperiodic, Ordinary };

inline std::string_view to_string(RepeatClass c) noexcept {
    switch (c) {
        case RepeatClass::Periodic: return "Periodic";
        case RepeatClass::PrefixSemiperiodic: return "PrefixSemiperiodic";
        case RepeatClass::SuffixSemiperiodic: return "SuffixSemiperiodic";
        case RepeatClass::Ordinary: return "Ordinary";
    }
    return "?";
}

/// One factor of the non-overlapping s-factorization. `delta` is the
/// distance back to an earlier occurrence and is stored only when len > 1.
struct Factor {
    std::size_t index = 0;
    pos_t start = 0;
    std::size_t len = 0;
    std::optional<std::size_t> delta;

    pos_t end() const noexcept { return start + len - 1; }

    friend bool operator==(const Factor&, const Factor&) = default;
};

inline void require_alpha(const Rational& alpha) {
    if (alpha <= Rational(1, 1)) throw std::invalid_argument("alpha must be greater than 1, got " + alpha.to_string());
}

inline void require_delta(const Rational& delta) {
    if (delta.num() == 0 || delta >= Rational(1, 1))
        throw std::invalid_argument("delta must lie strictly between 0 and 1, got " + delta.to_string());
}

/// period <= alpha * copy_len, compared exactly.
inline bool alpha_gapped_test(std::size_t period, std::size_t copy_len, const Rational& alpha) {
    require_alpha(alpha);
    return static_cast<unsigned __int128>(period) * alpha.den() <=
           static_cast<unsigned __int128>(alpha.num()) * copy_len;
}

// Boundary checks against the word. Each costs O(1) except the equality
// checks, which cost O(copy length) / O(span).

inline bool is_maximal(const Word& w, const GappedRepeat& g) noexcept {
    const std::size_t n = w.size();
    if (g.left_start == 0 || g.right_end() > n) return false;
    if (g.left_start > 1 && w.at(g.left_start - 1) == w.at(g.right_start() - 1)) return false;
    if (g.right_end() < n && w.at(g.left_end() + 1) == w.at(g.right_end() + 1)) return false;
    return true;
}

inline bool copies_equal(const Word& w, const GappedRepeat& g) noexcept {
    if (g.left_start == 0 || g.right_end() > w.size()) return false;
    return w.slice(g.left_start, g.left_end()) == w.slice(g.right_start(), g.right_end());
}

inline bool is_valid_gapped_repeat(const Word& w, const GappedRepeat& g) noexcept {
    return g.copy_len >= 1 && g.copy_len < g.period && copies_equal(w, g) && is_maximal(w, g);
}

/// `period` is a period of w[start..end] and the factor cannot be extended
/// keeping it. Minimality is not checked here.
inline bool is_maximal_periodic_span(const Word& w, pos_t start, pos_t end, std::size_t period) noexcept {
    const std::size_t n = w.size();
    if (start == 0 || end > n || end < start || period == 0) return false;
    for (pos_t x = start; x + period <= end; ++x)
        if (w.at(x) != w.at(x + period)) return false;
    if (start > 1 && start - 1 + period <= n && w.at(start - 1) == w.at(start - 1 + period)) return false;
    if (end < n && end + 1 > period && w.at(end + 1 - period) == w.at(end + 1)) return false;
    return true;
}

}  // namespace gaprep
