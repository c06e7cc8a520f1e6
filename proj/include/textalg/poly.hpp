#pragma once

// Sparse bivariate polynomial algebra over 64-bit integers: parsing of the
// compact one-line notation (e.g. "-yx8+9x3-1+y"), term-by-term products,
// two interchangeable cleanup strategies, and the exact two-line rendering
// where exponents sit on their own line above the base line.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "textalg/errors.hpp"

namespace textalg::poly {

// One monomial: coeff * x^xexp * y^yexp. Exponents are kept non-negative by
// every producing operation; coefficients may be any signed 64-bit value.
struct Term {
    std::int64_t coeff = 0;
    std::int64_t xexp = 0;
    std::int64_t yexp = 0;

    friend bool operator==(const Term&, const Term&) = default;
};

// A finite sequence of terms. Raw products may contain repeated exponent
// pairs and zero coefficients; the simplify_* functions produce the
// canonical form (merged, zero-free, ordered by term_compare).
struct Polynomial {
    std::vector<Term> terms;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

namespace detail {

// Reads a decimal digit run starting at text[i], advancing i past it.
// Rejects values that do not fit a signed 64-bit integer.
inline std::int64_t read_number(std::string_view text, std::size_t& i,
                                const char* what) {
    const std::size_t start = i;
    constexpr std::uint64_t kLimit = 9223372036854775807ull;  // INT64_MAX
    std::uint64_t value = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        const std::uint64_t digit = static_cast<std::uint64_t>(text[i] - '0');
        if (value > (kLimit - digit) / 10)
            throw parse_error(std::string(what) + " does not fit 64 bits",
                              start);
        value = value * 10 + digit;
        ++i;
    }
    return static_cast<std::int64_t>(value);
}

}  // namespace detail

// Parses the one-line polynomial notation. Each term is
//   [sign] [coefficient] [x[exp]] [y[exp]]
// with at least one of coefficient / variable part present. The sign is
// optional on the first term only; afterwards '+'/'-' double as separators.
// A variable may appear at most once per term, in either order. No
// whitespace is allowed anywhere.
inline Polynomial parse_polynomial(std::string_view text) {
    if (text.empty()) throw parse_error("empty polynomial", 0);
    Polynomial result;
    std::size_t i = 0;
    while (true) {
        bool negative = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            negative = text[i] == '-';
            ++i;
        }
        const std::size_t term_start = i;
        bool have_coeff = false;
        std::int64_t magnitude = 1;
        if (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            magnitude = detail::read_number(text, i, "coefficient");
            have_coeff = true;
        }
        std::int64_t xexp = 0;
        std::int64_t yexp = 0;
        bool seen_x = false;
        bool seen_y = false;
        while (i < text.size() && (text[i] == 'x' || text[i] == 'y')) {
            const char var = text[i];
            if ((var == 'x' && seen_x) || (var == 'y' && seen_y))
                throw parse_error(
                    std::string("variable '") + var + "' repeated in one term",
                    i);
            ++i;
            std::int64_t exp = 1;
            if (i < text.size() && text[i] >= '0' && text[i] <= '9')
                exp = detail::read_number(text, i, "exponent");
            if (var == 'x') {
                seen_x = true;
                xexp = exp;
            } else {
                seen_y = true;
                yexp = exp;
            }
        }
        if (!have_coeff && !seen_x && !seen_y) {
            if (i < text.size() && text[i] != '+' && text[i] != '-')
                throw parse_error(
                    std::string("unexpected character '") + text[i] + "'", i);
            throw parse_error("empty term", term_start);
        }
        result.terms.push_back(
            Term{negative ? -magnitude : magnitude, xexp, yexp});
        if (i >= text.size()) break;
        if (text[i] != '+' && text[i] != '-')
            throw parse_error(
                std::string("unexpected character '") + text[i] + "'", i);
        // loop re-enters with text[i] being the sign of the next term
    }
    return result;
}

// Product of two monomials: coefficients multiply, exponents add.
inline Term term_product(const Term& a, const Term& b) {
    Term out;
    if (__builtin_mul_overflow(a.coeff, b.coeff, &out.coeff) ||
        __builtin_add_overflow(a.xexp, b.xexp, &out.xexp) ||
        __builtin_add_overflow(a.yexp, b.yexp, &out.yexp))
        throw std::overflow_error("term product exceeds the 64-bit range");
    return out;
}

// Display order: higher x exponent first, ties broken by higher y exponent.
// Coefficients are ignored, so distinct terms can compare equal.
inline std::strong_ordering term_compare(const Term& a, const Term& b) {
    if (a.xexp != b.xexp)
        return a.xexp > b.xexp ? std::strong_ordering::less
                               : std::strong_ordering::greater;
    if (a.yexp != b.yexp)
        return a.yexp > b.yexp ? std::strong_ordering::less
                               : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

inline bool term_less(const Term& a, const Term& b) {
    return term_compare(a, b) == std::strong_ordering::less;
}

// Raw product: every pairwise term product, left factor outer. The result
// is intentionally not cleaned up; feed it to one of the simplify_*.
inline Polynomial multiply(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    out.terms.reserve(a.terms.size() * b.terms.size());
    for (const Term& ta : a.terms)
        for (const Term& tb : b.terms) out.terms.push_back(term_product(ta, tb));
    return out;
}

namespace detail {

inline void add_coeff_checked(std::int64_t& into, std::int64_t value) {
    if (__builtin_add_overflow(into, value, &into))
        throw std::overflow_error("coefficient sum exceeds the 64-bit range");
}

inline Polynomial finish_simplify(std::vector<Term> merged) {
    std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
    std::sort(merged.begin(), merged.end(), term_less);
    return Polynomial{std::move(merged)};
}

}  // namespace detail

// Cleanup, strategy one: scan the accumulator for a matching exponent pair
// on every insertion (quadratic, no reordering until the final sort).
inline Polynomial simplify_unsorted(const Polynomial& p) {
    std::vector<Term> merged;
    for (const Term& t : p.terms) {
        auto match = std::find_if(
            merged.begin(), merged.end(), [&t](const Term& m) {
                return m.xexp == t.xexp && m.yexp == t.yexp;
            });
        if (match == merged.end())
            merged.push_back(t);
        else
            detail::add_coeff_checked(match->coeff, t.coeff);
    }
    return detail::finish_simplify(std::move(merged));
}

// Cleanup, strategy two: sort first so equal exponent pairs are adjacent,
// then merge in one pass. Produces exactly the same canonical form as
// simplify_unsorted.
inline Polynomial simplify_sorted(const Polynomial& p) {
    std::vector<Term> sorted = p.terms;
    std::sort(sorted.begin(), sorted.end(), term_less);
    std::vector<Term> merged;
    merged.reserve(sorted.size());
    for (const Term& t : sorted) {
        if (!merged.empty() && merged.back().xexp == t.xexp &&
            merged.back().yexp == t.yexp)
            detail::add_coeff_checked(merged.back().coeff, t.coeff);
        else
            merged.push_back(t);
    }
    return detail::finish_simplify(std::move(merged));
}

// The two output lines of the renderer. Both are right-trimmed; either may
// be empty or longer than the other.
struct TwoLineText {
    std::string exponents;
    std::string base;

    friend bool operator==(const TwoLineText&, const TwoLineText&) = default;
};

// Renders a canonical polynomial in two lines. Exponents of 2 or more are
// written on the upper line, each starting in the column right after its
// variable, with the base line padded underneath. Format rules:
//   - coefficient magnitude 1 is omitted unless the term is a constant;
//   - exponent 1 is written as the bare variable, exponent 0 omits it;
//   - "x" with exponent 1 followed by a y part gets one spacer column
//     so the variables do not run together;
//   - the first term is prefixed "- " if negative, later terms are joined
//     with " + " or " - " according to their sign;
//   - the empty polynomial renders as "0".
inline TwoLineText render_two_line(const Polynomial& p) {
    if (p.terms.empty()) return {"", "0"};
    std::string base;
    std::string expo;
    auto put_exponent = [&](std::int64_t e, bool spacer_if_one) {
        if (e >= 2) {
            const std::string digits = std::to_string(e);
            expo.resize(base.size(), ' ');
            expo += digits;
            base.append(digits.size(), ' ');
        } else if (spacer_if_one) {
            base.push_back(' ');
        }
    };
    bool first = true;
    for (const Term& t : p.terms) {
        if (first) {
            if (t.coeff < 0) base += "- ";
        } else {
            base += t.coeff < 0 ? " - " : " + ";
        }
        first = false;
        const std::uint64_t magnitude =
            t.coeff < 0 ? 0ull - static_cast<std::uint64_t>(t.coeff)
                        : static_cast<std::uint64_t>(t.coeff);
        const bool has_variable = t.xexp >= 1 || t.yexp >= 1;
        if (magnitude != 1 || !has_variable) base += std::to_string(magnitude);
        if (t.xexp >= 1) {
            base += 'x';
            put_exponent(t.xexp, /*spacer_if_one=*/t.yexp >= 1);
        }
        if (t.yexp >= 1) {
            base += 'y';
            put_exponent(t.yexp, false);
        }
    }
    auto rtrim = [](std::string& s) {
        while (!s.empty() && s.back() == ' ') s.pop_back();
    };
    rtrim(base);
    rtrim(expo);
    return {std::move(expo), std::move(base)};
}

}  // namespace textalg::poly
