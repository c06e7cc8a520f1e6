#pragma once

// Occurrence counting in the two-letter recursive strings
//   F(0) = "A",  F(1) = "B",  F(n) = F(n-1) + F(n-2).
// Lengths follow the Fibonacci numbers, so explicit construction stops
// being an option long before the supported n = 50. Three strategies are
// provided: build-and-scan, a streaming scanner that never materializes
// the string, and a summary algebra that runs in O(n) concatenation steps.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace textalg::fib {

inline constexpr int kMaxIndex = 50;          // largest supported n
inline constexpr int kMaxPatternLength = 20;  // largest supported pattern
inline constexpr int kDefaultBuildCap = 40;   // memory guard, build_explicit
inline constexpr int kDefaultStreamCap = 35;  // time guard, stream_count

// A counting request: how many times does pattern occur in F(index_n)?
// Overlapping occurrences all count.
struct FibQuery {
    std::string pattern;
    int index_n = 0;
};

inline void validate_query(const FibQuery& query) {
    if (query.pattern.empty() ||
        query.pattern.size() > static_cast<std::size_t>(kMaxPatternLength))
        throw std::invalid_argument(
            "pattern length must be between 1 and " +
            std::to_string(kMaxPatternLength) + " characters");
    if (query.index_n < 0 || query.index_n > kMaxIndex)
        throw std::invalid_argument("index n must be between 0 and " +
                                    std::to_string(kMaxIndex));
}

// |F(n)|. Fits comfortably in 64 bits for every supported index.
inline std::uint64_t fib_length(int n) {
    if (n < 0) throw std::invalid_argument("fib_length: negative index");
    std::uint64_t prev = 1;  // |F(0)|
    std::uint64_t cur = 1;   // |F(1)|
    for (int i = 2; i <= n; ++i) {
        const std::uint64_t next = cur + prev;
        prev = cur;
        cur = next;
    }
    return n == 0 ? prev : cur;
}

// Materializes F(n). The cap exists because the result doubles roughly
// every 1.44 steps; n = 40 is already a ~165 MB string.
inline std::string build_explicit(int n, int cap = kDefaultBuildCap) {
    if (n < 0) throw std::invalid_argument("build_explicit: negative index");
    if (n > cap)
        throw std::length_error("build_explicit: n = " + std::to_string(n) +
                                " exceeds the explicit-construction cap " +
                                std::to_string(cap));
    std::string prev = "A";
    std::string cur = "B";
    if (n == 0) return prev;
    for (int i = 2; i <= n; ++i) {
        std::string next;
        next.reserve(cur.size() + prev.size());
        next.append(cur);
        next.append(prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Brute-force overlapping occurrence count; the oracle everything else is
// checked against.
inline std::uint64_t scan_count(std::string_view text,
                                std::string_view pattern) {
    if (pattern.empty())
        throw std::invalid_argument("scan_count: empty pattern");
    if (text.size() < pattern.size()) return 0;
    std::uint64_t count = 0;
    for (std::size_t pos = 0; pos + pattern.size() <= text.size(); ++pos)
        if (text.compare(pos, pattern.size(), pattern) == 0) ++count;
    return count;
}

// Counts by replaying the recursive derivation of F(n) character by
// character through a sliding window of |pattern| characters, so memory
// stays O(|pattern| + n). Time is still proportional to |F(n)|, hence the
// cap.
inline std::uint64_t stream_count(const FibQuery& query,
                                  int cap = kDefaultStreamCap) {
    validate_query(query);
    if (query.index_n > cap)
        throw std::length_error("stream_count: n = " +
                                std::to_string(query.index_n) +
                                " exceeds the streaming cap " +
                                std::to_string(cap));
    const std::string& pattern = query.pattern;
    std::string window;
    window.reserve(pattern.size());
    std::uint64_t count = 0;
    auto feed = [&](char c) {
        if (window.size() == pattern.size()) window.erase(0, 1);
        window.push_back(c);
        if (window == pattern) ++count;
    };
    auto walk = [&](auto&& self, int n) -> void {
        if (n == 0) {
            feed('A');
            return;
        }
        if (n == 1) {
            feed('B');
            return;
        }
        self(self, n - 1);
        self(self, n - 2);
    };
    walk(walk, query.index_n);
    return count;
}

// Occurrences of pattern in left_suffix + right_prefix that use at least
// one character from each side, i.e. the occurrences a plain per-side count
// misses at a concatenation seam. Both fragments must be shorter than the
// pattern, which also guarantees every full match in the joined string
// spans the seam.
inline std::uint64_t junction_count(std::string_view left_suffix,
                                    std::string_view right_prefix,
                                    std::string_view pattern) {
    if (pattern.empty())
        throw std::invalid_argument("junction_count: empty pattern");
    if (left_suffix.size() >= pattern.size() ||
        right_prefix.size() >= pattern.size())
        throw std::invalid_argument(
            "junction_count: fragments must be shorter than the pattern");
    std::string seam;
    seam.reserve(left_suffix.size() + right_prefix.size());
    seam.append(left_suffix);
    seam.append(right_prefix);
    std::uint64_t count = 0;
    for (std::size_t pos = 0; pos + pattern.size() <= seam.size(); ++pos) {
        if (seam.compare(pos, pattern.size(), pattern) != 0) continue;
        const bool spans_seam = pos < left_suffix.size() &&
                                pos + pattern.size() > left_suffix.size();
        if (spans_seam) ++count;
    }
    return count;
}

// Everything the algebra needs to know about a long string with respect to
// one pattern: its first and last |pattern|-1 characters and its own
// occurrence count. Two summaries concatenate without the strings.
struct OccurrenceSummary {
    std::string prefix;
    std::uint64_t count = 0;
    std::string suffix;

    friend bool operator==(const OccurrenceSummary&,
                           const OccurrenceSummary&) = default;
};

// Summary of an explicit string. The text must be at least twice the
// pattern length so prefix and suffix are saturated and non-overlapping
// enough for summary_concat to be exact.
inline OccurrenceSummary summary_of_string(std::string_view text,
                                           std::string_view pattern) {
    if (pattern.empty())
        throw std::invalid_argument("summary_of_string: empty pattern");
    if (text.size() < 2 * pattern.size())
        throw std::invalid_argument(
            "summary_of_string: text must be at least twice the pattern "
            "length");
    const std::size_t edge = pattern.size() - 1;
    return OccurrenceSummary{std::string(text.substr(0, edge)),
                             scan_count(text, pattern),
                             std::string(text.substr(text.size() - edge))};
}

// Summary of the concatenation left + right: counts add, plus whatever the
// seam contributes; the outer prefix and suffix survive unchanged because
// both operands are saturated (their edges hold |pattern|-1 characters).
inline OccurrenceSummary summary_concat(const OccurrenceSummary& left,
                                        const OccurrenceSummary& right,
                                        std::string_view pattern) {
    if (pattern.empty())
        throw std::invalid_argument("summary_concat: empty pattern");
    const std::size_t edge = pattern.size() - 1;
    if (left.prefix.size() != edge || left.suffix.size() != edge ||
        right.prefix.size() != edge || right.suffix.size() != edge)
        throw std::invalid_argument(
            "summary_concat: operands must carry exactly pattern-length-1 "
            "edge characters");
    return OccurrenceSummary{
        left.prefix,
        left.count + right.count +
            junction_count(left.suffix, right.prefix, pattern),
        right.suffix};
}

// Full counting strategy: scan outright while F(n) is shorter than twice
// the pattern (summaries would not be saturated there), otherwise build the
// first two strings long enough to summarize and run the algebra up to n.
inline std::uint64_t count_occurrences(const FibQuery& query) {
    validate_query(query);
    const std::string& pattern = query.pattern;
    const std::uint64_t threshold = 2 * static_cast<std::uint64_t>(
                                            pattern.size());
    if (fib_length(query.index_n) < threshold)
        return scan_count(build_explicit(query.index_n), pattern);
    int k = 0;
    while (fib_length(k) < threshold) ++k;
    // k is tiny: the threshold is at most 40, so |F(9)| = 55 already passes.
    OccurrenceSummary two_back = summary_of_string(build_explicit(k), pattern);
    if (query.index_n == k) return two_back.count;
    OccurrenceSummary one_back =
        summary_of_string(build_explicit(k + 1), pattern);
    for (int m = k + 2; m <= query.index_n; ++m) {
        OccurrenceSummary current = summary_concat(one_back, two_back, pattern);
        two_back = std::move(one_back);
        one_back = std::move(current);
    }
    return one_back.count;
}

}  // namespace textalg::fib
