#include "delball/balls.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <vector>

namespace delball {

namespace {

// Distinct-subsequence generation: a distinct subsequence of the remaining
// suffix either starts with '0' taken at the first '0', or with '1' taken at
// the first '1'.  Branching only on those first occurrences produces every
// distinct subsequence exactly once, and the 0-branch-first order emits codes
// ascending.  (rem, len) is the unconsumed suffix in BitWord packing.
void gen_subsequences(std::uint64_t rem, int len, int want, std::uint64_t acc,
                      std::vector<std::uint64_t>& out) {
    if (want == 0) {
        out.push_back(acc);
        return;
    }
    const std::uint64_t zeros = ~rem & low_mask(len);
    if (zeros != 0) {
        const int after = std::bit_width(zeros) - 1;  // suffix length after the first '0'
        if (after >= want - 1)
            gen_subsequences(rem & low_mask(after), after, want - 1, acc << 1, out);
    }
    if (rem != 0) {
        const int after = std::bit_width(rem) - 1;
        if (after >= want - 1)
            gen_subsequences(rem & low_mask(after), after, want - 1, (acc << 1) | 1, out);
    }
}

// Supersequences are enumerated directly, one position at a time, pruning any
// prefix that leaves fewer free positions than unmatched symbols of y.  Each
// word is visited at most once, so no dedup step is needed.
void gen_supersequences(int pos_left, std::uint64_t yrem, int ylen, std::uint64_t acc,
                        std::vector<std::uint64_t>& out) {
    if (pos_left == 0) {
        out.push_back(acc);
        return;
    }
    for (std::uint64_t c = 0; c <= 1; ++c) {
        std::uint64_t nyrem = yrem;
        int nylen = ylen;
        if (ylen > 0 && ((yrem >> (ylen - 1)) & 1u) == c) {
            nylen = ylen - 1;
            nyrem = yrem & low_mask(nylen);
        }
        if (pos_left - 1 >= nylen)
            gen_supersequences(pos_left - 1, nyrem, nylen, (acc << 1) | c, out);
    }
}

}  // namespace

SequenceSet deletion_ball(const BitWord& x, int t) {
    if (t < 0 || t > x.length())
        throw std::domain_error("deletion_ball: radius must be in 0..|x|");
    std::vector<std::uint64_t> codes;
    gen_subsequences(x.code(), x.length(), x.length() - t, 0, codes);
    return SequenceSet::from_sorted(x.length() - t, std::move(codes));
}

SequenceSet insertion_ball(const BitWord& y, int t) {
    if (t < 0) throw std::domain_error("insertion_ball: radius must be nonnegative");
    if (y.length() + t > BitWord::kMaxLength)
        throw std::domain_error("insertion_ball: |y| + t exceeds 63");
    std::vector<std::uint64_t> codes;
    gen_supersequences(y.length() + t, y.code(), y.length(), 0, codes);
    return SequenceSet::from_sorted(y.length() + t, std::move(codes));
}

int deletion_distance(const BitWord& x, const BitWord& y) {
    if (x.length() != y.length())
        throw std::domain_error("deletion_distance: words must have equal length");
    const int n = x.length();
    std::vector<int> prev(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> cur(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (x.bit(i - 1) == y.bit(j - 1))
                cur[j] = prev[j - 1] + 1;
            else
                cur[j] = std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return n - prev[n];
}

}  // namespace delball
