#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "delball/bitword.hpp"

namespace delball {

// A set of equal-length binary words, stored as strictly ascending integer
// codes (which, per the BitWord convention, is lexicographic order of the
// written strings).  For member lengths up to kDenseMaxLength the set also
// carries a dense bitset over all 2^len codes, so intersections reduce to
// word-wise ANDs.
class SequenceSet {
public:
    static constexpr int kDenseMaxLength = 24;

    SequenceSet() = default;

    static SequenceSet empty(int member_length);

    // any order, duplicates collapsed
    static SequenceSet of(int member_length, std::vector<std::uint64_t> codes);

    // codes must already be strictly ascending
    static SequenceSet from_sorted(int member_length, std::vector<std::uint64_t> codes);

    int member_length() const { return member_length_; }
    std::size_t size() const { return codes_.size(); }
    bool is_empty() const { return codes_.empty(); }

    const std::vector<std::uint64_t>& codes() const { return codes_; }
    BitWord word(std::size_t i) const { return BitWord(member_length_, codes_[i]); }

    bool contains_code(std::uint64_t code) const;
    bool contains(const BitWord& w) const {
        return w.length() == member_length_ && contains_code(w.code());
    }

    bool has_dense() const { return !dense_.empty(); }
    const std::vector<std::uint64_t>& dense() const { return dense_; }

    // newline-separated words, ascending, trailing newline when nonempty
    std::string to_text() const;

    friend bool operator==(const SequenceSet& a, const SequenceSet& b) {
        return a.member_length_ == b.member_length_ && a.codes_ == b.codes_;
    }

private:
    int member_length_ = 0;
    std::vector<std::uint64_t> codes_;
    std::vector<std::uint64_t> dense_;  // 2^member_length bits when small enough

    void build_dense();
};

// members of s whose first |v| characters equal v; a contiguous code range
SequenceSet prefix_filter(const SequenceSet& s, const BitWord& v);

// { concat(v, x) : x in s }
SequenceSet prepend(const BitWord& v, const SequenceSet& s);

SequenceSet intersect_all(std::span<const SequenceSet> sets);

}  // namespace delball
