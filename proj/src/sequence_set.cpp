#include "delball/sequence_set.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace delball {

namespace {

int check_length(int member_length) {
    if (member_length < 0 || member_length > BitWord::kMaxLength)
        throw std::domain_error("SequenceSet: member length must be in 0..63");
    return member_length;
}

std::size_t dense_word_count(int member_length) {
    return member_length <= 6 ? 1 : (std::size_t{1} << (member_length - 6));
}

}  // namespace

SequenceSet SequenceSet::empty(int member_length) {
    SequenceSet s;
    s.member_length_ = check_length(member_length);
    s.build_dense();
    return s;
}

SequenceSet SequenceSet::of(int member_length, std::vector<std::uint64_t> codes) {
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    return from_sorted(member_length, std::move(codes));
}

SequenceSet SequenceSet::from_sorted(int member_length, std::vector<std::uint64_t> codes) {
    SequenceSet s;
    s.member_length_ = check_length(member_length);
    for (std::size_t i = 0; i < codes.size(); ++i) {
        if (member_length < 64 && (codes[i] >> member_length) != 0)
            throw std::domain_error("SequenceSet: code out of range for member length");
        if (i > 0 && codes[i - 1] >= codes[i])
            throw std::domain_error("SequenceSet: codes not strictly ascending");
    }
    s.codes_ = std::move(codes);
    s.build_dense();
    return s;
}

void SequenceSet::build_dense() {
    if (member_length_ > kDenseMaxLength) return;
    dense_.assign(dense_word_count(member_length_), 0);
    for (std::uint64_t c : codes_) dense_[c >> 6] |= std::uint64_t{1} << (c & 63);
}

bool SequenceSet::contains_code(std::uint64_t code) const {
    if (member_length_ < 64 && (code >> member_length_) != 0) return false;
    if (has_dense()) return (dense_[code >> 6] >> (code & 63)) & 1u;
    return std::binary_search(codes_.begin(), codes_.end(), code);
}

std::string SequenceSet::to_text() const {
    std::string out;
    out.reserve(codes_.size() * (static_cast<std::size_t>(member_length_) + 1));
    for (std::size_t i = 0; i < codes_.size(); ++i) {
        out += word(i).str();
        out += '\n';
    }
    return out;
}

SequenceSet prefix_filter(const SequenceSet& s, const BitWord& v) {
    if (v.length() > s.member_length())
        throw std::domain_error("prefix_filter: prefix longer than the members");
    const int rest = s.member_length() - v.length();
    // codes with prefix v form the contiguous range [v<<rest, (v+1)<<rest)
    const std::uint64_t lo = v.code() << rest;
    const std::uint64_t hi = lo + (std::uint64_t{1} << rest);
    auto first = std::lower_bound(s.codes().begin(), s.codes().end(), lo);
    auto last = std::lower_bound(first, s.codes().end(), hi);
    return SequenceSet::from_sorted(s.member_length(),
                                    std::vector<std::uint64_t>(first, last));
}

SequenceSet prepend(const BitWord& v, const SequenceSet& s) {
    if (v.length() + s.member_length() > BitWord::kMaxLength)
        throw std::domain_error("prepend: combined length exceeds 63");
    std::vector<std::uint64_t> out;
    out.reserve(s.size());
    for (std::uint64_t c : s.codes()) out.push_back((v.code() << s.member_length()) | c);
    return SequenceSet::from_sorted(v.length() + s.member_length(), std::move(out));
}

SequenceSet intersect_all(std::span<const SequenceSet> sets) {
    if (sets.empty()) throw std::domain_error("intersect_all: empty list of sets");
    const int len = sets[0].member_length();
    for (const auto& s : sets)
        if (s.member_length() != len)
            throw std::domain_error("intersect_all: mixed member lengths");

    if (sets[0].has_dense()) {
        std::vector<std::uint64_t> acc = sets[0].dense();
        for (std::size_t i = 1; i < sets.size(); ++i) {
            assert(sets[i].has_dense());
            const auto& d = sets[i].dense();
            for (std::size_t w = 0; w < acc.size(); ++w) acc[w] &= d[w];
        }
        std::vector<std::uint64_t> codes;
        for (std::size_t w = 0; w < acc.size(); ++w) {
            std::uint64_t bits = acc[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                codes.push_back((static_cast<std::uint64_t>(w) << 6) | static_cast<unsigned>(b));
                bits &= bits - 1;
            }
        }
        return SequenceSet::from_sorted(len, std::move(codes));
    }

    std::vector<std::uint64_t> acc = sets[0].codes();
    for (std::size_t i = 1; i < sets.size() && !acc.empty(); ++i) {
        std::vector<std::uint64_t> next;
        std::set_intersection(acc.begin(), acc.end(), sets[i].codes().begin(),
                              sets[i].codes().end(), std::back_inserter(next));
        acc = std::move(next);
    }
    return SequenceSet::from_sorted(len, std::move(acc));
}

}  // namespace delball
