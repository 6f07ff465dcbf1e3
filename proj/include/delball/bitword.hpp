#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace delball {

// A binary word of length 0..63, packed into one machine word.
//
// Bit-order convention (the single source of truth for every module and all
// textual I/O): the payload is the value of the written bit string read as a
// binary numeral, so the leftmost character is the most significant bit.
// Character i of a length-n word (0-indexed from the left) sits at payload
// bit n-1-i.  This gives three properties the rest of the code relies on:
//
//   * ascending integer codes == lexicographic order of equal-length strings
//   * the length-m prefix of x is  x.code() >> (n - m)
//   * the suffix after the first k characters is  x.code() & ((1<<(n-k))-1)
class BitWord {
public:
    static constexpr int kMaxLength = 63;

    constexpr BitWord() = default;

    BitWord(int length, std::uint64_t code) : length_(length), code_(code) {
        if (length < 0 || length > kMaxLength)
            throw std::domain_error("BitWord: length must be in 0..63, got " +
                                    std::to_string(length));
        if (length < 64 && (code >> length) != 0)
            throw std::domain_error("BitWord: payload has bits above the stated length");
    }

    static BitWord parse(std::string_view text) {
        if (text.size() > static_cast<std::size_t>(kMaxLength))
            throw std::invalid_argument("BitWord: string longer than 63 characters");
        std::uint64_t code = 0;
        for (char c : text) {
            if (c != '0' && c != '1')
                throw std::invalid_argument(std::string("BitWord: bad character '") + c +
                                            "' (expected 0 or 1)");
            code = (code << 1) | static_cast<std::uint64_t>(c - '0');
        }
        return BitWord(static_cast<int>(text.size()), code);
    }

    // a_n = 1010... of length n
    static BitWord alternating(int n) {
        if (n < 0 || n > kMaxLength)
            throw std::domain_error("alternating: length must be in 0..63, got " +
                                    std::to_string(n));
        if (n == 0) return {};
        constexpr std::uint64_t pattern = 0xAAAAAAAAAAAAAAAAull;  // 1010... from the MSB
        return BitWord(n, pattern >> (64 - n));
    }

    int length() const { return length_; }
    std::uint64_t code() const { return code_; }
    bool empty() const { return length_ == 0; }

    // character i, counted from the left (0-indexed)
    bool bit(int i) const { return (code_ >> (length_ - 1 - i)) & 1u; }

    std::string str() const {
        std::string s(static_cast<std::size_t>(length_), '0');
        for (int i = 0; i < length_; ++i)
            if (bit(i)) s[static_cast<std::size_t>(i)] = '1';
        return s;
    }

    friend bool operator==(const BitWord&, const BitWord&) = default;

private:
    int length_ = 0;
    std::uint64_t code_ = 0;
};

inline std::uint64_t low_mask(int bits) {
    return bits == 0 ? 0 : ~std::uint64_t{0} >> (64 - bits);
}

inline BitWord complement(const BitWord& x) {
    return BitWord(x.length(), ~x.code() & low_mask(x.length()));
}

inline BitWord reverse(const BitWord& x) {
    std::uint64_t v = x.code();
    v = ((v >> 1) & 0x5555555555555555ull) | ((v & 0x5555555555555555ull) << 1);
    v = ((v >> 2) & 0x3333333333333333ull) | ((v & 0x3333333333333333ull) << 2);
    v = ((v >> 4) & 0x0F0F0F0F0F0F0F0Full) | ((v & 0x0F0F0F0F0F0F0F0Full) << 4);
    v = ((v >> 8) & 0x00FF00FF00FF00FFull) | ((v & 0x00FF00FF00FF00FFull) << 8);
    v = ((v >> 16) & 0x0000FFFF0000FFFFull) | ((v & 0x0000FFFF0000FFFFull) << 16);
    v = (v >> 32) | (v << 32);
    return BitWord(x.length(), x.length() == 0 ? 0 : v >> (64 - x.length()));
}

inline BitWord concat(const BitWord& v, const BitWord& x) {
    if (v.length() + x.length() > BitWord::kMaxLength)
        throw std::domain_error("concat: combined length exceeds 63");
    return BitWord(v.length() + x.length(), (v.code() << x.length()) | x.code());
}

// first m characters of x
inline BitWord prefix(const BitWord& x, int m) {
    if (m < 0 || m > x.length()) throw std::domain_error("prefix: length out of range");
    return BitWord(m, x.code() >> (x.length() - m));
}

// characters after the first k, i.e. x[k..n-1]
inline BitWord suffix_from(const BitWord& x, int k) {
    if (k < 0 || k > x.length()) throw std::domain_error("suffix_from: position out of range");
    return BitWord(x.length() - k, x.code() & low_mask(x.length() - k));
}

// true iff y can be obtained from x by deleting |x|-|y| symbols; greedy
// left-to-right matching is exact for the subsequence relation
inline bool is_subsequence(const BitWord& y, const BitWord& x) {
    if (y.length() > x.length()) return false;
    int j = 0;
    for (int i = 0; i < x.length() && j < y.length(); ++i)
        if (x.bit(i) == y.bit(j)) ++j;
    return j == y.length();
}

// smallest k such that v is a subsequence of the first k characters of x;
// nullopt when v is not a subsequence of x at all
inline std::optional<int> earliest_embedding_end(const BitWord& v, const BitWord& x) {
    if (v.empty()) return 0;
    int j = 0;
    for (int i = 0; i < x.length(); ++i) {
        if (x.bit(i) == v.bit(j)) {
            ++j;
            if (j == v.length()) return i + 1;
        }
    }
    return std::nullopt;
}

}  // namespace delball
