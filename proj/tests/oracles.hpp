#pragma once

// Independent reference implementations used only by tests.  Everything here
// works on plain strings and brute-force enumeration so that it shares no
// code path with the libraryproper.

#include <set>
#include <string>
#include <vector>

#include "delball/combinatorics.hpp"
#include "delball/sequence_set.hpp"

namespace oracle {

// all distinct length-k subsequences of x, by enumerating position subsets
inline std::set<std::string> subsequences_of(const std::string& x, int k) {
    std::set<std::string> out;
    const int n = static_cast<int>(x.size());
    if (k < 0 || k > n) return out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::string s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s += x[static_cast<std::size_t>(i)];
        out.insert(s);
    }
    return out;
}

inline bool contains_subsequence(const std::string& x, const std::string& y) {
    std::size_t j = 0;
    for (char c : x)
        if (j < y.size() && c == y[j]) ++j;
    return j == y.size();
}

// all length-(|y|+t) strings containing y, by full enumeration
inline std::set<std::string> supersequences_of(const std::string& y, int t) {
    std::set<std::string> out;
    const int n = static_cast<int>(y.size()) + t;
    for (unsigned code = 0; code < (1u << n); ++code) {
        std::string s;
        for (int i = n - 1; i >= 0; --i) s += ((code >> i) & 1u) ? '1' : '0';
        if (contains_subsequence(s, y)) out.insert(s);
    }
    return out;
}

// binomial coefficients from an additive Pascal triangle
inline delball::Count pascal_binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::vector<delball::Count> row{1};
    for (int r = 1; r <= n; ++r) {
        std::vector<delball::Count> next(static_cast<std::size_t>(r) + 1, 1);
        for (int i = 1; i < r; ++i) next[i] = row[i - 1] + row[i];
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

// smallest t whose deletion balls intersect, straight from the definition
inline int distance_by_definition(const std::string& x, const std::string& y) {
    const int n = static_cast<int>(x.size());
    for (int t = 0; t <= n; ++t) {
        const auto bx = subsequences_of(x, n - t);
        const auto by = subsequences_of(y, n - t);
        for (const auto& s : bx)
            if (by.count(s)) return t;
    }
    return n;
}

// every length-n string containing all reads
inline std::set<std::string> decode_by_filter(int n, const std::vector<std::string>& reads) {
    std::set<std::string> out;
    for (unsigned code = 0; code < (1u << n); ++code) {
        std::string s;
        for (int i = n - 1; i >= 0; --i) s += ((code >> i) & 1u) ? '1' : '0';
        bool ok = true;
        for (const auto& r : reads)
            if (!contains_subsequence(s, r)) {
                ok = false;
                break;
            }
        if (ok) out.insert(s);
    }
    return out;
}

inline std::set<std::string> to_strings(const delball::SequenceSet& s) {
    std::set<std::string> out;
    for (std::size_t i = 0; i < s.size(); ++i) out.insert(s.word(i).str());
    return out;
}

}  // namespace oracle
