#pragma once

#include <cstdint>
#include <tuple>
#include <unordered_map>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace delball {

// Exact arbitrary-precision integer for all counting results.  Values such as
// D(200,66) exceed 128 bits, so the counting layer never uses machine words.
using Count = boost::multiprecision::cpp_int;

// C(n,k); 0 when k < 0, k > n, or n < 0
Count binom(long long n, long long k);

// D(n,t) = sum_{i=0}^{t} C(n-t,i), the maximum deletion-ball size.
//
// Boundary conventions, centralized here and relied on everywhere a formula
// sums D terms with shifted arguments:
//   t < 0  -> 0,  n < t -> 0,  t = n -> 1,  t = 0 -> 1
// (the last two are what the sum itself yields; the first two make shifted
// terms vanish without special-casing.)
Count ball_size_D(long long n, long long t);

// N_l(n,t) = sum_{i=1}^{l-2} D(n-2i,t-i) + 2 D(n-2(l-1),t-(l-1)); for l = 2
// the empty sum leaves 2 D(n-2,t-1).  Requires l >= 2.
Count intersection_bound_N(long long n, long long ell, long long t);

// Optional per-call memo for the recursive forms; never shared implicitly.
// Callers must serialize access themselves if they share one across threads.
struct ArgHash {
    std::size_t operator()(const std::pair<long long, long long>& k) const {
        return std::hash<std::uint64_t>{}(static_cast<std::uint64_t>(k.first) * 0x9E3779B97F4A7C15ull ^
                                          static_cast<std::uint64_t>(k.second));
    }
    std::size_t operator()(const std::tuple<long long, long long, long long>& k) const {
        const auto h = static_cast<std::uint64_t>(std::get<0>(k)) * 0x9E3779B97F4A7C15ull ^
                       static_cast<std::uint64_t>(std::get<1>(k)) * 0xC2B2AE3D27D4EB4Full ^
                       static_cast<std::uint64_t>(std::get<2>(k));
        return std::hash<std::uint64_t>{}(h);
    }
};

struct CountMemo {
    std::unordered_map<std::pair<long long, long long>, Count, ArgHash> d;
    std::unordered_map<std::tuple<long long, long long, long long>, Count, ArgHash> n;
};

// D by the recursion D(n,t) = D(n-1,t) + D(n-2,t-1); equals ball_size_D on
// every input
Count ball_size_D_recursive(long long n, long long t, CountMemo& memo);

// N by the recursion N_l(n,t) = D(n-2,t-1) + N_{l-1}(n-2,t-1) with base
// N_2(n,t) = 2 D(n-2,t-1); equals intersection_bound_N on every input
Count intersection_bound_N_recursive(long long n, long long ell, long long t,
                                     CountMemo& memo);

}  // namespace delball
