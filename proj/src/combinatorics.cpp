#include "delball/combinatorics.hpp"

#include <stdexcept>

namespace delball {

Count binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Count result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: result is C(n-k+i, i) after each step
    }
    return result;
}

Count ball_size_D(long long n, long long t) {
    if (t < 0 || n < t) return 0;
    const long long m = n - t;
    if (t >= m) return Count(1) << m;  // full binomial sum
    if (2 * t <= m) {
        Count term = 1, acc = 1;
        for (long long i = 1; i <= t; ++i) {
            term *= m - i + 1;
            term /= i;
            acc += term;
        }
        return acc;
    }
    // shorter from the top: 2^m minus the tail i = t+1 .. m
    Count term = 1, tail = 0;  // term walks C(m,m), C(m,m-1), ...
    for (long long i = m; i > t; --i) {
        tail += term;
        term *= i;
        term /= m - i + 1;
    }
    return (Count(1) << m) - tail;
}

Count intersection_bound_N(long long n, long long ell, long long t) {
    if (ell < 2)
        throw std::domain_error("intersection_bound_N: ell must be at least 2");
    Count acc = 0;
    for (long long i = 1; i <= ell - 2; ++i) acc += ball_size_D(n - 2 * i, t - i);
    acc += 2 * ball_size_D(n - 2 * (ell - 1), t - (ell - 1));
    return acc;
}

Count ball_size_D_recursive(long long n, long long t, CountMemo& memo) {
    if (t < 0 || n < t) return 0;
    if (t == 0 || t == n) return 1;
    const auto key = std::make_pair(n, t);
    if (auto it = memo.d.find(key); it != memo.d.end()) return it->second;
    Count value = ball_size_D_recursive(n - 1, t, memo) +
                  ball_size_D_recursive(n - 2, t - 1, memo);
    return memo.d.emplace(key, std::move(value)).first->second;
}

Count intersection_bound_N_recursive(long long n, long long ell, long long t,
                                     CountMemo& memo) {
    if (ell < 2)
        throw std::domain_error("intersection_bound_N_recursive: ell must be at least 2");
    if (ell == 2) return 2 * ball_size_D_recursive(n - 2, t - 1, memo);
    const auto key = std::make_tuple(n, ell, t);
    if (auto it = memo.n.find(key); it != memo.n.end()) return it->second;
    Count value = ball_size_D_recursive(n - 2, t - 1, memo) +
                  intersection_bound_N_recursive(n - 2, ell - 1, t - 1, memo);
    return memo.n.emplace(key, std::move(value)).first->second;
}

}  // namespace delball
