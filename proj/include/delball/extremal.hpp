#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "delball/bitword.hpp"
#include "delball/combinatorics.hpp"

namespace delball {

// The family 10 a_{n-2}, 01 a_{n-2}, 0101 a_{n-4}, ..., (01)^{l-1} a_{n-2(l-1)}
// whose t-deletion balls intersect in exactly N_l(n,t).
struct ExtremalFamily {
    int n = 0;
    int ell = 0;
    std::vector<BitWord> centers;  // ascending construction order: x_1, x_2, ...
};

// requires ell >= 2 and n >= 2(ell-1) so the longest prefix fits
ExtremalFamily extremal_family(int n, int ell);

// |intersection of the t-deletion balls of the centers|; centers must share
// one length n, with 0 <= t <= n
std::uint64_t intersection_size(const std::vector<BitWord>& centers, int t);

enum class Verdict { match, brute_force_below_formula, brute_force_above_formula };

std::string to_string(Verdict v);

// Search-size refusal threshold.  C(2^n, ell) <= max_tuples reproduces the
// documented defaults: ell=3 allows n <= 10, ell=4 allows n <= 8, ell=5
// allows n <= 7.
struct SearchBudget {
    Count max_tuples = 600'000'000;
    int max_n = 12;
};

class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

struct SearchReport {
    int n = 0;
    int ell = 0;
    int t = 0;
    std::uint64_t max_value = 0;
    std::vector<BitWord> witness;  // ascending by code; lexicographically least maximizer
    std::uint64_t tuples_examined = 0;  // full ell-tuples evaluated
    std::uint64_t tuples_pruned = 0;    // subtrees abandoned (value or symmetry)
    Count formula_value;
    Verdict verdict = Verdict::match;
};

// Exhaustive maximum of |intersection of t-deletion balls| over all ascending
// ell-tuples of distinct length-n words.  Deterministic for any thread count:
// max_value, witness and both counters are independent of scheduling.
SearchReport brute_force_max(int n, int ell, int t, bool use_symmetry,
                             int thread_count, const SearchBudget& budget = {});

struct GridPoint {
    int n = 0;
    int ell = 0;
    int t = 0;
};

// One report per grid point.  Also cross-checks, wherever the construction is
// defined and the theorem applies (n >= 2(ell-1), ell-1 <= t <= n-ell+1), that
// the extremal family attains the formula; a failure there throws.
std::vector<SearchReport> verify_theorem(const std::vector<GridPoint>& grid,
                                         bool use_symmetry, int thread_count,
                                         const SearchBudget& budget = {});

// self-contained text block: parameters, both values, the witness tuple, and
// every common subsequence of the witness, so the claim can be re-checked by
// hand
std::string certificate(const SearchReport& report);

}  // namespace delball
