#include <atomic>
#include <bit>
#include <cassert>
#include <thread>

#include "delball/balls.hpp"
#include "delball/extremal.hpp"

namespace delball {

namespace {

// Per-first-element search state.  Tasks never share mutable state, so every
// field of the final report (including the counters) is identical for any
// thread count; ties are resolved by combining task results in ascending
// first-element order, which is exactly ascending-tuple lexicographic order.
struct TaskResult {
    std::int64_t best = -1;
    std::vector<std::uint32_t> witness;
    std::uint64_t examined = 0;
    std::uint64_t pruned = 0;
};

struct SearchContext {
    int n, ell, t;
    std::uint32_t universe;
    std::size_t words;                  // 64-bit words per ball bitset
    std::vector<std::uint64_t> balls;   // universe * words, ball of every code
    std::vector<std::uint32_t> comp, rev, comprev;
    bool use_symmetry;
    std::int64_t initial_bound;         // an attained intersection size, or 0

    const std::uint64_t* ball(std::uint32_t c) const { return balls.data() + c * words; }
};

std::int64_t popcount_words(const std::uint64_t* w, std::size_t n) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) s += std::popcount(w[i]);
    return s;
}

void search_task(const SearchContext& cx, std::uint32_t c1, TaskResult& res) {
    const int ell = cx.ell;
    const std::size_t W = cx.words;
    // running intersection per depth, and per-depth minima of the symmetry
    // images of the chosen codes (complement, reverse, complement-reverse)
    std::vector<std::uint64_t> inter(static_cast<std::size_t>(ell) * W);
    std::vector<std::uint32_t> mins(static_cast<std::size_t>(ell) * 3);
    std::vector<std::uint32_t> chosen(static_cast<std::size_t>(ell));

    // A tuple can only be minimal in its symmetry orbit if no image of any
    // chosen element drops below the first element: the image tuple would
    // start below c1 and compare lexicographically smaller.  This check is
    // prefix-monotone, so it prunes whole subtrees.
    if (cx.use_symmetry &&
        (cx.comp[c1] < c1 || cx.rev[c1] < c1 || cx.comprev[c1] < c1)) {
        res.pruned += 1;
        return;
    }

    chosen[0] = c1;
    mins[0] = cx.comp[c1];
    mins[1] = cx.rev[c1];
    mins[2] = cx.comprev[c1];
    std::copy(cx.ball(c1), cx.ball(c1) + W, inter.begin());

    auto extend = [&](auto&& self, int count) -> void {
        const std::uint64_t* cur = inter.data() + static_cast<std::size_t>(count - 1) * W;
        const std::uint32_t* curmins = mins.data() + static_cast<std::size_t>(count - 1) * 3;
        const std::uint32_t hi = cx.universe - static_cast<std::uint32_t>(ell - count - 1);
        for (std::uint32_t c = chosen[count - 1] + 1; c < hi; ++c) {
            if (cx.use_symmetry) {
                if (std::min(curmins[0], cx.comp[c]) < c1 ||
                    std::min(curmins[1], cx.rev[c]) < c1 ||
                    std::min(curmins[2], cx.comprev[c]) < c1) {
                    res.pruned += 1;
                    continue;
                }
            }
            std::uint64_t* next = inter.data() + static_cast<std::size_t>(count) * W;
            const std::uint64_t* b = cx.ball(c);
            for (std::size_t w = 0; w < W; ++w) next[w] = cur[w] & b[w];
            const std::int64_t pc = popcount_words(next, W);
            assert(pc <= popcount_words(cur, W));  // intersection is antitone
            chosen[count] = c;
            if (count + 1 == ell) {
                res.examined += 1;
                if (pc > res.best) {
                    res.best = pc;
                    res.witness.assign(chosen.begin(), chosen.end());
                }
            } else {
                // <= best is exact for (max, least witness): an equal-value
                // completion would be lexicographically later than the
                // witness already recorded; < initial_bound cannot reach the
                // maximum at all since that bound is attained somewhere
                if (pc <= res.best || pc < cx.initial_bound) {
                    res.pruned += 1;
                    continue;
                }
                std::uint32_t* nextmins = mins.data() + static_cast<std::size_t>(count) * 3;
                nextmins[0] = std::min(curmins[0], cx.comp[c]);
                nextmins[1] = std::min(curmins[1], cx.rev[c]);
                nextmins[2] = std::min(curmins[2], cx.comprev[c]);
                self(self, count + 1);
            }
        }
    };
    extend(extend, 1);
}

}  // namespace

SearchReport brute_force_max(int n, int ell, int t, bool use_symmetry,
                             int thread_count, const SearchBudget& budget) {
    if (ell < 2) throw std::domain_error("brute_force_max: ell must be at least 2");
    if (t < 1) throw std::domain_error("brute_force_max: t must be at least 1");
    if (n < t + 1) throw std::domain_error("brute_force_max: requires n >= t+1");
    if (thread_count < 1) throw std::domain_error("brute_force_max: thread count must be positive");
    if (n > budget.max_n)
        throw BudgetError("brute_force_max: n=" + std::to_string(n) + " exceeds max_n=" +
                          std::to_string(budget.max_n));
    const std::uint64_t universe = std::uint64_t{1} << n;
    if (Count(ell) > Count(universe))
        throw std::domain_error("brute_force_max: fewer than ell distinct words of length n");
    const Count raw_tuples = binom(static_cast<long long>(universe), ell);
    if (raw_tuples > budget.max_tuples)
        throw BudgetError("brute_force_max: C(2^" + std::to_string(n) + "," +
                          std::to_string(ell) + ") = " + raw_tuples.str() +
                          " exceeds max_tuples = " + budget.max_tuples.str());

    SearchContext cx;
    cx.n = n;
    cx.ell = ell;
    cx.t = t;
    cx.universe = static_cast<std::uint32_t>(universe);
    const int ball_len = n - t;
    cx.words = ball_len <= 6 ? 1 : (std::size_t{1} << (ball_len - 6));
    cx.balls.assign(universe * cx.words, 0);
    for (std::uint64_t c = 0; c < universe; ++c) {
        const auto ball = deletion_ball(BitWord(n, c), t);
        std::uint64_t* row = cx.balls.data() + c * cx.words;
        for (std::uint64_t y : ball.codes()) row[y >> 6] |= std::uint64_t{1} << (y & 63);
    }
    cx.comp.resize(universe);
    cx.rev.resize(universe);
    cx.comprev.resize(universe);
    for (std::uint64_t c = 0; c < universe; ++c) {
        const BitWord w(n, c);
        cx.comp[c] = static_cast<std::uint32_t>(complement(w).code());
        cx.rev[c] = static_cast<std::uint32_t>(reverse(w).code());
        cx.comprev[c] = static_cast<std::uint32_t>(complement(reverse(w)).code());
    }
    cx.use_symmetry = use_symmetry;
    cx.initial_bound = 0;
    if (n >= 2 * (ell - 1)) {
        const auto fam = extremal_family(n, ell);
        cx.initial_bound =
            static_cast<std::int64_t>(intersection_size(fam.centers, t));
    }

    const std::uint32_t task_count = cx.universe - static_cast<std::uint32_t>(ell) + 1;
    std::vector<TaskResult> results(task_count);
    std::atomic<std::uint32_t> next_task{0};
    auto worker = [&] {
        for (;;) {
            const std::uint32_t c1 = next_task.fetch_add(1, std::memory_order_relaxed);
            if (c1 >= task_count) return;
            search_task(cx, c1, results[c1]);
        }
    };
    const unsigned threads =
        std::min<unsigned>(static_cast<unsigned>(thread_count), task_count);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SearchReport report;
    report.n = n;
    report.ell = ell;
    report.t = t;
    std::int64_t best = -1;
    std::vector<std::uint32_t> witness;
    for (const auto& r : results) {
        report.tuples_examined += r.examined;
        report.tuples_pruned += r.pruned;
        if (r.best > best) {
            best = r.best;
            witness = r.witness;
        }
    }
    assert(best >= cx.initial_bound);
    report.max_value = static_cast<std::uint64_t>(best < 0 ? 0 : best);
    for (std::uint32_t c : witness) report.witness.emplace_back(n, c);
    report.formula_value = intersection_bound_N(n, ell, t);

    // independent recheck of the witness through the set machinery
    if (intersection_size(report.witness, t) != report.max_value)
        throw std::logic_error("brute_force_max: witness fails its recheck");

    if (Count(report.max_value) == report.formula_value)
        report.verdict = Verdict::match;
    else if (Count(report.max_value) < report.formula_value)
        report.verdict = Verdict::brute_force_below_formula;
    else
        report.verdict = Verdict::brute_force_above_formula;
    return report;
}

}  // namespace delball
