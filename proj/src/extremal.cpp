#include "delball/extremal.hpp"

#include <span>

#include "delball/balls.hpp"
#include "delball/sequence_set.hpp"

namespace delball {

ExtremalFamily extremal_family(int n, int ell) {
    if (ell < 2) throw std::domain_error("extremal_family: ell must be at least 2");
    if (n > BitWord::kMaxLength)
        throw std::domain_error("extremal_family: n exceeds 63");
    if (n < 2 * (ell - 1))
        throw std::domain_error("extremal_family: requires n >= 2(ell-1), got n=" +
                                std::to_string(n) + ", ell=" + std::to_string(ell));
    ExtremalFamily fam;
    fam.n = n;
    fam.ell = ell;
    fam.centers.push_back(concat(BitWord::parse("10"), BitWord::alternating(n - 2)));
    for (int j = 2; j <= ell; ++j) {
        BitWord head;
        for (int r = 0; r < j - 1; ++r) head = concat(head, BitWord::parse("01"));
        fam.centers.push_back(concat(head, BitWord::alternating(n - 2 * (j - 1))));
    }
    return fam;
}

std::uint64_t intersection_size(const std::vector<BitWord>& centers, int t) {
    if (centers.empty()) throw std::domain_error("intersection_size: no centers");
    const int n = centers[0].length();
    for (const auto& c : centers)
        if (c.length() != n)
            throw std::domain_error("intersection_size: centers of mixed lengths");
    if (t < 0 || t > n)
        throw std::domain_error("intersection_size: radius must be in 0..n");
    std::vector<SequenceSet> balls;
    balls.reserve(centers.size());
    for (const auto& c : centers) balls.push_back(deletion_ball(c, t));
    return intersect_all(std::span<const SequenceSet>(balls)).size();
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::match: return "match";
        case Verdict::brute_force_below_formula: return "brute_force_below_formula";
        case Verdict::brute_force_above_formula: return "brute_force_above_formula";
    }
    return "?";
}

std::string certificate(const SearchReport& report) {
    std::string out;
    out += "intersection certificate\n";
    out += "n=" + std::to_string(report.n) + " l=" + std::to_string(report.ell) +
           " t=" + std::to_string(report.t) + "\n";
    out += "formula N_l(n,t) = " + report.formula_value.str() + "\n";
    out += "achieved maximum = " + std::to_string(report.max_value) + "\n";
    out += "verdict: " + to_string(report.verdict) + "\n";
    out += "tuples examined = " + std::to_string(report.tuples_examined) +
           ", subtrees pruned = " + std::to_string(report.tuples_pruned) + "\n";
    out += "centers:\n";
    std::vector<SequenceSet> balls;
    for (const auto& c : report.witness) {
        out += "  " + c.str() + "\n";
        balls.push_back(deletion_ball(c, report.t));
    }
    const SequenceSet common = intersect_all(std::span<const SequenceSet>(balls));
    out += "common subsequences (" + std::to_string(common.size()) + "):\n";
    for (std::size_t i = 0; i < common.size(); ++i)
        out += "  " + common.word(i).str() + "\n";
    return out;
}

std::vector<SearchReport> verify_theorem(const std::vector<GridPoint>& grid,
                                         bool use_symmetry, int thread_count,
                                         const SearchBudget& budget) {
    std::vector<SearchReport> reports;
    reports.reserve(grid.size());
    for (const auto& p : grid) {
        reports.push_back(brute_force_max(p.n, p.ell, p.t, use_symmetry, thread_count, budget));
        if (p.n >= 2 * (p.ell - 1) && p.t >= p.ell - 1 && p.t <= p.n - p.ell + 1) {
            const auto fam = extremal_family(p.n, p.ell);
            const std::uint64_t attained = intersection_size(fam.centers, p.t);
            if (Count(attained) != reports.back().formula_value)
                throw std::logic_error(
                    "verify_theorem: extremal family misses the formula at n=" +
                    std::to_string(p.n) + " ell=" + std::to_string(p.ell) +
                    " t=" + std::to_string(p.t));
        }
    }
    return reports;
}

}  // namespace delball
