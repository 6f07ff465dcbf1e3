#pragma once

#include <cstdint>
#include <istream>
#include <vector>

#include "delball/bitword.hpp"
#include "delball/combinatorics.hpp"
#include "delball/sequence_set.hpp"

namespace delball {

// Distinct channel outputs for one transmitted length n and one radius
// t = n - read length >= 1.  Reads of mixed lengths or duplicate reads are
// rejected at construction; the theorem counts distinct outputs, so silently
// deduplicating would misstate the read count.
struct ReadSet {
    int n = 0;
    SequenceSet reads;

    int t() const { return n - reads.member_length(); }
};

ReadSet make_read_set(int n, const std::vector<BitWord>& reads);

// Read file format: one word per line over {0,1}, lines starting '#' and
// blank lines ignored, all reads the same length.  Errors carry the 1-based
// line number.
ReadSet parse_read_file(int n, std::istream& in);

// m distinct elements of deletion_ball(x, t), uniform without replacement,
// reproducible bit-for-bit from the seed
ReadSet sample_reads(const BitWord& x, int t, std::size_t m, std::uint64_t seed);

// every length-n word containing all reads, i.e. the intersection of the
// reads' insertion balls; empty output signals inconsistent reads
SequenceSet candidates(const ReadSet& reads);

struct ReconstructionReport {
    SequenceSet candidates;
    std::size_t read_count = 0;
    Count threshold;          // N_ell(n,t) + 1
    bool guarantee_met = false;       // read_count >= threshold
    bool list_within_bound = false;   // |candidates| <= ell-1
};

// requires ell >= 3 and reads matching (n, t); reports, never asserts
ReconstructionReport check_guarantee(int n, int ell, int t, const ReadSet& reads);

// all common t-deletion subsequences of the extremal family: the read set
// showing that N_ell(n,t) reads cannot pin the list down to ell-1 candidates
ReadSet worst_case_reads(int n, int ell, int t);

}  // namespace delball
