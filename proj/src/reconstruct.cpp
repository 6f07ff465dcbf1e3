#include "delball/reconstruct.hpp"

#include <random>
#include <span>
#include <stdexcept>
#include <string>

#include "delball/balls.hpp"
#include "delball/extremal.hpp"

namespace delball {

namespace {

void validate(const ReadSet& rs) {
    if (rs.reads.is_empty()) throw std::domain_error("ReadSet: no reads");
    if (rs.n > BitWord::kMaxLength || rs.n < 1)
        throw std::domain_error("ReadSet: transmitted length out of range");
    if (rs.t() < 1)
        throw std::domain_error("ReadSet: reads of length " +
                                std::to_string(rs.reads.member_length()) +
                                " need t >= 1 for transmitted length " +
                                std::to_string(rs.n));
}

// uniform in [0, k), by rejection from the largest multiple of k in 2^64
std::uint64_t bounded(std::mt19937_64& gen, std::uint64_t k) {
    const std::uint64_t threshold = (0 - k) % k;  // 2^64 mod k
    std::uint64_t r;
    do {
        r = gen();
    } while (r < threshold);
    return r % k;
}

}  // namespace

ReadSet make_read_set(int n, const std::vector<BitWord>& reads) {
    if (reads.empty()) throw std::domain_error("make_read_set: no reads");
    const int len = reads[0].length();
    std::vector<std::uint64_t> codes;
    codes.reserve(reads.size());
    for (const auto& r : reads) {
        if (r.length() != len)
            throw std::domain_error("make_read_set: reads of mixed lengths");
        codes.push_back(r.code());
    }
    SequenceSet set = SequenceSet::of(len, std::move(codes));
    if (set.size() != reads.size())
        throw std::domain_error("make_read_set: duplicate reads");
    ReadSet rs{n, std::move(set)};
    validate(rs);
    return rs;
}

ReadSet parse_read_file(int n, std::istream& in) {
    std::vector<BitWord> reads;
    std::string line;
    int line_no = 0;
    int expected_len = -1;
    std::vector<std::uint64_t> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        BitWord w;
        try {
            w = BitWord::parse(line);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (expected_len < 0)
            expected_len = w.length();
        else if (w.length() != expected_len)
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": read length " + std::to_string(w.length()) +
                                        " differs from earlier length " +
                                        std::to_string(expected_len));
        for (std::uint64_t c : seen)
            if (c == w.code())
                throw std::invalid_argument("line " + std::to_string(line_no) +
                                            ": duplicate read " + w.str());
        seen.push_back(w.code());
        reads.push_back(w);
    }
    if (reads.empty()) throw std::invalid_argument("read file contains no reads");
    return make_read_set(n, reads);
}

ReadSet sample_reads(const BitWord& x, int t, std::size_t m, std::uint64_t seed) {
    if (t < 1 || t > x.length())
        throw std::domain_error("sample_reads: t must be in 1..|x|");
    if (m < 1) throw std::domain_error("sample_reads: m must be at least 1");
    const SequenceSet ball = deletion_ball(x, t);
    if (m > ball.size())
        throw std::invalid_argument("sample_reads: requested " + std::to_string(m) +
                                    " reads but the ball has only " +
                                    std::to_string(ball.size()) + " elements");
    std::vector<std::uint64_t> pool = ball.codes();
    std::mt19937_64 gen(seed);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j =
            i + static_cast<std::size_t>(bounded(gen, pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(m);
    return ReadSet{x.length(), SequenceSet::of(x.length() - t, std::move(pool))};
}

SequenceSet candidates(const ReadSet& rs) {
    validate(rs);
    const int t = rs.t();
    const SequenceSet base = insertion_ball(rs.reads.word(0), t);
    std::vector<std::uint64_t> keep;
    for (std::uint64_t code : base.codes()) {
        const BitWord x(rs.n, code);
        bool ok = true;
        for (std::size_t i = 1; i < rs.reads.size() && ok; ++i)
            ok = is_subsequence(rs.reads.word(i), x);
        if (ok) keep.push_back(code);
    }
    return SequenceSet::from_sorted(rs.n, std::move(keep));
}

ReconstructionReport check_guarantee(int n, int ell, int t, const ReadSet& rs) {
    if (ell < 3) throw std::domain_error("check_guarantee: ell must be at least 3");
    validate(rs);
    if (rs.n != n || rs.t() != t)
        throw std::domain_error("check_guarantee: read set does not match (n, t)");
    ReconstructionReport rep;
    rep.candidates = candidates(rs);
    rep.read_count = rs.reads.size();
    rep.threshold = intersection_bound_N(n, ell, t) + 1;
    rep.guarantee_met = Count(rep.read_count) >= rep.threshold;
    rep.list_within_bound =
        rep.candidates.size() <= static_cast<std::size_t>(ell - 1);
    return rep;
}

ReadSet worst_case_reads(int n, int ell, int t) {
    const ExtremalFamily fam = extremal_family(n, ell);
    if (t < 1 || t > n) throw std::domain_error("worst_case_reads: t must be in 1..n");
    std::vector<SequenceSet> balls;
    balls.reserve(fam.centers.size());
    for (const auto& c : fam.centers) balls.push_back(deletion_ball(c, t));
    SequenceSet common = intersect_all(std::span<const SequenceSet>(balls));
    ReadSet rs{n, std::move(common)};
    validate(rs);
    return rs;
}

}  // namespace delball
