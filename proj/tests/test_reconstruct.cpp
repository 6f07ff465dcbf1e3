#include <doctest.h>

#include <random>
#include <sstream>

#include "delball/balls.hpp"
#include "delball/reconstruct.hpp"
#include "oracles.hpp"

using namespace delball;

namespace {

std::vector<BitWord> words(std::initializer_list<const char*> texts) {
    std::vector<BitWord> out;
    for (const char* t : texts) out.push_back(BitWord::parse(t));
    return out;
}

}  // namespace

TEST_SUITE("reconstruct") {

TEST_CASE("read set validation") {
    const ReadSet ok = make_read_set(3, words({"10", "01"}));
    CHECK(ok.t() == 1);
    CHECK(ok.reads.size() == 2);
    CHECK_THROWS_AS(make_read_set(3, words({"10", "10"})), std::domain_error);
    CHECK_THROWS_AS(make_read_set(3, words({"10", "011"})), std::domain_error);
    CHECK_THROWS_AS(make_read_set(2, words({"10", "01"})), std::domain_error);
    CHECK_THROWS_AS(make_read_set(3, {}), std::domain_error);
}

TEST_CASE("read file parsing") {
    std::istringstream good("# comment\n10\n\n01\n");
    const ReadSet rs = parse_read_file(3, good);
    CHECK(rs.reads.size() == 2);
    CHECK(rs.t() == 1);

    std::istringstream dup("10\n01\n10\n");
    CHECK_THROWS_WITH_AS(parse_read_file(3, dup), "line 3: duplicate read 10",
                         std::invalid_argument);
    std::istringstream mixed("10\n011\n");
    CHECK_THROWS_WITH_AS(parse_read_file(4, mixed),
                         "line 2: read length 3 differs from earlier length 2",
                         std::invalid_argument);
    std::istringstream bad("1x\n");
    try {
        parse_read_file(3, bad);
        FAIL("expected a parse error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).starts_with("line 1:"));
    }
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(parse_read_file(3, empty), std::invalid_argument);
}

TEST_CASE("sample_reads") {
    // m equals the ball size: sampling is forced to the whole ball
    const ReadSet all = sample_reads(BitWord::parse("1010"), 2, 4, 123);
    CHECK(oracle::to_strings(all.reads) ==
          std::set<std::string>{"00", "01", "10", "11"});

    const ReadSet a = sample_reads(BitWord::parse("0110100101"), 3, 12, 42);
    const ReadSet b = sample_reads(BitWord::parse("0110100101"), 3, 12, 42);
    CHECK(a.reads == b.reads);

    try {
        sample_reads(BitWord::parse("101"), 1, 5, 1);
        FAIL("expected an error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("only 3") != std::string::npos);
    }
    CHECK_THROWS_AS(sample_reads(BitWord::parse("101"), 0, 1, 1), std::domain_error);

    // every sampled read really is in the ball
    std::mt19937_64 rng(91);
    for (int it = 0; it < 50; ++it) {
        const int n = 4 + static_cast<int>(rng() % 8);
        const int t = 1 + static_cast<int>(rng() % (n - 1));
        const BitWord x(n, rng() & low_mask(n));
        const auto ball = deletion_ball(x, t);
        const std::size_t m = 1 + rng() % ball.size();
        const ReadSet rs = sample_reads(x, t, m, rng());
        CHECK(rs.reads.size() == m);
        for (std::size_t i = 0; i < rs.reads.size(); ++i)
            CHECK(ball.contains(rs.reads.word(i)));
    }
}

TEST_CASE("candidates on pinned instances") {
    CHECK(oracle::to_strings(candidates(make_read_set(3, words({"10", "01"})))) ==
          std::set<std::string>{"010", "101"});
    CHECK(candidates(make_read_set(3, words({"00", "11"}))).is_empty());

    // reads = the full ball of x: x itself is always a candidate
    std::mt19937_64 rng(5);
    for (int it = 0; it < 30; ++it) {
        const int n = 3 + static_cast<int>(rng() % 8);
        const int t = 1 + static_cast<int>(rng() % (n - 1));
        const BitWord x(n, rng() & low_mask(n));
        const auto ball = deletion_ball(x, t);
        std::vector<BitWord> reads;
        for (std::size_t i = 0; i < ball.size(); ++i) reads.push_back(ball.word(i));
        CHECK(candidates(make_read_set(n, reads)).contains(x));
    }
}

TEST_CASE("decoder completeness: the transmitted word is always a candidate") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        const int n = 3 + static_cast<int>(rng() % 10);
        const int t = 1 + static_cast<int>(rng() % (n - 1));
        const BitWord x(n, rng() & low_mask(n));
        const std::size_t ball_size = deletion_ball(x, t).size();
        const std::size_t m = 1 + rng() % ball_size;
        const ReadSet rs = sample_reads(x, t, m, rng());
        CHECK(candidates(rs).contains(x));
    }
}

TEST_CASE("decoder equals the full-enumeration filter") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 150; ++it) {
        const int n = 3 + static_cast<int>(rng() % 12);  // up to 14
        const int t = 1 + static_cast<int>(rng() % (n - 1));
        // mostly consistent read sets, sometimes arbitrary ones
        std::vector<BitWord> reads;
        if (rng() % 4 != 0) {
            const BitWord x(n, rng() & low_mask(n));
            const auto ball = deletion_ball(x, t);
            const std::size_t m = 1 + rng() % ball.size();
            const ReadSet rs = sample_reads(x, t, m, rng());
            for (std::size_t i = 0; i < rs.reads.size(); ++i)
                reads.push_back(rs.reads.word(i));
        } else {
            std::set<std::uint64_t> picked;
            const std::size_t cap =
                std::min<std::size_t>(6, std::size_t{1} << (n - t));
            const std::size_t m = 1 + rng() % cap;
            while (picked.size() < m) picked.insert(rng() & low_mask(n - t));
            for (std::uint64_t c : picked) reads.push_back(BitWord(n - t, c));
        }
        const ReadSet rs = make_read_set(n, reads);
        std::vector<std::string> read_strings;
        for (const auto& r : reads) read_strings.push_back(r.str());
        CHECK(oracle::to_strings(candidates(rs)) ==
              oracle::decode_by_filter(n, read_strings));
    }
}

TEST_CASE("check_guarantee on the n=4 tightness instance") {
    const ReadSet rs = make_read_set(4, words({"00", "01", "10", "11"}));
    const ReconstructionReport rep = check_guarantee(4, 3, 2, rs);
    CHECK(rep.read_count == 4);
    CHECK(rep.threshold == 5);  // N_3(4,2) + 1
    CHECK(!rep.guarantee_met);
    CHECK(rep.candidates.contains(BitWord::parse("1010")));
    CHECK(rep.candidates.contains(BitWord::parse("0110")));
    CHECK(rep.candidates.contains(BitWord::parse("0101")));
    CHECK(rep.candidates.size() >= 3);
    CHECK(!rep.list_within_bound);
    CHECK_THROWS_AS(check_guarantee(4, 2, 2, rs), std::domain_error);
    CHECK_THROWS_AS(check_guarantee(5, 3, 2, rs), std::domain_error);
}

TEST_CASE("above the threshold every consistent read set pins the list at n=6") {
    // threshold N_3(6,2)+1 = 7: for every x and every 7-subset of D_2(x),
    // the candidate list has at most 2 entries
    for (std::uint64_t xc = 0; xc < 64; ++xc) {
        const BitWord x(6, xc);
        const auto ball = deletion_ball(x, 2);
        if (ball.size() < 7) continue;
        const std::size_t k = ball.size();
        std::vector<std::size_t> idx{0, 1, 2, 3, 4, 5, 6};
        for (;;) {
            std::vector<BitWord> reads;
            for (std::size_t i : idx) reads.push_back(ball.word(i));
            const ReconstructionReport rep =
                check_guarantee(6, 3, 2, make_read_set(6, reads));
            CHECK(rep.guarantee_met);
            CHECK(rep.candidates.size() <= 2);
            CHECK(rep.list_within_bound);
            // next 7-subset
            int pos = 6;
            while (pos >= 0 && idx[pos] == k - 7 + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int j = pos + 1; j < 7; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
}

TEST_CASE("worst_case_reads") {
    const ReadSet w432 = worst_case_reads(4, 3, 2);
    CHECK(oracle::to_strings(w432.reads) ==
          std::set<std::string>{"00", "01", "10", "11"});
    const SequenceSet c432 = candidates(w432);
    CHECK(c432.contains(BitWord::parse("1010")));
    CHECK(c432.contains(BitWord::parse("0110")));
    CHECK(c432.contains(BitWord::parse("0101")));
    CHECK(c432.size() >= 3);

    const ReadSet w632 = worst_case_reads(6, 3, 2);
    CHECK(w632.reads.size() == 6);
    CHECK(candidates(w632).size() >= 3);

    CHECK_THROWS_AS(worst_case_reads(5, 4, 2), std::domain_error);  // n < 2(ell-1)

    // necessity: N_ell(n,t) reads do not suffice, on a small grid
    for (int ell = 3; ell <= 4; ++ell)
        for (int n = 2 * (ell - 1); n <= 9; ++n)
            for (int t = ell - 1; t <= n - ell + 1; ++t) {
                const ReadSet w = worst_case_reads(n, ell, t);
                CHECK(candidates(w).size() >= static_cast<std::size_t>(ell));
            }
}

}  // TEST_SUITE
