#include <doctest.h>

#include <random>
#include <span>

#include "delball/balls.hpp"
#include "delball/sequence_set.hpp"

using namespace delball;

namespace {

SequenceSet set_of(int len, std::initializer_list<const char*> words) {
    std::vector<std::uint64_t> codes;
    for (const char* w : words) codes.push_back(BitWord::parse(w).code());
    return SequenceSet::of(len, std::move(codes));
}

}  // namespace

TEST_SUITE("sequence_set") {

TEST_CASE("construction sorts, dedups and validates") {
    const SequenceSet s = SequenceSet::of(2, {3, 1, 3, 0});
    CHECK(s.size() == 3);
    CHECK(s.codes() == std::vector<std::uint64_t>{0, 1, 3});
    CHECK(s.to_text() == "00\n01\n11\n");
    CHECK(s.contains(BitWord::parse("11")));
    CHECK(!s.contains(BitWord::parse("10")));
    CHECK(!s.contains(BitWord::parse("110")));
    CHECK_THROWS_AS(SequenceSet::of(2, {4}), std::domain_error);
    CHECK_THROWS_AS(SequenceSet::from_sorted(2, {1, 1}), std::domain_error);
    CHECK(SequenceSet::empty(5).is_empty());
}

TEST_CASE("dense form agrees with the code list") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 100; ++it) {
        const int len = static_cast<int>(rng() % 11);
        std::vector<std::uint64_t> codes;
        const int count = static_cast<int>(rng() % 20);
        for (int i = 0; i < count; ++i) codes.push_back(rng() & low_mask(len));
        const SequenceSet s = SequenceSet::of(len, codes);
        REQUIRE(s.has_dense());
        std::size_t bits = 0;
        for (std::uint64_t c = 0; c < (1ull << len); ++c) {
            const bool in_dense = (s.dense()[c >> 6] >> (c & 63)) & 1u;
            bits += in_dense;
            CHECK(in_dense == s.contains_code(c));
        }
        CHECK(bits == s.size());
    }
    // lengths above the dense threshold stay sparse
    CHECK(!SequenceSet::of(30, {17}).has_dense());
}

TEST_CASE("prefix_filter") {
    const SequenceSet all2 = set_of(2, {"00", "01", "10", "11"});
    CHECK(prefix_filter(all2, BitWord::parse("1")) == set_of(2, {"10", "11"}));
    CHECK(prefix_filter(all2, BitWord()) == all2);
    CHECK(prefix_filter(all2, BitWord::parse("01")) == set_of(2, {"01"}));
    CHECK(prefix_filter(deletion_ball(BitWord::parse("0110"), 2), BitWord::parse("1")) ==
          set_of(2, {"10", "11"}));
    CHECK_THROWS_AS(prefix_filter(all2, BitWord::parse("011")), std::domain_error);
}

TEST_CASE("prepend") {
    CHECK(prepend(BitWord::parse("1"), set_of(1, {"0", "1"})) == set_of(2, {"10", "11"}));
    const SequenceSet s = set_of(3, {"001", "110"});
    CHECK(prepend(BitWord(), s) == s);
    CHECK(prepend(BitWord::parse("01"), set_of(1, {"1"})) == set_of(3, {"011"}));
    CHECK_THROWS_AS(prepend(BitWord(40, 0), SequenceSet::of(30, {1})), std::domain_error);
}

TEST_CASE("intersect_all") {
    const std::vector<SequenceSet> balls = {deletion_ball(BitWord::parse("1010"), 2),
                                            deletion_ball(BitWord::parse("0110"), 2),
                                            deletion_ball(BitWord::parse("0101"), 2)};
    CHECK(intersect_all(balls) == set_of(2, {"00", "01", "10", "11"}));

    const std::vector<SequenceSet> one = {set_of(3, {"010", "111"})};
    CHECK(intersect_all(one) == one[0]);

    const std::vector<SequenceSet> with_empty = {set_of(2, {"01"}), SequenceSet::empty(2)};
    CHECK(intersect_all(with_empty).is_empty());

    const std::vector<SequenceSet> mixed = {set_of(2, {"01"}), set_of(3, {"010"})};
    CHECK_THROWS_AS(intersect_all(mixed), std::domain_error);
    CHECK_THROWS_AS(intersect_all(std::span<const SequenceSet>{}), std::domain_error);
}

TEST_CASE("sparse intersection agrees with dense") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 50; ++it) {
        const int len = 4 + static_cast<int>(rng() % 5);
        std::vector<SequenceSet> dense_sets;
        std::vector<std::vector<std::uint64_t>> raw;
        for (int k = 0; k < 3; ++k) {
            std::vector<std::uint64_t> codes;
            for (int i = 0; i < 25; ++i) codes.push_back(rng() & low_mask(len));
            raw.push_back(codes);
            dense_sets.push_back(SequenceSet::of(len, codes));
        }
        const SequenceSet via_dense = intersect_all(dense_sets);
        // recompute sparsely
        std::vector<std::uint64_t> expect;
        for (std::uint64_t c : dense_sets[0].codes())
            if (dense_sets[1].contains_code(c) && dense_sets[2].contains_code(c))
                expect.push_back(c);
        CHECK(via_dense.codes() == expect);
    }
}

}  // TEST_SUITE
