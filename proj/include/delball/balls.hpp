#pragma once

#include "delball/bitword.hpp"
#include "delball/sequence_set.hpp"

namespace delball {

// all distinct length-(|x|-t) subsequences of x
SequenceSet deletion_ball(const BitWord& x, int t);

// all words of length |y|+t that contain y as a subsequence
SequenceSet insertion_ball(const BitWord& y, int t);

// smallest t with D_t(x) and D_t(y) intersecting, for equal-length words;
// equals |x| - LCS(x, y)
int deletion_distance(const BitWord& x, const BitWord& y);

}  // namespace delball
