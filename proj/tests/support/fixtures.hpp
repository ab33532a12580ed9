#pragma once

// Frozen expected values for the matrices exercised throughout the suite.

#include "core.hpp"

#include <utility>
#include <vector>

namespace af = atomfiber;

namespace fixtures {

using af::Mat;
using af::Vec;

inline Mat twisted_cubic() {
    return Mat::from_rows({{3, 2, 1, 0}, {0, 1, 2, 3}});
}

inline Mat table3x3() {
    return Mat::from_rows({{1, -1, 0, -1, 1, 0, 0, 0, 0},
                           {0, 1, -1, 0, -1, 1, 0, 0, 0},
                           {0, 0, 0, 1, -1, 0, -1, 1, 0},
                           {0, 0, 0, 0, 1, -1, 0, -1, 1}});
}

struct AtomicFiberCase {
    Vec rhs;
    std::vector<Vec> elements;
};

// The 18 atomic fibers of the twisted cubic matrix with their complete
// element lists.
inline std::vector<AtomicFiberCase> twisted_cubic_atoms() {
    return {
        {{0, 3}, {{0, 0, 0, 1}}},
        {{1, 2}, {{0, 0, 1, 0}}},
        {{2, 1}, {{0, 1, 0, 0}}},
        {{3, 0}, {{1, 0, 0, 0}}},
        {{2, 4}, {{0, 1, 0, 1}, {0, 0, 2, 0}}},
        {{3, 3}, {{1, 0, 0, 1}, {0, 1, 1, 0}}},
        {{4, 2}, {{0, 2, 0, 0}, {1, 0, 1, 0}}},
        {{3, 6}, {{1, 0, 0, 2}, {0, 1, 1, 1}, {0, 0, 3, 0}}},
        {{4, 5}, {{0, 2, 0, 1}, {0, 1, 2, 0}, {1, 0, 1, 1}}},
        {{5, 4}, {{1, 1, 0, 1}, {0, 2, 1, 0}, {1, 0, 2, 0}}},
        {{6, 3}, {{2, 0, 0, 1}, {1, 1, 1, 0}, {0, 3, 0, 0}}},
        {{4, 8}, {{0, 2, 0, 2}, {1, 0, 1, 2}, {0, 1, 2, 1}, {0, 0, 4, 0}}},
        {{6, 6}, {{2, 0, 0, 2}, {0, 3, 0, 1}, {1, 1, 1, 1}, {1, 0, 3, 0}, {0, 2, 2, 0}}},
        {{8, 4}, {{2, 1, 0, 1}, {0, 4, 0, 0}, {1, 2, 1, 0}, {2, 0, 2, 0}}},
        {{6, 9},
         {{2, 0, 0, 3}, {0, 3, 0, 2}, {1, 1, 1, 2}, {1, 0, 3, 1}, {0, 2, 2, 1}, {0, 1, 4, 0}}},
        {{9, 6},
         {{3, 0, 0, 2}, {1, 3, 0, 1}, {2, 1, 1, 1}, {2, 0, 3, 0}, {1, 2, 2, 0}, {0, 4, 1, 0}}},
        {{6, 12},
         {{2, 0, 0, 4},
          {0, 3, 0, 3},
          {1, 1, 1, 3},
          {1, 0, 3, 2},
          {0, 2, 2, 2},
          {0, 1, 4, 1},
          {0, 0, 6, 0}}},
        {{12, 6},
         {{4, 0, 0, 2},
          {2, 3, 0, 1},
          {3, 1, 1, 1},
          {3, 0, 3, 0},
          {2, 2, 2, 0},
          {0, 6, 0, 0},
          {1, 4, 1, 0}}},
    };
}

// Nonnegative fiber of (8, 7) under the twisted cubic matrix.
inline std::vector<Vec> twisted_cubic_fiber_8_7() {
    return {{2, 1, 0, 2}, {2, 0, 2, 1}, {1, 1, 3, 0}, {1, 2, 1, 1}, {0, 4, 0, 1}, {0, 3, 2, 0}};
}

struct SumIdentity {
    Vec total;
    Vec left;   // element of the (2, 4) fiber
    Vec right;  // element of the (6, 3) fiber
};

// How each element of the (8, 7) fiber splits across the fibers of (2, 4)
// and (6, 3).
inline std::vector<SumIdentity> fiber_8_7_identities() {
    return {
        {{2, 1, 0, 2}, {0, 1, 0, 1}, {2, 0, 0, 1}},
        {{2, 0, 2, 1}, {0, 0, 2, 0}, {2, 0, 0, 1}},
        {{1, 1, 3, 0}, {0, 0, 2, 0}, {1, 1, 1, 0}},
        {{1, 2, 1, 1}, {0, 1, 0, 1}, {1, 1, 1, 0}},
        {{0, 4, 0, 1}, {0, 1, 0, 1}, {0, 3, 0, 0}},
        {{0, 3, 2, 0}, {0, 0, 2, 0}, {0, 3, 0, 0}},
    };
}

}  // namespace fixtures
