#pragma once

#include <vector>

// Reference 22-element monomial basis for n=4, lambda=(2,1), s=3, as exponent vectors.
inline const std::vector<std::vector<int>> kBasis4_21_3 = {
    {0, 0, 0, 0}, {1, 0, 0, 0}, {2, 0, 0, 0}, {0, 1, 0, 0}, {0, 2, 0, 0}, {0, 0, 1, 0},
    {1, 0, 1, 0}, {2, 0, 1, 0}, {0, 1, 1, 0}, {0, 2, 1, 0}, {0, 0, 2, 0}, {0, 1, 2, 0},
    {0, 0, 0, 1}, {1, 0, 0, 1}, {2, 0, 0, 1}, {0, 1, 0, 1}, {0, 2, 0, 1}, {0, 0, 1, 1},
    {0, 0, 2, 1}, {0, 0, 0, 2}, {0, 1, 0, 2}, {0, 0, 1, 2},
};
