#pragma once

#include <vector>

#include "jack/base.hpp"

namespace jack {

// rank of a rational matrix by Gaussian elimination
inline int matrix_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return int(r);
}

}  // namespace jack
