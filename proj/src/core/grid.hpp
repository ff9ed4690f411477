#pragma once

#include <cmath>
#include <cstdlib>
#include <algorithm>

namespace mts {

/// Rectangular search grid of rows x cols cells. Rows grow northward
/// (row 0 is the south edge), columns grow eastward.
struct GridShape {
    int rows = 0;
    int cols = 0;

    bool operator==(const GridShape&) const = default;
    int cell_count() const { return rows * cols; }
    bool valid() const { return rows >= 2 && cols >= 2; }
};

/// One grid cell address.
struct Cell {
    int row = 0;
    int col = 0;

    bool operator==(const Cell&) const = default;
};

inline bool in_grid(Cell c, GridShape s) {
    return c.row >= 0 && c.row < s.rows && c.col >= 0 && c.col < s.cols;
}

inline int cell_index(Cell c, GridShape s) { return c.row * s.cols + c.col; }

inline Cell clamp_to_grid(Cell c, GridShape s) {
    return {std::clamp(c.row, 0, s.rows - 1), std::clamp(c.col, 0, s.cols - 1)};
}

inline int chebyshev(Cell a, Cell b) {
    return std::max(std::abs(a.row - b.row), std::abs(a.col - b.col));
}

} // namespace mts
