#pragma once

#include <vector>

#include "ew/partition.hpp"

namespace ew {

/// Border strip (rim hook) of a Young diagram. Cells are 0-based
/// (row, column) pairs; height is rows-occupied minus 1.
struct BorderStrip {
    std::vector<std::pair<long, long>> cells;
    long height = 0;
    Partition remainder;
};

/// All border strips of exactly strip_size cells removable from lambda,
/// ordered by top row. Walks the rim row-interval by row-interval; each
/// row interval [top, bottom] admits at most one strip of a given size.
std::vector<BorderStrip> border_strips(const Partition& lambda, long strip_size);

}  // namespace ew
