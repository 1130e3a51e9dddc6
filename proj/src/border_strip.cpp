#include "ew/border_strip.hpp"

#include <stdexcept>

namespace ew {

// A skew shape lambda/mu is a border strip spanning rows top..bottom iff
//   mu_i = lambda_{i+1} - 1   for top <= i < bottom,
//   lambda_{bottom+1} <= mu_bottom <= lambda_bottom - 1,
// and mu agrees with lambda outside [top, bottom]. For a fixed row span
// the strip size determines mu_bottom, so each span yields at most one
// strip.
std::vector<BorderStrip> border_strips(const Partition& lambda, long strip_size) {
    if (strip_size < 1)
        throw std::invalid_argument("border_strips: strip_size >= 1 required");
    std::vector<BorderStrip> out;
    const long rows = lambda.length();
    for (long top = 0; top < rows; ++top) {
        long upper_cells = 0;  // cells removed from rows top..bottom-1
        for (long bottom = top; bottom < rows; ++bottom) {
            if (bottom > top) {
                // row bottom-1 is forced to mu = lambda_bottom - 1
                upper_cells += lambda.part(bottom - 1) - (lambda.part(bottom) - 1);
            }
            if (upper_cells >= strip_size) break;
            const long bottom_removed = strip_size - upper_cells;
            const long new_bottom = lambda.part(bottom) - bottom_removed;
            if (new_bottom < 0 || new_bottom < lambda.part(bottom + 1)) continue;

            std::vector<long> rem = lambda.parts();
            for (long i = top; i < bottom; ++i)
                rem[static_cast<size_t>(i)] = lambda.part(i + 1) - 1;
            rem[static_cast<size_t>(bottom)] = new_bottom;

            BorderStrip strip;
            strip.remainder = Partition(std::move(rem));
            strip.height = bottom - top;
            for (long i = top; i <= bottom; ++i) {
                const long from = strip.remainder.part(i);
                for (long c = from; c < lambda.part(i); ++c)
                    strip.cells.emplace_back(i, c);
            }
            out.push_back(std::move(strip));
        }
    }
    return out;
}

}  // namespace ew
