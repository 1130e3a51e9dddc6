#include "ew/eigen_result.hpp"

namespace ew {

EigenResult::Block make_block(const std::array<std::string, 2>& basis,
                              const std::array<std::array<Rat, 2>, 2>& matrix) {
    EigenResult::Block block;
    block.basis = basis;
    block.matrix = matrix;
    const Rat trace = matrix[0][0] + matrix[1][1];
    const Rat det = matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0];
    block.char_poly = {det, -trace, Rat(1)};
    if (auto root = rational_sqrt(trace * trace - 4 * det)) {
        const Rat half = make_rat(1, 2);
        block.eigenvalues = {{(trace + *root) * half, (trace - *root) * half}};
    }
    return block;
}

}  // namespace ew
