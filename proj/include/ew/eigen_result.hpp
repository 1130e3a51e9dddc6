#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ew/group_spec.hpp"
#include "ew/numeric.hpp"

namespace ew {

/// Eigenweights of the graded operator on V = I/I^2, labeled by the
/// generator basis. For type D with even rank the degree-2n piece is
/// 2-dimensional; its action is reported as a 2x2 block in the ordered
/// basis (p_{n/2}, Pf) instead of scalar entries.
struct EigenResult {
    struct Block {
        std::array<std::string, 2> basis;
        // matrix columns are the images of the basis vectors:
        // op(basis[j]) = sum_i matrix[i][j] * basis[i]
        std::array<std::array<Rat, 2>, 2> matrix;
        // present when the characteristic polynomial splits over Q;
        // sorted descending
        std::optional<std::array<Rat, 2>> eigenvalues;
        // monic characteristic polynomial t^2 + c1 t + c0 as {c0, c1, 1}
        std::array<Rat, 3> char_poly;
    };

    GroupSpec spec;
    std::vector<std::pair<std::string, Rat>> eigenweights;  // label order
    std::optional<Block> block;
};

/// Builds a Block from its matrix, computing the characteristic
/// polynomial and, when the discriminant is a rational square, the
/// eigenvalues.
EigenResult::Block make_block(const std::array<std::string, 2>& basis,
                              const std::array<std::array<Rat, 2>, 2>& matrix);

}  // namespace ew
