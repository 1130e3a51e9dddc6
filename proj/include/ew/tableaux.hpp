#pragma once

#include "ew/numeric.hpp"
#include "ew/partition.hpp"

namespace ew {

/// Number of standard Young tableaux of shape lambda (hook length formula).
Int syt_count(const Partition& lambda);

/// Number of standard fillings of the skew shape lambda/nu, by the
/// Aitken determinant d! * det(1 / (lambda_i - nu_j - i + j)!) with
/// 1/t! := 0 for t < 0. Requires nu contained in lambda.
Int skew_syt_count(const Partition& lambda, const Partition& nu);

}  // namespace ew
