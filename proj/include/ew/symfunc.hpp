#pragma once

#include <vector>

#include "ew/multipoly.hpp"
#include "ew/partition.hpp"

namespace ew {

/// k-th power sum p_k over the variables listed in vars (default: all n).
MultiPoly power_sum(long n, long k);
MultiPoly power_sum_in(long n, long k, const std::vector<long>& vars);

/// Elementary symmetric polynomial e_k in all n variables.
MultiPoly elementary(long n, long k);

/// Vandermonde determinant prod_{i<j} (x_i - x_j).
MultiPoly vandermonde(long n);
MultiPoly vandermonde_in(long n, const std::vector<long>& vars);

/// Alternant a_gamma = sum_{w in S_n} sgn(w) w(x^gamma); zero when gamma
/// has repeated entries. Requires len(gamma) = n (or = #vars).
MultiPoly alternant(const std::vector<long>& gamma, long n);
MultiPoly alternant_in(const std::vector<long>& gamma, long n,
                       const std::vector<long>& vars);

/// Schur polynomial s_lambda in all n variables via the bialternant
/// a_{lambda+delta_n} / Delta; zero when len(lambda) > n.
MultiPoly schur(const Partition& lambda, long n);

/// Schur polynomial in a subset of the n ambient variables.
MultiPoly schur_in(const Partition& lambda, long n, const std::vector<long>& vars);

/// Sum over all of S_n of sgn(w) * w(f).
MultiPoly antisymmetrize(const MultiPoly& f);

/// True iff f is invariant under every transposition of its variables.
bool is_symmetric(const MultiPoly& f);

/// Coefficient of p_k in the power-sum basis expansion of g, which must
/// be symmetric and homogeneous of degree k <= num_vars (stable range).
Rat power_sum_linear_part(const MultiPoly& g, long k);

/// Rewrite a polynomial with all-even exponents in terms of y_i = x_i^2
/// (exponents halved); errors on any odd exponent.
MultiPoly to_squared_vars(const MultiPoly& f);

/// Split into the terms whose exponents are all even / all odd; errors
/// on a monomial of mixed parity.
struct ParitySplit {
    MultiPoly even;
    MultiPoly odd;
};
ParitySplit split_by_parity(const MultiPoly& f);

}  // namespace ew
