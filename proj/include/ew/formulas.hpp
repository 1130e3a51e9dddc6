#pragma once

#include "ew/eigen_result.hpp"

namespace ew {
namespace formulas {

/// Closed-form eigenweights for GL_n with coweight (1^m, 0^{n-m}):
/// eps_k = (-1)^{N-1} Lambda_k sum_j (-1)^j chi^{pi_j(k)+(n-m)^m}(nu_k).
EigenResult typeA(long n, long m);

/// SO_{2n+1}: every eigenweight equals -4.
EigenResult typeB(long n);

/// PSp_{2n}, spin coweight:
/// eps_k = (-1)^{N-1} 2^{-N} sum_j (-1)^j chi^{2 pi_j(k)+rho_n}(nu_k).
EigenResult typeC(long n);

/// PSO_{2n}, spin coweight. Odd rank: diagonal eigenweights plus the
/// Pfaffian weight; even rank n = 2m: the degree-collision pair
/// (p_m, Pf) is reported as a 2x2 block.
EigenResult typeD_spin(long n);

/// PSO_{2n}, standard coweight: eps_k = 4, eps_Pf = 2.
EigenResult typeD_standard(long n);

/// Dispatch on a GroupSpec.
EigenResult compute(const GroupSpec& spec);

}  // namespace formulas
}  // namespace ew
