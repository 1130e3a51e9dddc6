#pragma once

#include <map>
#include <string>

#include "ew/eigen_result.hpp"
#include "ew/group_spec.hpp"
#include "ew/multipoly.hpp"

namespace ew {

/// Component vector of an element of V = I/I^2 on the generator basis;
/// absent labels are zero.
struct ReducedVector {
    std::map<std::string, Rat> coefficients;

    Rat get(const std::string& label) const {
        auto it = coefficients.find(label);
        return it == coefficients.end() ? Rat(0) : it->second;
    }
};

/// The equivariant top Chern class r_mu of the tangent bundle of
/// G/P_mu: the product of the negative-pairing roots.
MultiPoly equivariant_euler(const GroupSpec& spec);

/// The Gysin pushforward of a W_mu-invariant homogeneous f, evaluated
/// by the per-family exact-division localization scheme. The result is
/// W-invariant of degree deg(f) - D_mu (zero when deg(f) < D_mu).
MultiPoly gysin_integrate(const GroupSpec& spec, const MultiPoly& f);

/// The polynomial generator of V attached to a label: p_k(X) for type
/// A, p_k(X^2) for B/C/D, and the Pfaffian x_1...x_n for type D.
MultiPoly generator_poly(const GroupSpec& spec, const std::string& label);

/// Definition-level evaluation of the graded operator on one generator:
/// builds eta = (d_mu Omega)^N, integrates eta * d_mu(generator), and
/// reduces the result modulo I^2.
ReducedVector nabla_bar(const GroupSpec& spec, const std::string& label);

/// Applies nabla_bar to every generator and assembles the eigenweights;
/// for type D with even rank the degree-collision pair (p_{n/2}, Pf) is
/// returned as a 2x2 block.
EigenResult oracle_eigen(const GroupSpec& spec);

}  // namespace ew
