#pragma once

#include <map>
#include <string>
#include <vector>

#include "ew/numeric.hpp"

namespace ew {

/// Graded-lexicographic order on exponent vectors of equal length.
struct GrlexLess {
    bool operator()(const std::vector<long>& a, const std::vector<long>& b) const {
        long da = 0, db = 0;
        for (long e : a) da += e;
        for (long e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

/// Exact sparse multivariate polynomial over the rationals. Terms map
/// exponent vectors (dense, length num_vars) to nonzero coefficients;
/// the zero polynomial has an empty term map.
class MultiPoly {
public:
    using TermMap = std::map<std::vector<long>, Rat, GrlexLess>;

    explicit MultiPoly(long num_vars) : nvars_(num_vars) {}

    static MultiPoly zero(long n) { return MultiPoly(n); }
    static MultiPoly constant(long n, const Rat& c);
    static MultiPoly variable(long n, long i);
    static MultiPoly monomial(long n, std::vector<long> exps, const Rat& c);

    long num_vars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Total degree; the zero polynomial has no degree and errors.
    long degree() const;
    bool is_homogeneous() const;

    Rat coeff(const std::vector<long>& exps) const;
    /// Coefficient of the constant monomial.
    Rat constant_term() const;

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const;
    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    MultiPoly scaled(const Rat& c) const;
    MultiPoly pow(long e) const;

    /// Sum_i c_i d/dx_i for a rational direction vector.
    MultiPoly directional_derivative(const std::vector<Rat>& direction) const;

    /// Substitutes x_i -> signs[i] * x_{perm[i]} (a ring homomorphism).
    MultiPoly apply_signed_permutation(const std::vector<long>& perm,
                                       const std::vector<int>& signs) const;

    /// Debug rendering: grlex-sorted "coeff * x1^a1 ... xn^an" terms.
    std::string to_string() const;

    void add_term(const std::vector<long>& exps, const Rat& c);

private:
    long nvars_;
    TermMap terms_;
};

/// Quotient q with q * den = num exactly; throws not_divisible_error on
/// a nonzero remainder under grlex leading-term division.
MultiPoly exact_divide(const MultiPoly& num, const MultiPoly& den);

}  // namespace ew
