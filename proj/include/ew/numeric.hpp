#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace ew {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when a division that must be exact leaves a remainder.
struct not_divisible_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

/// 2^e as an exact rational, e may be negative.
inline Rat pow2(long e) {
    Int p = 1;
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(),
                 static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rat(p) : make_rat(1, p);
}

/// Exact rational square root, if one exists.
inline std::optional<Rat> rational_sqrt(const Rat& q) {
    if (q < 0) return std::nullopt;
    const Int& num = q.get_num();
    const Int& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) ||
        !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return make_rat(rn, rd);
}

/// Canonical "p/q" string, "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace ew
