#include "ew/tableaux.hpp"

#include <stdexcept>
#include <vector>

namespace ew {

Int syt_count(const Partition& lambda) {
    if (lambda.empty()) return 1;
    // conjugate partition for column heights
    std::vector<long> conj(static_cast<size_t>(lambda.part(0)), 0);
    for (long i = 0; i < lambda.length(); ++i)
        for (long j = 0; j < lambda.part(i); ++j)
            conj[static_cast<size_t>(j)]++;

    Int hooks = 1;
    for (long i = 0; i < lambda.length(); ++i)
        for (long j = 0; j < lambda.part(i); ++j) {
            const long arm = lambda.part(i) - j - 1;
            const long leg = conj[static_cast<size_t>(j)] - i - 1;
            hooks *= (arm + leg + 1);
        }
    Int num = factorial(lambda.size());
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), hooks.get_mpz_t());
    if (r != 0) throw std::logic_error("syt_count: hook product does not divide");
    return q;
}

Int skew_syt_count(const Partition& lambda, const Partition& nu) {
    if (!lambda.contains(nu))
        throw std::invalid_argument("skew_syt_count: nu not contained in lambda");
    const long d = lambda.size() - nu.size();
    const long l = lambda.length();
    if (l == 0) return 1;

    std::vector<std::vector<Rat>> mat(static_cast<size_t>(l),
                                      std::vector<Rat>(static_cast<size_t>(l), 0));
    for (long i = 0; i < l; ++i)
        for (long j = 0; j < l; ++j) {
            const long t = lambda.part(i) - nu.part(j) - i + j;
            if (t >= 0)
                mat[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    make_rat(1, factorial(t));
        }

    // fraction-free enough at these sizes: plain Gaussian elimination
    Rat det = 1;
    for (long col = 0; col < l; ++col) {
        long pivot = -1;
        for (long row = col; row < l; ++row)
            if (mat[static_cast<size_t>(row)][static_cast<size_t>(col)] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(mat[static_cast<size_t>(pivot)], mat[static_cast<size_t>(col)]);
            det = -det;
        }
        const Rat p = mat[static_cast<size_t>(col)][static_cast<size_t>(col)];
        det *= p;
        for (long row = col + 1; row < l; ++row) {
            const Rat f = mat[static_cast<size_t>(row)][static_cast<size_t>(col)] / p;
            if (f == 0) continue;
            for (long c = col; c < l; ++c)
                mat[static_cast<size_t>(row)][static_cast<size_t>(c)] -=
                    f * mat[static_cast<size_t>(col)][static_cast<size_t>(c)];
        }
    }
    Rat result = Rat(factorial(d)) * det;
    if (result.get_den() != 1)
        throw std::logic_error("skew_syt_count: non-integral determinant");
    return result.get_num();
}

}  // namespace ew
