#include "ew/symfunc.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ew {

namespace {
std::vector<long> all_vars(long n) {
    std::vector<long> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

int permutation_sign(const std::vector<long>& perm) {
    int sign = 1;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}
}  // namespace

MultiPoly power_sum_in(long n, long k, const std::vector<long>& vars) {
    if (k < 0) throw std::invalid_argument("power_sum: k >= 0 required");
    if (k == 0) return MultiPoly::constant(n, Rat(static_cast<long>(vars.size())));
    MultiPoly p(n);
    for (long v : vars) {
        std::vector<long> e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(v)] = k;
        p.add_term(e, 1);
    }
    return p;
}

MultiPoly power_sum(long n, long k) { return power_sum_in(n, k, all_vars(n)); }

MultiPoly elementary(long n, long k) {
    if (k < 0 || k > n) return MultiPoly::zero(n);
    if (k == 0) return MultiPoly::constant(n, 1);
    MultiPoly e(n);
    std::vector<long> idx(static_cast<size_t>(k));
    // iterate over k-subsets of {0..n-1}
    for (long i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        std::vector<long> exps(static_cast<size_t>(n), 0);
        for (long v : idx) exps[static_cast<size_t>(v)] = 1;
        e.add_term(exps, 1);
        long i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (long j = i + 1; j < k; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return e;
}

MultiPoly vandermonde_in(long n, const std::vector<long>& vars) {
    MultiPoly d = MultiPoly::constant(n, 1);
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            d = d * (MultiPoly::variable(n, vars[i]) - MultiPoly::variable(n, vars[j]));
    return d;
}

MultiPoly vandermonde(long n) { return vandermonde_in(n, all_vars(n)); }

MultiPoly alternant_in(const std::vector<long>& gamma, long n,
                       const std::vector<long>& vars) {
    if (gamma.size() != vars.size())
        throw std::invalid_argument("alternant: len(gamma) must equal #vars");
    const size_t r = vars.size();
    std::vector<long> order(r);
    std::iota(order.begin(), order.end(), 0);
    MultiPoly a(n);
    do {
        std::vector<long> exps(static_cast<size_t>(n), 0);
        for (size_t i = 0; i < r; ++i)
            exps[static_cast<size_t>(vars[i])] += gamma[order[i]];
        a.add_term(exps, permutation_sign(order));
    } while (std::next_permutation(order.begin(), order.end()));
    return a;
}

MultiPoly alternant(const std::vector<long>& gamma, long n) {
    return alternant_in(gamma, n, all_vars(n));
}

MultiPoly schur_in(const Partition& lambda, long n, const std::vector<long>& vars) {
    const long r = static_cast<long>(vars.size());
    if (lambda.length() > r) return MultiPoly::zero(n);
    std::vector<long> gamma(static_cast<size_t>(r));
    for (long i = 0; i < r; ++i)
        gamma[static_cast<size_t>(i)] = lambda.part(i) + (r - 1 - i);
    return exact_divide(alternant_in(gamma, n, vars), vandermonde_in(n, vars));
}

MultiPoly schur(const Partition& lambda, long n) {
    return schur_in(lambda, n, all_vars(n));
}

MultiPoly antisymmetrize(const MultiPoly& f) {
    const long n = f.num_vars();
    std::vector<long> perm = all_vars(n);
    const std::vector<int> plus(static_cast<size_t>(n), 1);
    MultiPoly out(n);
    do {
        MultiPoly g = f.apply_signed_permutation(perm, plus);
        if (permutation_sign(perm) > 0) out += g;
        else out -= g;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

bool is_symmetric(const MultiPoly& f) {
    const long n = f.num_vars();
    const std::vector<int> plus(static_cast<size_t>(n), 1);
    for (long i = 0; i + 1 < n; ++i) {
        std::vector<long> perm = all_vars(n);
        std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(i + 1)]);
        if (f.apply_signed_permutation(perm, plus) != f) return false;
    }
    return true;
}

Rat power_sum_linear_part(const MultiPoly& g, long k) {
    const long n = g.num_vars();
    if (k < 1 || k > n)
        throw std::invalid_argument("power_sum_linear_part: require 1 <= k <= num_vars");
    if (g.is_zero()) return 0;
    if (!g.is_homogeneous() || g.degree() != k)
        throw std::invalid_argument("power_sum_linear_part: g not homogeneous of degree k");
    if (!is_symmetric(g))
        throw std::invalid_argument("power_sum_linear_part: g is not symmetric");

    // Expand g in the power-sum basis {p_nu : nu |- k} by matching
    // monomial-symmetric coefficients (sorted exponent vectors), then
    // read off the coefficient of p_(k).
    const std::vector<Partition> basis = partitions_of(k, n);
    const size_t dim = basis.size();

    auto sorted_coeff = [n](const MultiPoly& f, const Partition& lam) {
        std::vector<long> exps(static_cast<size_t>(n), 0);
        for (long i = 0; i < lam.length(); ++i)
            exps[static_cast<size_t>(i)] = lam.part(i);
        return f.coeff(exps);
    };

    // rows: equations indexed by partitions (monomial-symmetric coords);
    // columns: unknown coefficients of p_nu; augmented with g's coords.
    std::vector<std::vector<Rat>> aug(dim, std::vector<Rat>(dim + 1, 0));
    for (size_t col = 0; col < dim; ++col) {
        MultiPoly p = MultiPoly::constant(n, 1);
        for (long part : basis[col].parts()) p = p * power_sum(n, part);
        for (size_t row = 0; row < dim; ++row)
            aug[row][col] = sorted_coeff(p, basis[row]);
    }
    for (size_t row = 0; row < dim; ++row) aug[row][dim] = sorted_coeff(g, basis[row]);

    // Gaussian elimination; the transition matrix is invertible in the
    // stable range k <= n.
    for (size_t col = 0; col < dim; ++col) {
        size_t pivot = col;
        while (pivot < dim && aug[pivot][col] == 0) ++pivot;
        if (pivot == dim)
            throw std::logic_error("power_sum_linear_part: singular transition matrix");
        std::swap(aug[col], aug[pivot]);
        const Rat p = aug[col][col];
        for (size_t c = col; c <= dim; ++c) aug[col][c] /= p;
        for (size_t row = 0; row < dim; ++row) {
            if (row == col || aug[row][col] == 0) continue;
            const Rat f = aug[row][col];
            for (size_t c = col; c <= dim; ++c) aug[row][c] -= f * aug[col][c];
        }
    }
    // basis[0] is (k) in reverse-lexicographic order
    return aug[0][dim];
}

MultiPoly to_squared_vars(const MultiPoly& f) {
    MultiPoly out(f.num_vars());
    std::vector<long> e(static_cast<size_t>(f.num_vars()));
    for (const auto& [exps, c] : f.terms()) {
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] % 2 != 0)
                throw std::logic_error("to_squared_vars: odd exponent");
            e[i] = exps[i] / 2;
        }
        out.add_term(e, c);
    }
    return out;
}

ParitySplit split_by_parity(const MultiPoly& f) {
    ParitySplit out{MultiPoly(f.num_vars()), MultiPoly(f.num_vars())};
    for (const auto& [exps, c] : f.terms()) {
        bool any_even = false, any_odd = false;
        for (long e : exps) (e % 2 == 0 ? any_even : any_odd) = true;
        if (any_even && any_odd)
            throw std::logic_error("split_by_parity: monomial of mixed parity");
        if (any_odd) out.odd.add_term(exps, c);
        else out.even.add_term(exps, c);
    }
    return out;
}

}  // namespace ew
