#include "ew/gysin.hpp"

#include <numeric>
#include <stdexcept>

#include "ew/symfunc.hpp"

namespace ew {

namespace {

using Family = GroupSpec::Family;

std::vector<long> identity_perm(long n) {
    std::vector<long> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

/// prod_{i<j} (x_i + x_j)
MultiPoly plus_product(long n) {
    MultiPoly r = MultiPoly::constant(n, 1);
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j)
            r = r * (MultiPoly::variable(n, i) + MultiPoly::variable(n, j));
    return r;
}

/// Delta(X^{(2)}) = prod_{i<j} (x_i^2 - x_j^2)
MultiPoly squared_vandermonde(long n) {
    MultiPoly r = MultiPoly::constant(n, 1);
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) {
            MultiPoly xi2 = MultiPoly::variable(n, i).pow(2);
            MultiPoly xj2 = MultiPoly::variable(n, j).pow(2);
            r = r * (xi2 - xj2);
        }
    return r;
}

MultiPoly pfaffian_poly(long n) {
    return MultiPoly::monomial(n, std::vector<long>(static_cast<size_t>(n), 1), 1);
}

void check_levi_invariant(const GroupSpec& spec, const MultiPoly& f) {
    const long n = spec.rank;
    const std::vector<int> plus(static_cast<size_t>(n), 1);
    auto check_swap = [&](long i) {
        std::vector<long> perm = identity_perm(n);
        std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(i + 1)]);
        if (f.apply_signed_permutation(perm, plus) != f)
            throw std::invalid_argument("gysin_integrate: f is not W_mu-invariant");
    };
    switch (spec.family) {
        case Family::A:
            for (long i = 0; i + 1 < spec.m; ++i) check_swap(i);
            for (long i = spec.m; i + 1 < n; ++i) check_swap(i);
            break;
        case Family::B: {
            for (long i = 1; i + 1 < n; ++i) check_swap(i);
            if (n >= 2) {
                std::vector<int> signs = plus;
                signs[static_cast<size_t>(n - 1)] = -1;
                if (f.apply_signed_permutation(identity_perm(n), signs) != f)
                    throw std::invalid_argument("gysin_integrate: f is not W_mu-invariant");
            }
            break;
        }
        case Family::C:
        case Family::D:
            for (long i = 0; i + 1 < n; ++i) check_swap(i);
            break;
    }
}

MultiPoly integrate_type_a(const GroupSpec& spec, const MultiPoly& f) {
    const long n = spec.rank, m = spec.m;
    std::vector<long> avars, bvars;
    for (long i = 0; i < m; ++i) avars.push_back(i);
    for (long i = m; i < n; ++i) bvars.push_back(i);

    MultiPoly num = antisymmetrize(f * vandermonde_in(n, avars) * vandermonde_in(n, bvars));
    MultiPoly q = exact_divide(num, vandermonde(n));
    Rat scale = make_rat(1, factorial(m) * factorial(n - m));
    if (spec.flag_dim() % 2 != 0) scale = -scale;
    return q.scaled(scale);
}

MultiPoly integrate_type_b(const GroupSpec& spec, const MultiPoly& f) {
    const long n = spec.rank;
    const MultiPoly common = elementary(n, n) * squared_vandermonde(n);
    const MultiPoly rmu = equivariant_euler(spec);

    MultiPoly acc(n);
    for (long i = 0; i < n; ++i) {
        for (int eps : {+1, -1}) {
            // coset representative sending x_1 -> eps * x_{i+1}
            std::vector<long> perm(static_cast<size_t>(n));
            perm[0] = i;
            long next = 0;
            for (long j = 1; j < n; ++j) {
                if (next == i) ++next;
                perm[static_cast<size_t>(j)] = next++;
            }
            std::vector<int> signs(static_cast<size_t>(n), 1);
            signs[0] = eps;
            MultiPoly wf = f.apply_signed_permutation(perm, signs);
            MultiPoly wr = rmu.apply_signed_permutation(perm, signs);
            acc += wf * exact_divide(common, wr);
        }
    }
    return exact_divide(acc, common);
}

MultiPoly integrate_type_c(const GroupSpec& spec, const MultiPoly& f) {
    const long n = spec.rank;
    const MultiPoly fd = f * vandermonde(n);
    const std::vector<long> id = identity_perm(n);

    MultiPoly acc(n);
    for (long bits = 0; bits < (1L << n); ++bits) {
        std::vector<int> signs(static_cast<size_t>(n), 1);
        int prod = 1;
        for (long i = 0; i < n; ++i)
            if (bits & (1L << i)) {
                signs[static_cast<size_t>(i)] = -1;
                prod = -prod;
            }
        MultiPoly term = fd.apply_signed_permutation(id, signs);
        if (prod > 0) acc += term;
        else acc -= term;
    }
    MultiPoly q = exact_divide(exact_divide(acc, elementary(n, n)),
                               squared_vandermonde(n));
    Rat scale = make_rat(1, Int(1) << n);
    if (spec.flag_dim() % 2 != 0) scale = -scale;
    return q.scaled(scale);
}

MultiPoly integrate_type_d_spin(const GroupSpec& spec, const MultiPoly& f) {
    const long n = spec.rank;
    const MultiPoly fd = f * vandermonde(n);
    const std::vector<long> id = identity_perm(n);

    MultiPoly acc(n);
    for (long bits = 0; bits < (1L << n); ++bits) {
        if (__builtin_popcountl(static_cast<unsigned long>(bits)) % 2 != 0)
            continue;  // only even sign patterns
        std::vector<int> signs(static_cast<size_t>(n), 1);
        for (long i = 0; i < n; ++i)
            if (bits & (1L << i)) signs[static_cast<size_t>(i)] = -1;
        acc += fd.apply_signed_permutation(id, signs);
    }
    MultiPoly q = exact_divide(acc, squared_vandermonde(n));
    return spec.flag_dim() % 2 == 0 ? q : -q;
}

}  // namespace

MultiPoly equivariant_euler(const GroupSpec& spec) {
    const long n = spec.rank;
    switch (spec.family) {
        case Family::A: {
            MultiPoly r = MultiPoly::constant(n, 1);
            for (long i = 0; i < spec.m; ++i)
                for (long j = spec.m; j < n; ++j)
                    r = r * (MultiPoly::variable(n, i) - MultiPoly::variable(n, j));
            return spec.flag_dim() % 2 == 0 ? r : -r;
        }
        case Family::B: {
            // roots pairing negatively with (1,0,...,0):
            // -x_1 and -x_1 +- x_j for j >= 2
            MultiPoly r = -MultiPoly::variable(n, 0);
            for (long j = 1; j < n; ++j) {
                MultiPoly x1 = MultiPoly::variable(n, 0);
                MultiPoly xj = MultiPoly::variable(n, j);
                r = r * (-x1 + xj) * (-x1 - xj);
            }
            return r;
        }
        case Family::C: {
            MultiPoly r = elementary(n, n).scaled(Rat(Int(1) << n)) * plus_product(n);
            return spec.flag_dim() % 2 == 0 ? r : -r;
        }
        case Family::D: {
            if (spec.coweight != GroupSpec::Coweight::Spin)
                throw std::invalid_argument(
                    "equivariant_euler: type D standard coweight not supported");
            MultiPoly r = plus_product(n);
            return spec.flag_dim() % 2 == 0 ? r : -r;
        }
    }
    throw std::logic_error("equivariant_euler: bad family");
}

MultiPoly gysin_integrate(const GroupSpec& spec, const MultiPoly& f) {
    if (f.num_vars() != spec.rank)
        throw std::invalid_argument("gysin_integrate: variable count mismatch");
    if (!f.is_homogeneous())
        throw std::invalid_argument("gysin_integrate: f must be homogeneous");
    if (f.is_zero()) return MultiPoly::zero(spec.rank);
    check_levi_invariant(spec, f);

    switch (spec.family) {
        case Family::A: return integrate_type_a(spec, f);
        case Family::B: return integrate_type_b(spec, f);
        case Family::C: return integrate_type_c(spec, f);
        case Family::D:
            if (spec.coweight != GroupSpec::Coweight::Spin)
                throw std::invalid_argument(
                    "gysin_integrate: type D standard coweight not supported");
            return integrate_type_d_spin(spec, f);
    }
    throw std::logic_error("gysin_integrate: bad family");
}

MultiPoly generator_poly(const GroupSpec& spec, const std::string& label) {
    const long n = spec.rank;
    if (label == "Pf") {
        if (spec.family != Family::D)
            throw std::invalid_argument("generator_poly: Pf is type D only");
        return pfaffian_poly(n);
    }
    if (label.size() < 2 || label[0] != 'p')
        throw std::invalid_argument("generator_poly: unknown label " + label);
    const long k = std::stol(label.substr(1));
    const long top = spec.family == Family::D ? n - 1 : n;
    if (k < 1 || k > top)
        throw std::invalid_argument("generator_poly: label out of range " + label);
    return spec.family == Family::A ? power_sum(n, k) : power_sum(n, 2 * k);
}

ReducedVector nabla_bar(const GroupSpec& spec, const std::string& label) {
    const long n = spec.rank;
    const long N = spec.eta_exponent();
    const std::vector<Rat> dir = spec.derivative_direction();

    MultiPoly omega(n);
    for (long i = 0; i < n; ++i)
        omega += MultiPoly::variable(n, i).pow(2).scaled(make_rat(1, 2));
    const MultiPoly t_mu = omega.directional_derivative(dir);
    const MultiPoly eta = t_mu.pow(N);

    const MultiPoly gen = generator_poly(spec, label);
    const long gen_degree = gen.degree();
    const MultiPoly h = gysin_integrate(spec, eta * gen.directional_derivative(dir));

    ReducedVector out;
    if (h.is_zero()) return out;
    if (h.degree() != gen_degree)
        throw std::logic_error("nabla_bar: degree bookkeeping violation");

    switch (spec.family) {
        case Family::A: {
            const Rat c = power_sum_linear_part(h, gen_degree);
            if (c != 0) out.coefficients[label] = c;
            break;
        }
        case Family::B:
        case Family::C: {
            const MultiPoly hy = to_squared_vars(h);
            const Rat c = power_sum_linear_part(hy, gen_degree / 2);
            if (c != 0) out.coefficients[label] = c;
            break;
        }
        case Family::D: {
            const ParitySplit parts = split_by_parity(h);
            if (!parts.even.is_zero()) {
                const MultiPoly hy = to_squared_vars(parts.even);
                const long d = hy.degree();
                if (d < 1 || d > n - 1)
                    throw std::logic_error("nabla_bar: degree bookkeeping violation");
                const Rat c = power_sum_linear_part(hy, d);
                if (c != 0) out.coefficients["p" + std::to_string(d)] = c;
            }
            if (!parts.odd.is_zero()) {
                const MultiPoly q = exact_divide(parts.odd, pfaffian_poly(n));
                const Rat c = q.constant_term();
                if (c != 0) out.coefficients["Pf"] = c;
            }
            break;
        }
    }
    return out;
}

EigenResult oracle_eigen(const GroupSpec& spec) {
    if (spec.family == Family::D && spec.coweight != GroupSpec::Coweight::Spin)
        throw std::invalid_argument(
            "oracle_eigen: type D standard coweight has no localization oracle");

    const bool d_even_collision =
        spec.family == Family::D && spec.rank % 2 == 0;
    const std::string pm_label =
        d_even_collision ? "p" + std::to_string(spec.rank / 2) : "";

    EigenResult result;
    result.spec = spec;
    std::map<std::string, ReducedVector> images;
    for (const std::string& label : spec.generator_labels()) {
        ReducedVector rv = nabla_bar(spec, label);
        const bool in_block =
            d_even_collision && (label == pm_label || label == "Pf");
        for (const auto& [key, value] : rv.coefficients) {
            const bool allowed =
                key == label || (in_block && (key == pm_label || key == "Pf"));
            if (!allowed)
                throw std::logic_error("oracle_eigen: unexpected non-eigenvector (" +
                                       spec.to_string() + ", " + label + " -> " +
                                       key + ")");
        }
        images[label] = std::move(rv);
    }

    for (const std::string& label : spec.generator_labels()) {
        if (d_even_collision && (label == pm_label || label == "Pf")) continue;
        result.eigenweights.emplace_back(label, images[label].get(label));
    }
    if (d_even_collision) {
        std::array<std::array<Rat, 2>, 2> matrix;
        matrix[0][0] = images[pm_label].get(pm_label);
        matrix[1][0] = images[pm_label].get("Pf");
        matrix[0][1] = images["Pf"].get(pm_label);
        matrix[1][1] = images["Pf"].get("Pf");
        result.block = make_block({pm_label, "Pf"}, matrix);
    }
    return result;
}

}  // namespace ew
