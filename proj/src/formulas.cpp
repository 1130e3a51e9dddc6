#include "ew/formulas.hpp"

#include <stdexcept>

#include "ew/characters.hpp"
#include "ew/tableaux.hpp"

namespace ew {
namespace formulas {

namespace {

/// nu_k = (c, 1^N), with the k=... c=1 case collapsing to (1^{N+1}).
Partition cycle_class(long c, long N) {
    std::vector<long> parts;
    parts.reserve(static_cast<size_t>(N + 1));
    parts.push_back(c);
    for (long i = 0; i < N; ++i) parts.push_back(1);
    return Partition(std::move(parts));
}

Rat parity_sign(long exponent) { return exponent % 2 == 0 ? Rat(1) : Rat(-1); }

/// The hook-content product form of f^{rho_{n-1}} = dim chi^{delta_n}:
/// binom(n,2)! / prod_{i=1}^{n-1} (2i-1)^{n-i}.
Rat staircase_dimension(long n) {
    Int denom = 1;
    for (long i = 1; i <= n - 1; ++i) {
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(2 * i - 1),
                      static_cast<unsigned long>(n - i));
        denom *= p;
    }
    return make_rat(factorial(n * (n - 1) / 2), denom);
}

/// sum_{j=0}^{jmax} (-1)^j chi^{scale*pi_j(k) + base}(nu)
Int hook_alternating_sum(long k, long jmax, long scale, const Partition& base,
                         const Partition& nu) {
    Int sum = 0;
    for (long j = 0; j <= jmax; ++j) {
        const Partition shape =
            add_padded(ew::scale(hook_partition(k, j), scale), base);
        const Int value = character(shape, nu);
        sum += (j % 2 == 0) ? value : -value;
    }
    return sum;
}

}  // namespace

EigenResult typeA(long n, long m) {
    const GroupSpec spec = GroupSpec::typeA(n, m);
    const long N = spec.eta_exponent();
    const Partition rect(std::vector<long>(static_cast<size_t>(m), n - m));

    EigenResult result;
    result.spec = spec;
    for (long k = 1; k <= n; ++k) {
        // nu_1 is interpreted as (1^N)
        const Partition nu_k = k == 1 ? cycle_class(1, N - 1) : cycle_class(k - 1, N);
        const Int sum = hook_alternating_sum(k, std::min(k - 1, m - 1), 1, rect, nu_k);
        const Rat lambda_k = k == 1 ? Rat(m) : Rat(1);
        result.eigenweights.emplace_back("p" + std::to_string(k),
                                         parity_sign(N - 1) * lambda_k * Rat(sum));
    }
    return result;
}

EigenResult typeB(long n) {
    const GroupSpec spec = GroupSpec::typeB(n);
    EigenResult result;
    result.spec = spec;
    for (long k = 1; k <= n; ++k)
        result.eigenweights.emplace_back("p" + std::to_string(k), Rat(-4));
    return result;
}

EigenResult typeC(long n) {
    const GroupSpec spec = GroupSpec::typeC(n);
    const long N = spec.eta_exponent();
    const Partition rho = staircases(n).second;

    EigenResult result;
    result.spec = spec;
    for (long k = 1; k <= n; ++k) {
        const Partition nu_k = cycle_class(2 * k - 1, N);
        const Int sum = hook_alternating_sum(k, k - 1, 2, rho, nu_k);
        result.eigenweights.emplace_back(
            "p" + std::to_string(k), parity_sign(N - 1) * pow2(-N) * Rat(sum));
    }
    return result;
}

EigenResult typeD_spin(long n) {
    const GroupSpec spec = GroupSpec::typeD(n, GroupSpec::Coweight::Spin);
    const long N = spec.eta_exponent();
    const auto [delta, rho] = staircases(n);
    const Rat lead = parity_sign(N - 1) * pow2(n - 1 - N);

    // explicit Rat return: gmpxx expression templates must not escape
    auto eps_k = [&](long k) -> Rat {
        const Partition nu_k = cycle_class(2 * k - 1, N);
        return lead * Rat(hook_alternating_sum(k, k - 1, 2, delta, nu_k));
    };
    const Rat eps_pf = parity_sign(N - 1) * pow2(n - 2 - N) *
                       Rat(n * (n - 1) / 2 + 1) * staircase_dimension(n);

    EigenResult result;
    result.spec = spec;
    if (n % 2 != 0) {
        for (long k = 1; k <= n - 1; ++k)
            result.eigenweights.emplace_back("p" + std::to_string(k), eps_k(k));
        result.eigenweights.emplace_back("Pf", eps_pf);
        return result;
    }

    const long m = n / 2;
    for (long k = 1; k <= n - 1; ++k) {
        if (k == m) continue;
        result.eigenweights.emplace_back("p" + std::to_string(k), eps_k(k));
    }

    // degree-collision block on (p_m, Pf)
    const Partition nu_m = cycle_class(2 * m - 1, N);
    const Rat a_m = eps_k(m);
    Int skew_sum = 0;
    for (long j = 0; j <= m - 1; ++j) {
        const Partition shape = add_padded(scale(hook_partition(m, j), 2), delta);
        const Int f = skew_syt_count(shape, column(n - 1));
        skew_sum += (j % 2 == 0) ? f : -f;
    }
    const Rat b_m = lead * make_rat(1, n) * Rat(skew_sum);
    const Rat c_m = lead * Rat(m) * Rat(character(rho, nu_m));
    const Rat d_m = eps_pf;
    result.block = make_block({"p" + std::to_string(m), "Pf"},
                              {{{a_m, b_m}, {c_m, d_m}}});
    return result;
}

EigenResult typeD_standard(long n) {
    const GroupSpec spec = GroupSpec::typeD(n, GroupSpec::Coweight::Standard);
    EigenResult result;
    result.spec = spec;
    for (long k = 1; k <= n - 1; ++k)
        result.eigenweights.emplace_back("p" + std::to_string(k), Rat(4));
    result.eigenweights.emplace_back("Pf", Rat(2));
    return result;
}

EigenResult compute(const GroupSpec& spec) {
    switch (spec.family) {
        case GroupSpec::Family::A: return typeA(spec.rank, spec.m);
        case GroupSpec::Family::B: return typeB(spec.rank);
        case GroupSpec::Family::C: return typeC(spec.rank);
        case GroupSpec::Family::D:
            return spec.coweight == GroupSpec::Coweight::Spin
                       ? typeD_spin(spec.rank)
                       : typeD_standard(spec.rank);
    }
    throw std::logic_error("formulas::compute: bad family");
}

}  // namespace formulas
}  // namespace ew
