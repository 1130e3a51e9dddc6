#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <vector>

#include "ew/gysin.hpp"
#include "ew/group_spec.hpp"
#include "ew/multipoly.hpp"
#include "ew/partition.hpp"
#include "ew/symfunc.hpp"
#include "test_helpers.hpp"

using ew::GroupSpec;
using ew::MultiPoly;
using ew::Partition;
using ew::Rat;

namespace {

Partition P(std::vector<long> parts) { return Partition(std::move(parts)); }

MultiPoly var(long n, long i) { return MultiPoly::variable(n, i); }

Rat sign_pow(long e) { return e % 2 == 0 ? Rat(1) : Rat(-1); }

std::vector<long> first_vars(long m) {
    std::vector<long> v(static_cast<size_t>(m));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

// Generators of the full Weyl group as signed permutations.
struct SignedPerm {
    std::vector<long> perm;
    std::vector<int> signs;
};

std::vector<SignedPerm> weyl_generators(const GroupSpec& spec) {
    const long n = spec.rank;
    std::vector<SignedPerm> gens;
    for (long i = 0; i + 1 < n; ++i) {
        SignedPerm g{first_vars(n), std::vector<int>(static_cast<size_t>(n), 1)};
        std::swap(g.perm[static_cast<size_t>(i)], g.perm[static_cast<size_t>(i + 1)]);
        gens.push_back(std::move(g));
    }
    if (spec.family == GroupSpec::Family::B ||
        spec.family == GroupSpec::Family::C) {
        SignedPerm g{first_vars(n), std::vector<int>(static_cast<size_t>(n), 1)};
        g.signs.back() = -1;
        gens.push_back(std::move(g));
    } else if (spec.family == GroupSpec::Family::D) {
        SignedPerm g{first_vars(n), std::vector<int>(static_cast<size_t>(n), 1)};
        g.signs[static_cast<size_t>(n - 1)] = -1;
        g.signs[static_cast<size_t>(n - 2)] = -1;
        gens.push_back(std::move(g));
    }
    return gens;
}

void check_w_invariant(const GroupSpec& spec, const MultiPoly& f) {
    for (const auto& g : weyl_generators(spec))
        CHECK(f.apply_signed_permutation(g.perm, g.signs) == f);
}

void check_integral(const GroupSpec& spec, const MultiPoly& f,
                    const MultiPoly& expected) {
    const MultiPoly got = ew::gysin_integrate(spec, f);
    CHECK(got == expected);
    if (!got.is_zero()) {
        CHECK(got.degree() == f.degree() - spec.flag_dim());
        check_w_invariant(spec, got);
    }
}

}  // namespace

TEST_CASE("equivariant Euler classes") {
    CHECK(ew::equivariant_euler(GroupSpec::typeA(2, 1)) ==
          -(var(2, 0) - var(2, 1)));
    CHECK(ew::equivariant_euler(GroupSpec::typeC(2)) ==
          (var(2, 0) * var(2, 1) * (var(2, 0) + var(2, 1))).scaled(Rat(-4)));
    CHECK(ew::equivariant_euler(GroupSpec::typeD(2)) == -(var(2, 0) + var(2, 1)));
    CHECK(ew::equivariant_euler(GroupSpec::typeB(1)) == -var(1, 0));
    for (const GroupSpec& spec :
         {GroupSpec::typeA(4, 2), GroupSpec::typeB(3), GroupSpec::typeC(3),
          GroupSpec::typeD(4)}) {
        const MultiPoly r = ew::equivariant_euler(spec);
        CHECK(r.is_homogeneous());
        CHECK(r.degree() == spec.flag_dim());
    }
}

TEST_CASE("type A integral on Schur polynomials (rectangle shift)") {
    for (long n = 2; n <= 5; ++n) {
        for (long m = 1; m < n; ++m) {
            const GroupSpec spec = GroupSpec::typeA(n, m);
            const Partition rect(
                std::vector<long>(static_cast<size_t>(m), n - m));
            for (long k = 0; k <= spec.flag_dim() + 4; ++k) {
                for (const auto& lambda : ew::partitions_of(k, m)) {
                    const MultiPoly f = ew::schur_in(lambda, n, first_vars(m));
                    MultiPoly expected(n);
                    if (lambda.contains(rect))
                        expected = ew::schur(ew::subtract(lambda, rect), n)
                                       .scaled(sign_pow(spec.flag_dim()));
                    check_integral(spec, f, expected);
                }
            }
        }
    }
}

TEST_CASE("type C integral on Schur polynomials") {
    for (long n = 2; n <= 4; ++n) {
        const GroupSpec spec = GroupSpec::typeC(n);
        const Partition rho = ew::staircases(n).second;
        for (long k = 0; k <= spec.flag_dim() + 4; ++k) {
            for (const auto& lambda : ew::partitions_of(k, n)) {
                // lambda = 2 pi + rho_n for a partition pi?
                std::vector<long> half(static_cast<size_t>(n));
                bool matches = true;
                for (long i = 0; i < n && matches; ++i) {
                    const long d = lambda.part(i) - rho.part(i);
                    if (d < 0 || d % 2 != 0) matches = false;
                    else half[static_cast<size_t>(i)] = d / 2;
                }
                matches = matches && std::is_sorted(half.rbegin(), half.rend());
                MultiPoly expected(n);
                if (matches)
                    expected = ewtest::doubled_vars(ew::schur(Partition(half), n))
                                   .scaled(sign_pow(spec.flag_dim()));
                check_integral(spec, ew::schur(lambda, n), expected);
            }
        }
    }
}

TEST_CASE("type D integral: parity cases with the 2^{n-1} and Pf factors") {
    for (long n = 2; n <= 4; ++n) {
        const GroupSpec spec = GroupSpec::typeD(n);
        const Partition delta = ew::staircases(n).first;
        for (long k = 0; k <= spec.flag_dim() + 4; ++k) {
            for (const auto& lambda : ew::partitions_of(k, n)) {
                long odd = 0, even = 0;
                std::vector<long> shifted(static_cast<size_t>(n));
                for (long i = 0; i < n; ++i) {
                    shifted[static_cast<size_t>(i)] =
                        lambda.part(i) + delta.part(i);
                    (shifted[static_cast<size_t>(i)] % 2 != 0 ? odd : even)++;
                }
                MultiPoly expected(n);
                if (odd == 0 || even == 0) {
                    // kappa = (shifted - parity)/2 = pi + delta_n
                    std::vector<long> pi(static_cast<size_t>(n));
                    for (long i = 0; i < n; ++i)
                        pi[static_cast<size_t>(i)] =
                            (shifted[static_cast<size_t>(i)] - (odd ? 1 : 0)) / 2 -
                            delta.part(i);
                    REQUIRE(std::is_sorted(pi.rbegin(), pi.rend()));
                    REQUIRE(pi.back() >= 0);
                    expected =
                        ewtest::doubled_vars(ew::schur(Partition(pi), n))
                            .scaled(sign_pow(spec.flag_dim()) * ew::pow2(n - 1));
                    if (odd) expected = expected * ew::elementary(n, n);
                }
                check_integral(spec, ew::schur(lambda, n), expected);
            }
        }
    }
}

TEST_CASE("type A coset-representative independence, n <= 4") {
    // The localization sum over W/W_mu reps, cleared to the common
    // denominator Delta(X): terms from reps differing by W_mu elements
    // must agree, so two rep choices give identical sums.
    for (long n = 2; n <= 4; ++n) {
        for (long m = 1; m < n; ++m) {
            const GroupSpec spec = GroupSpec::typeA(n, m);
            const MultiPoly f =
                ew::power_sum(n, 1).pow(spec.flag_dim()) *
                ew::power_sum_in(n, 2, first_vars(m));
            const MultiPoly core =
                f * ew::vandermonde_in(n, first_vars(m)) *
                ew::vandermonde_in(n, [&] {
                    std::vector<long> b;
                    for (long i = m; i < n; ++i) b.push_back(i);
                    return b;
                }());
            auto sum_over = [&](bool twist) {
                MultiPoly total(n);
                std::vector<long> subset(static_cast<size_t>(m));
                std::iota(subset.begin(), subset.end(), 0);
                auto emit = [&](const std::vector<long>& chosen) {
                    // rep sends A-slots to chosen, B-slots to the rest
                    std::vector<long> perm(static_cast<size_t>(n), -1);
                    std::vector<bool> used(static_cast<size_t>(n), false);
                    for (long i = 0; i < m; ++i) {
                        perm[static_cast<size_t>(i)] = chosen[static_cast<size_t>(i)];
                        used[static_cast<size_t>(chosen[static_cast<size_t>(i)])] = true;
                    }
                    long slot = m;
                    for (long v = 0; v < n; ++v)
                        if (!used[static_cast<size_t>(v)])
                            perm[static_cast<size_t>(slot++)] = v;
                    if (twist) {
                        // compose with an element of W_mu = S_m x S_{n-m}
                        if (m >= 2) std::swap(perm[0], perm[1]);
                        else if (n - m >= 2)
                            std::swap(perm[static_cast<size_t>(m)],
                                      perm[static_cast<size_t>(m + 1)]);
                    }
                    long inversions = 0;
                    for (long i = 0; i < n; ++i)
                        for (long j = i + 1; j < n; ++j)
                            if (perm[static_cast<size_t>(i)] >
                                perm[static_cast<size_t>(j)])
                                ++inversions;
                    const std::vector<int> plus(static_cast<size_t>(n), 1);
                    total += core.apply_signed_permutation(perm, plus)
                                 .scaled(sign_pow(inversions));
                };
                // iterate m-subsets of {0..n-1} in increasing order
                auto recurse = [&](auto&& self, long pos, long next) -> void {
                    if (pos == m) {
                        emit(subset);
                        return;
                    }
                    for (long v = next; v < n; ++v) {
                        subset[static_cast<size_t>(pos)] = v;
                        self(self, pos + 1, v + 1);
                    }
                };
                recurse(recurse, 0, 0);
                return ew::exact_divide(total, ew::vandermonde(n))
                    .scaled(sign_pow(spec.flag_dim()));
            };
            const MultiPoly direct = ew::gysin_integrate(spec, f);
            CHECK(sum_over(false) == direct);
            CHECK(sum_over(true) == direct);
        }
    }
}

TEST_CASE("gysin_integrate linearity and input validation") {
    const GroupSpec spec = GroupSpec::typeC(3);
    const MultiPoly f = ew::schur(P({4, 3, 2}), 3) * ew::power_sum(3, 1);
    const MultiPoly g = ew::schur(P({5, 3, 2}), 3);
    CHECK(ew::gysin_integrate(spec, f.scaled(Rat(2)) - g.scaled(Rat(3))) ==
          ew::gysin_integrate(spec, f).scaled(Rat(2)) -
              ew::gysin_integrate(spec, g).scaled(Rat(3)));

    // not W_mu-invariant
    CHECK_THROWS(ew::gysin_integrate(GroupSpec::typeA(3, 2), var(3, 0)));
    // wrong variable count
    CHECK_THROWS(ew::gysin_integrate(spec, var(2, 0)));
}

TEST_CASE("nabla_bar on single generators") {
    auto rv = ew::nabla_bar(GroupSpec::typeA(3, 1), "p2");
    CHECK(rv.get("p2") == Rat(1));
    CHECK(rv.coefficients.size() == 1);

    rv = ew::nabla_bar(GroupSpec::typeB(3), "p2");
    CHECK(rv.get("p2") == Rat(-4));
    CHECK(rv.coefficients.size() == 1);

    rv = ew::nabla_bar(GroupSpec::typeD(4), "p2");
    CHECK(rv.get("p2") == Rat(5, 2));
    CHECK(rv.get("Pf") == Rat(-6));
}

TEST_CASE("oracle eigenweights: quoted examples") {
    const auto c3 = ew::oracle_eigen(GroupSpec::typeC(3));
    REQUIRE(c3.eigenweights.size() == 3);
    CHECK(c3.eigenweights[0].second == Rat(1, 2));
    CHECK(c3.eigenweights[1].second == Rat(5, 16));
    CHECK(c3.eigenweights[2].second == Rat(1, 2));

    const auto c4 = ew::oracle_eigen(GroupSpec::typeC(4));
    const std::vector<long> nums{44, 19, 28, 41};
    for (size_t i = 0; i < 4; ++i)
        CHECK(c4.eigenweights[i].second == ew::make_rat(nums[i], 16));

    const auto d4 = ew::oracle_eigen(GroupSpec::typeD(4));
    REQUIRE(d4.block.has_value());
    CHECK(d4.block->basis == std::array<std::string, 2>{"p2", "Pf"});
    CHECK(d4.block->matrix[0][0] == Rat(5, 2));
    CHECK(d4.block->matrix[0][1] == Rat(-1, 8));
    CHECK(d4.block->matrix[1][0] == Rat(-6));
    CHECK(d4.block->matrix[1][1] == Rat(7, 2));
    REQUIRE(d4.block->eigenvalues.has_value());
    CHECK((*d4.block->eigenvalues)[0] == Rat(4));
    CHECK((*d4.block->eigenvalues)[1] == Rat(2));

    for (long n = 1; n <= 4; ++n)
        for (const auto& [label, value] :
             ew::oracle_eigen(GroupSpec::typeB(n)).eigenweights)
            CHECK(value == Rat(-4));

    CHECK_THROWS(ew::oracle_eigen(
        GroupSpec::typeD(3, GroupSpec::Coweight::Standard)));
}
