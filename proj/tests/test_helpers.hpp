#pragma once

// Brute-force reference implementations shared by the test binaries.
// Everything here is deliberately naive: these are the independent
// oracles the library is checked against, so they must not share
// algorithms with src/.

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "ew/multipoly.hpp"
#include "ew/numeric.hpp"
#include "ew/partition.hpp"
#include "ew/symfunc.hpp"

namespace ewtest {

using ew::Int;
using ew::MultiPoly;
using ew::Partition;
using ew::Rat;

// Cells of the skew shape lambda/nu as 0-based (row, col) pairs.
inline std::vector<std::pair<long, long>> skew_cells(const Partition& lambda,
                                                     const Partition& nu) {
    std::vector<std::pair<long, long>> cells;
    for (long i = 0; i < lambda.length(); ++i)
        for (long j = nu.part(i); j < lambda.part(i); ++j)
            cells.emplace_back(i, j);
    return cells;
}

// Counts standard fillings of lambda/nu by placing 1, 2, ... one cell
// at a time; a cell is placeable once its left and upper neighbors
// (within the skew shape) are filled.
inline Int count_standard_fillings(const Partition& lambda, const Partition& nu) {
    const auto cells = skew_cells(lambda, nu);
    std::set<std::pair<long, long>> cell_set(cells.begin(), cells.end());
    std::set<std::pair<long, long>> filled;
    Int count = 0;
    auto recurse = [&](auto&& self) -> void {
        if (filled.size() == cells.size()) {
            ++count;
            return;
        }
        for (const auto& c : cells) {
            if (filled.count(c)) continue;
            const std::pair<long, long> left{c.first, c.second - 1};
            const std::pair<long, long> up{c.first - 1, c.second};
            if (cell_set.count(left) && !filled.count(left)) continue;
            if (cell_set.count(up) && !filled.count(up)) continue;
            filled.insert(c);
            self(self);
            filled.erase(c);
        }
    };
    recurse(recurse);
    return count;
}

// All partitions mu contained in lambda (entrywise).
inline std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> result;
    std::vector<long> current;
    auto recurse = [&](auto&& self, long row) -> void {
        if (row == lambda.length()) {
            result.emplace_back(current);
            return;
        }
        const long cap =
            row == 0 ? lambda.part(0) : std::min(lambda.part(row), current.back());
        for (long v = cap; v >= 0; --v) {
            current.push_back(v);
            self(self, row + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0);
    return result;
}

// p_nu = prod_j p_{nu_j} in n variables.
inline MultiPoly power_sum_product(long n, const Partition& nu) {
    MultiPoly f = MultiPoly::constant(n, Rat(1));
    for (long part : nu.parts()) f = f * ew::power_sum(n, part);
    return f;
}

// Substitutes x_i -> x_i^2 (doubles every exponent).
inline MultiPoly doubled_vars(const MultiPoly& f) {
    MultiPoly g(f.num_vars());
    for (const auto& [exps, c] : f.terms()) {
        std::vector<long> doubled = exps;
        for (long& e : doubled) e *= 2;
        g.add_term(doubled, c);
    }
    return g;
}

// Irreducible character table of S_n built without Murnaghan-Nakayama:
// permutation characters of Young subgroups (the coefficient of x^lambda
// in p_nu) orthogonalized in descending lexicographic shape order.
// Returns table[shape][class] as a map of maps.
class BruteCharacterTable {
public:
    explicit BruteCharacterTable(long n) : n_(n), shapes_(ew::partitions_of(n)) {
        // partitions_of is reverse-lex, i.e. descending lex: (n) first.
        std::map<Partition, std::map<Partition, Rat>> perm_chars;
        for (const auto& lam : shapes_) {
            const long vars = std::max<long>(lam.length(), 1);
            std::vector<long> exps(static_cast<size_t>(vars));
            for (long i = 0; i < lam.length(); ++i)
                exps[static_cast<size_t>(i)] = lam.part(i);
            for (const auto& nu : shapes_)
                perm_chars[lam][nu] = power_sum_product(vars, nu).coeff(exps);
        }
        for (const auto& lam : shapes_) {
            std::map<Partition, Rat> row = perm_chars[lam];
            for (const auto& [mu, chi_mu] : table_) {
                const Rat mult = inner(row, chi_mu);
                for (const auto& nu : shapes_) row[nu] -= mult * chi_mu.at(nu);
            }
            table_[lam] = std::move(row);
        }
    }

    Int value(const Partition& shape, const Partition& cls) const {
        const Rat v = table_.at(shape).at(cls);
        if (v.get_den() != 1)
            throw std::logic_error("brute character table: non-integer entry");
        return v.get_num();
    }

private:
    Rat inner(const std::map<Partition, Rat>& f,
              const std::map<Partition, Rat>& g) const {
        Rat sum = 0;
        for (const auto& nu : shapes_)
            sum += f.at(nu) * g.at(nu) / Rat(ew::centralizer_size(nu));
        return sum;
    }

    long n_;
    std::vector<Partition> shapes_;
    std::map<Partition, std::map<Partition, Rat>> table_;
};

}  // namespace ewtest
