#include "ew/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace ew {

namespace {
void check_same_vars(const MultiPoly& a, const MultiPoly& b, const char* op) {
    if (a.num_vars() != b.num_vars())
        throw std::invalid_argument(std::string(op) + ": num_vars mismatch");
}
}  // namespace

MultiPoly MultiPoly::constant(long n, const Rat& c) {
    MultiPoly p(n);
    p.add_term(std::vector<long>(static_cast<size_t>(n), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(long n, long i) {
    if (i < 0 || i >= n) throw std::invalid_argument("variable: index out of range");
    std::vector<long> e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(i)] = 1;
    return monomial(n, std::move(e), 1);
}

MultiPoly MultiPoly::monomial(long n, std::vector<long> exps, const Rat& c) {
    if (static_cast<long>(exps.size()) != n)
        throw std::invalid_argument("monomial: exponent vector length mismatch");
    for (long e : exps)
        if (e < 0) throw std::invalid_argument("monomial: negative exponent");
    MultiPoly p(n);
    p.add_term(exps, c);
    return p;
}

long MultiPoly::degree() const {
    if (is_zero()) throw std::logic_error("degree of the zero polynomial");
    long d = 0;
    for (long e : terms_.rbegin()->first) d += e;
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (is_zero()) return true;
    long d = -1;
    for (const auto& [exps, c] : terms_) {
        long t = 0;
        for (long e : exps) t += e;
        if (d < 0) d = t;
        else if (t != d) return false;
    }
    return true;
}

Rat MultiPoly::coeff(const std::vector<long>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat MultiPoly::constant_term() const {
    return coeff(std::vector<long>(static_cast<size_t>(nvars_), 0));
}

void MultiPoly::add_term(const std::vector<long>& exps, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    check_same_vars(*this, other, "operator+");
    for (const auto& [exps, c] : other.terms_) add_term(exps, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    check_same_vars(*this, other, "operator-");
    for (const auto& [exps, c] : other.terms_) add_term(exps, -c);
    return *this;
}

MultiPoly MultiPoly::operator-() const { return scaled(-1); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_same_vars(a, b, "operator*");
    MultiPoly out(a.num_vars());
    std::vector<long> exps(static_cast<size_t>(a.num_vars()));
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            for (size_t i = 0; i < exps.size(); ++i) exps[i] = ea[i] + eb[i];
            out.add_term(exps, ca * cb);
        }
    return out;
}

MultiPoly MultiPoly::scaled(const Rat& c) const {
    MultiPoly out(nvars_);
    if (c == 0) return out;
    for (const auto& [exps, coeff] : terms_) out.terms_.emplace(exps, coeff * c);
    return out;
}

MultiPoly MultiPoly::pow(long e) const {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    MultiPoly result = constant(nvars_, 1);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::directional_derivative(const std::vector<Rat>& direction) const {
    if (static_cast<long>(direction.size()) != nvars_)
        throw std::invalid_argument("directional_derivative: direction length mismatch");
    MultiPoly out(nvars_);
    std::vector<long> e(static_cast<size_t>(nvars_));
    for (const auto& [exps, c] : terms_)
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0 || direction[i] == 0) continue;
            e = exps;
            e[i] -= 1;
            out.add_term(e, c * direction[i] * exps[i]);
        }
    return out;
}

MultiPoly MultiPoly::apply_signed_permutation(const std::vector<long>& perm,
                                              const std::vector<int>& signs) const {
    if (static_cast<long>(perm.size()) != nvars_ ||
        static_cast<long>(signs.size()) != nvars_)
        throw std::invalid_argument("apply_signed_permutation: length mismatch");
    std::vector<bool> seen(static_cast<size_t>(nvars_), false);
    for (long p : perm) {
        if (p < 0 || p >= nvars_ || seen[static_cast<size_t>(p)])
            throw std::invalid_argument("apply_signed_permutation: not a permutation");
        seen[static_cast<size_t>(p)] = true;
    }
    MultiPoly out(nvars_);
    std::vector<long> e(static_cast<size_t>(nvars_));
    for (const auto& [exps, c] : terms_) {
        int sign = 1;
        for (size_t i = 0; i < exps.size(); ++i) {
            e[static_cast<size_t>(perm[i])] = exps[i];
            if (signs[i] < 0 && exps[i] % 2 != 0) sign = -sign;
        }
        out.add_term(e, sign > 0 ? c : -c);
    }
    return out;
}

std::string MultiPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << rat_to_string(it->second);
        for (size_t i = 0; i < it->first.size(); ++i)
            if (it->first[i] > 0) {
                os << "*x" << (i + 1);
                if (it->first[i] > 1) os << "^" << it->first[i];
            }
    }
    return os.str();
}

MultiPoly exact_divide(const MultiPoly& num, const MultiPoly& den) {
    check_same_vars(num, den, "exact_divide");
    if (den.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
    MultiPoly quotient(num.num_vars());
    MultiPoly remainder = num;
    const auto& lead_den = *den.terms().rbegin();
    std::vector<long> e(static_cast<size_t>(num.num_vars()));
    while (!remainder.is_zero()) {
        const auto& lead_rem = *remainder.terms().rbegin();
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = lead_rem.first[i] - lead_den.first[i];
            if (e[i] < 0)
                throw not_divisible_error("exact_divide: nonzero remainder");
        }
        MultiPoly t = MultiPoly::monomial(num.num_vars(), e,
                                          lead_rem.second / lead_den.second);
        quotient += t;
        remainder -= t * den;
    }
    return quotient;
}

}  // namespace ew
