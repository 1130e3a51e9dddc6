#include "ew/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ew {

Partition::Partition(std::vector<long> parts) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            throw std::invalid_argument("Partition: negative part");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    parts_ = std::move(parts);
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0L);
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (long i = 0; i < other.length(); ++i)
        if (other.part(i) > part(i)) return false;
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

Partition add_padded(const Partition& a, const Partition& b) {
    const long len = std::max(a.length(), b.length());
    std::vector<long> out(static_cast<size_t>(len));
    for (long i = 0; i < len; ++i)
        out[static_cast<size_t>(i)] = a.part(i) + b.part(i);
    return Partition(std::move(out));
}

Partition scale(const Partition& lambda, long c) {
    if (c < 0) throw std::invalid_argument("scale: negative multiplier");
    std::vector<long> out = lambda.parts();
    for (auto& p : out) p *= c;
    return Partition(std::move(out));
}

Partition subtract(const Partition& a, const Partition& b) {
    if (!a.contains(b))
        throw std::invalid_argument("subtract: partitions not nested");
    std::vector<long> out(static_cast<size_t>(a.length()));
    for (long i = 0; i < a.length(); ++i)
        out[static_cast<size_t>(i)] = a.part(i) - b.part(i);
    return Partition(std::move(out));
}

Partition hook_partition(long k, long j) {
    if (k < 1 || j < 0 || j > k - 1)
        throw std::invalid_argument("hook_partition: require 0 <= j <= k-1");
    std::vector<long> out;
    out.reserve(static_cast<size_t>(j + 1));
    out.push_back(k - j);
    for (long i = 0; i < j; ++i) out.push_back(1);
    return Partition(std::move(out));
}

std::pair<Partition, Partition> staircases(long n) {
    if (n < 1) throw std::invalid_argument("staircases: n >= 1 required");
    std::vector<long> delta, rho;
    for (long i = n - 1; i >= 1; --i) delta.push_back(i);
    for (long i = n; i >= 1; --i) rho.push_back(i);
    return {Partition(std::move(delta)), Partition(std::move(rho))};
}

Partition column(long h) {
    if (h < 0) throw std::invalid_argument("column: negative height");
    return Partition(std::vector<long>(static_cast<size_t>(h), 1));
}

Int centralizer_size(const Partition& nu) {
    Int z = 1;
    long i = 0;
    const long len = nu.length();
    while (i < len) {
        long j = i;
        while (j < len && nu.part(j) == nu.part(i)) ++j;
        const long mult = j - i;
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(nu.part(i)),
                      static_cast<unsigned long>(mult));
        z *= p * factorial(mult);
        i = j;
    }
    return z;
}

namespace {
void emit_partitions(long remaining, long max_part, long slots,
                     std::vector<long>& stack, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(stack));
        return;
    }
    if (slots == 0) return;
    for (long p = std::min(remaining, max_part); p >= 1; --p) {
        stack.push_back(p);
        emit_partitions(remaining - p, p, slots - 1, stack, out);
        stack.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(long k, long max_length) {
    if (k < 0) throw std::invalid_argument("partitions_of: k >= 0 required");
    std::vector<Partition> out;
    std::vector<long> stack;
    const long slots = max_length < 0 ? k : std::min(max_length, k);
    if (k == 0) {
        out.push_back(Partition());
        return out;
    }
    emit_partitions(k, k, slots, stack, out);
    return out;
}

}  // namespace ew
