#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "ew/numeric.hpp"

namespace ew {

/// Weakly decreasing sequence of positive integers, stored without
/// trailing zeros. The empty sequence is the empty partition.
class Partition {
public:
    Partition() = default;

    /// Accepts any weakly decreasing sequence of nonnegative integers
    /// (trailing zeros are stripped); throws otherwise.
    explicit Partition(std::vector<long> parts);

    long size() const { return size_; }
    long length() const { return static_cast<long>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Part at index i (0-based); zero beyond the stored length.
    long part(long i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
    }

    const std::vector<long>& parts() const { return parts_; }

    /// Entrywise containment: other[i] <= this[i] for all i.
    bool contains(const Partition& other) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

    std::string to_string() const;

private:
    std::vector<long> parts_;
    long size_ = 0;
};

/// Entrywise sum, shorter operand padded with zeros.
Partition add_padded(const Partition& a, const Partition& b);

/// Entrywise scalar multiple c*lambda, c >= 0.
Partition scale(const Partition& lambda, long c);

/// Entrywise difference a - b; requires b to be contained in a and the
/// result to be weakly decreasing.
Partition subtract(const Partition& a, const Partition& b);

/// The hook (k-j, 1^j), for 0 <= j <= k-1.
Partition hook_partition(long k, long j);

/// delta_n = (n-1, n-2, ..., 1) and rho_n = (n, n-1, ..., 1).
std::pair<Partition, Partition> staircases(long n);

/// Column of height h: (1^h).
Partition column(long h);

/// Centralizer size z_nu = prod_i i^{m_i} m_i! of a permutation with
/// cycle type nu.
Int centralizer_size(const Partition& nu);

/// All partitions of k with at most max_length parts (max_length < 0
/// means unbounded), in reverse-lexicographic order.
std::vector<Partition> partitions_of(long k, long max_length = -1);

}  // namespace ew
