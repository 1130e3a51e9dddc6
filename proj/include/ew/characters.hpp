#pragma once

#include <map>
#include <mutex>
#include <utility>

#include "ew/numeric.hpp"
#include "ew/partition.hpp"

namespace ew {

/// Memoizing evaluator for irreducible symmetric-group characters via
/// the Murnaghan-Nakayama recursion. Values are exact big integers.
///
/// Thread safety: concurrent calls return identical values; the cache
/// is guarded by a mutex around lookups and insertions.
class CharacterTable {
public:
    /// chi^shape evaluated on the conjugacy class of cycle type cls.
    /// Requires |shape| = |cls|; chi^{}({}) = 1.
    Int character(const Partition& shape, const Partition& cls);

private:
    Int character_unchecked(const Partition& shape, const Partition& cls);

    std::map<std::pair<Partition, Partition>, Int> memo_;
    std::mutex mutex_;
};

/// Shared-table convenience wrapper.
Int character(const Partition& shape, const Partition& cls);

/// chi^shape((k)) on the full k-cycle, by hook vanishing: (-1)^j when
/// shape = (k-j, 1^j), else 0. Requires |shape| = k.
Int cycle_character(long k, const Partition& shape);

}  // namespace ew
