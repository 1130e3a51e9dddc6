#include "ew/characters.hpp"

#include <stdexcept>

#include "ew/border_strip.hpp"

namespace ew {

Int CharacterTable::character(const Partition& shape, const Partition& cls) {
    if (shape.size() != cls.size())
        throw std::invalid_argument("character: |shape| != |class_type|");
    return character_unchecked(shape, cls);
}

Int CharacterTable::character_unchecked(const Partition& shape,
                                        const Partition& cls) {
    if (shape.empty()) return 1;
    const auto key = std::make_pair(shape, cls);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    // remove the largest cycle first; cls is already sorted descending
    const long cycle = cls.part(0);
    std::vector<long> rest(cls.parts().begin() + 1, cls.parts().end());
    const Partition tail{std::move(rest)};

    Int value = 0;
    for (const BorderStrip& strip : border_strips(shape, cycle)) {
        const Int sub = character_unchecked(strip.remainder, tail);
        value += (strip.height % 2 == 0) ? sub : -sub;
    }
    std::lock_guard<std::mutex> lock(mutex_);
    memo_.emplace(key, value);
    return value;
}

namespace {
CharacterTable& shared_table() {
    static CharacterTable table;
    return table;
}
}  // namespace

Int character(const Partition& shape, const Partition& cls) {
    return shared_table().character(shape, cls);
}

Int cycle_character(long k, const Partition& shape) {
    if (shape.size() != k)
        throw std::invalid_argument("cycle_character: |shape| != k");
    if (shape.length() >= 1 && shape.part(0) == k - shape.length() + 1) {
        bool hook = true;
        for (long i = 1; i < shape.length(); ++i)
            if (shape.part(i) != 1) hook = false;
        if (hook) return (shape.length() - 1) % 2 == 0 ? 1 : -1;
    }
    return 0;
}

}  // namespace ew
