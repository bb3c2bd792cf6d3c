#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>

#include <lzend/btree_map.hpp>

namespace lzend {

// Marks phrase end boundaries in lex-space: key = lex rank of the boundary,
// value = phrase number (>= 1).
template<std::size_t Fanout = 64>
class BasicBoundaryDict {
public:
    using Entry = typename BTreeMap<std::size_t, std::size_t, Fanout>::Entry;

private:
    BTreeMap<std::size_t, std::size_t, Fanout> map_;

public:
    // duplicate keys are a contract violation (std::logic_error)
    void insert(std::size_t key, std::size_t phrase) { map_.insert(key, phrase); }

    // missing keys are a contract violation (std::logic_error)
    void remove(std::size_t key) {
        if(!map_.erase(key)) throw std::logic_error("BoundaryDict: removing absent key");
    }

    std::optional<Entry> predecessor(std::size_t y) const { return map_.predecessor(y); }
    std::optional<Entry> successor(std::size_t y) const { return map_.successor(y); }
    bool contains(std::size_t key) const { return map_.contains(key); }

    std::size_t size() const { return map_.size(); }
    bool empty() const { return map_.empty(); }

    template<typename F>
    void for_each(F&& f) const { map_.for_each(std::forward<F>(f)); }
};

using BoundaryDict = BasicBoundaryDict<>;

} // namespace lzend
