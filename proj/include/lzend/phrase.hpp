#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace lzend {

// One LZ-End phrase: copy the last len-1 bytes ending at the boundary of phrase
// `source`, then append `ext`. Phrase numbers are 1-based; source 0 is the empty
// phrase and copies nothing.
struct Phrase {
    std::size_t source = 0;
    std::size_t len = 0;
    std::uint8_t ext = 0;

    bool operator==(Phrase const&) const = default;
};

struct Parsing {
    std::vector<Phrase> phrases; // f_1 .. f_z
    std::size_t n = 0;

    std::size_t z() const { return phrases.size(); }
    bool operator==(Parsing const&) const = default;
};

struct ParseConfig {
    std::optional<std::size_t> max_phrase_len; // h >= 1
    bool merge_first = false;
};

} // namespace lzend
