#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <lzend/phrase.hpp>

namespace lzend {

// LZE1 layout, little-endian, no padding:
//   "LZE1" | n (u64) | z (u64) | z * { source (u64), len (u64), ext (u8) }
inline constexpr char format_magic[4] = {'L', 'Z', 'E', '1'};
inline constexpr std::size_t header_size = 20;
inline constexpr std::size_t record_size = 17;

enum class FormatErrorKind {
    bad_magic,
    truncated,
    trailing_data,
    length_mismatch, // sum of phrase lengths != n
    invalid_source,  // source >= own phrase number
    invalid_phrase,  // zero length, or a copy from the empty phrase
};

class FormatError : public std::runtime_error {
    FormatErrorKind kind_;

public:
    FormatError(FormatErrorKind kind, std::string const& what) : std::runtime_error(what), kind_(kind) {}
    FormatErrorKind kind() const { return kind_; }
};

// a parsing that does not describe a string of its declared length
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> serialize(Parsing const& parsing);
Parsing deserialize(std::span<std::uint8_t const> bytes);

std::vector<std::uint8_t> decode(Parsing const& parsing);

// absolute end positions of the phrases
class PhraseBoundaries {
    std::vector<std::size_t> ends_;

public:
    PhraseBoundaries() = default;
    explicit PhraseBoundaries(Parsing const& parsing);

    std::vector<std::size_t> const& ends() const { return ends_; }

    // 0-based index of the phrase covering text position pos
    std::size_t phrase_at(std::size_t pos) const;
};

struct ExtractStats {
    std::size_t segments = 0;  // source ranges resolved
    std::size_t max_depth = 0; // longest chain of source hops
};

// decode(parsing)[start .. start+len) without decoding the rest
std::vector<std::uint8_t> extract(Parsing const& parsing, PhraseBoundaries const& bounds, std::size_t start,
                                  std::size_t len, ExtractStats* stats = nullptr);

} // namespace lzend
