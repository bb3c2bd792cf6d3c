#pragma once

#include <cstdint>
#include <span>

#include <lzend/phrase.hpp>

namespace lzend {

// Greedy LZ-End parsing by direct string comparison. Cubic time; meant as a test
// oracle on short inputs. Among equally long sources the smallest phrase number wins.
Parsing naive_parse(std::span<std::uint8_t const> input);

} // namespace lzend
