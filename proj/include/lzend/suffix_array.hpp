#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lzend {

// suffix array of a byte string via induced sorting (SA-IS)
std::vector<std::size_t> build_suffix_array(std::span<std::uint8_t const> text);

// LCP array (Kasai et al.); lcp[0] = 0 and lcp[i] = lce of the suffixes at ranks i-1 and i
std::vector<std::size_t> build_lcp_array(std::span<std::uint8_t const> text,
                                         std::span<std::size_t const> sa);

} // namespace lzend
