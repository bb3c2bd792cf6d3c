#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lzend::corpus {

// uniformly random bytes drawn from [0, alphabet)
std::vector<std::uint8_t> random_bytes(std::size_t n, std::uint64_t seed, unsigned alphabet = 256);

// w^k truncated to n bytes, w random of the given period
std::vector<std::uint8_t> periodic(std::size_t n, std::size_t period, std::uint64_t seed);

// runs of repeated bytes with geometric-ish lengths
std::vector<std::uint8_t> run_heavy(std::size_t n, std::uint64_t seed);

// prefix of the infinite Fibonacci word over {a, b}
std::vector<std::uint8_t> fibonacci_word(std::size_t n);

// all strings of exactly the given length over [0, sigma), mapped to 'a', 'b', ...
std::vector<std::vector<std::uint8_t>> all_strings(std::size_t length, unsigned sigma);

} // namespace lzend::corpus
