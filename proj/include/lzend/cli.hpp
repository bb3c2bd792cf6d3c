#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <lzend/phrase.hpp>

namespace lzend::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_io = 1,
    exit_format = 2,
    exit_usage = 3,
};

struct BenchResult {
    std::size_t n = 0;
    std::size_t z = 0;
    std::size_t max_len = 0;
    double index_seconds = 0;
    double parse_seconds = 0; // parsing phase only, index construction excluded

    double ratio() const { return n == 0 ? 0.0 : static_cast<double>(z) / static_cast<double>(n); }
};

BenchResult bench_parse(std::span<std::uint8_t const> input, ParseConfig const& config);

// `n=<n> z=<z> ratio=<float6> maxlen=<m>`
std::string stats_line(Parsing const& parsing);

// args excludes the program name
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace lzend::cli
