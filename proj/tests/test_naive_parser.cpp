#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <string_view>

#include <lzend/codec.hpp>
#include <lzend/corpus.hpp>
#include <lzend/naive_parser.hpp>

#include "test_util.hpp"

using namespace lzend;
using lzend::testing::bytes;
using lzend::testing::phrase_lengths;

namespace {

// Re-checks the phrase definition with string_view operations: each copy ends at an
// earlier boundary, and no longer copy leaving room for an extension exists.
void check_greedy(std::vector<std::uint8_t> const& input, Parsing const& p) {
    std::string_view const s(reinterpret_cast<char const*>(input.data()), input.size());
    std::vector<std::size_t> boundaries;
    std::size_t t = 0;
    for(std::size_t k = 0; k < p.z(); ++k) {
        Phrase const& f = p.phrases[k];
        std::size_t const copy = f.len - 1;
        REQUIRE(f.source <= k);
        if(f.source > 0) {
            REQUIRE(s.substr(0, boundaries[f.source - 1]).ends_with(s.substr(t, copy)));
        } else {
            REQUIRE(copy == 0);
        }
        REQUIRE(f.ext == input[t + copy]);
        for(std::size_t longer = copy + 1; t + longer < input.size(); ++longer) {
            for(std::size_t b : boundaries) REQUIRE_FALSE(s.substr(0, b).ends_with(s.substr(t, longer)));
        }
        t += f.len;
        boundaries.push_back(t);
    }
    REQUIRE(t == input.size());
}

} // namespace

TEST_CASE("running example") {
    auto const p = naive_parse(bytes("abaabaa$"));
    CHECK(p.n == 8);
    CHECK(phrase_lengths(p) == std::vector<std::size_t>{1, 1, 2, 4});
    CHECK(p.phrases == std::vector<Phrase>{{0, 1, 'a'}, {0, 1, 'b'}, {1, 2, 'a'}, {3, 4, '$'}});
}

TEST_CASE("small cases") {
    CHECK(naive_parse({}).phrases.empty());
    CHECK(naive_parse(bytes("b")).phrases == std::vector<Phrase>{{0, 1, 'b'}});
    CHECK(phrase_lengths(naive_parse(bytes("abab"))) == std::vector<std::size_t>{1, 1, 2});
    CHECK(naive_parse(bytes("aaaa")).phrases == std::vector<Phrase>{{0, 1, 'a'}, {1, 2, 'a'}, {0, 1, 'a'}});
    CHECK(naive_parse(bytes("aaaaa")).phrases == std::vector<Phrase>{{0, 1, 'a'}, {1, 2, 'a'}, {1, 2, 'a'}});
}

TEST_CASE("greedy maximality and validity") {
    for(std::size_t len = 1; len <= 10; ++len) {
        for(auto const& s : corpus::all_strings(len, 2)) {
            auto const p = naive_parse(s);
            check_greedy(s, p);
            REQUIRE(decode(p) == s);
        }
    }
    std::mt19937_64 rng(5);
    for(int k = 0; k < 200; ++k) {
        auto const s = corpus::random_bytes(1 + rng() % 120, rng(), 1 + rng() % 4);
        auto const p = naive_parse(s);
        check_greedy(s, p);
        REQUIRE(decode(p) == s);
    }
}
