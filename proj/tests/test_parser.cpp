#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include <lzend/codec.hpp>
#include <lzend/corpus.hpp>
#include <lzend/naive_parser.hpp>
#include <lzend/parser.hpp>

#include "test_util.hpp"

using namespace lzend;
using lzend::testing::bytes;
using lzend::testing::phrase_lengths;

namespace {

std::map<std::size_t, std::size_t> dict_items(BoundaryDict const& d) {
    std::map<std::size_t, std::size_t> out;
    d.for_each([&](std::size_t k, std::size_t v) { out.emplace(k, v); });
    return out;
}

// steps through the input, checking the per-step invariants
Parsing parse_checked(std::vector<std::uint8_t> const& s, ParseConfig config = {}) {
    if(s.empty()) return {};
    LzEndParser parser(s, config);
    auto const& a_prime = parser.index().a_prime();
    while(!parser.done()) {
        std::size_t const z_before = parser.phrases().size();
        StepAction const action = parser.step();
        std::size_t const z_after = parser.phrases().size();
        auto const& st = parser.state();

        switch(action) {
        case StepAction::begin:
            REQUIRE(z_after == z_before + 1);
            break;
        case StepAction::extend:
            REQUIRE(z_after == z_before);
            REQUIRE(st.cand_extend);
            REQUIRE(*st.cand_extend >= 1);
            REQUIRE(*st.cand_extend <= z_before - 1);
            break;
        case StepAction::merge:
            REQUIRE(z_after == z_before - 1);
            REQUIRE(st.cand_merge);
            REQUIRE(*st.cand_merge >= 1);
            REQUIRE(*st.cand_merge <= z_before - 2);
            break;
        }
        REQUIRE(st.z == z_after);

        // boundaries of f_1 .. f_{z-1} are marked, f_z is not
        std::map<std::size_t, std::size_t> expected;
        std::size_t end = 0;
        auto const ph = parser.phrases();
        for(std::size_t p = 1; p < ph.size(); ++p) {
            end += ph[p - 1].len;
            expected.emplace(a_prime[end - 1], p);
        }
        REQUIRE(dict_items(parser.dict()) == expected);
    }
    return parser.run();
}

std::vector<std::vector<std::uint8_t>> small_corpus() {
    std::vector<std::vector<std::uint8_t>> out;
    for(std::size_t len = 1; len <= 10; ++len) {
        for(auto& s : corpus::all_strings(len, 2)) out.push_back(std::move(s));
    }
    for(std::size_t len = 1; len <= 6; ++len) {
        for(auto& s : corpus::all_strings(len, 3)) out.push_back(std::move(s));
    }
    std::mt19937_64 rng(21);
    for(int k = 0; k < 300; ++k) out.push_back(corpus::random_bytes(1 + rng() % 256, rng(), 1 + rng() % 256));
    for(int k = 0; k < 100; ++k) out.push_back(corpus::random_bytes(1 + rng() % 256, rng(), 2));
    return out;
}

} // namespace

TEST_CASE("running example") {
    auto const s = bytes("abaabaa$");
    Parsing const p = parse(s);
    CHECK(p.n == 8);
    CHECK(p.phrases == std::vector<Phrase>{{0, 1, 'a'}, {0, 1, 'b'}, {1, 2, 'a'}, {3, 4, '$'}});
}

TEST_CASE("step trace of the running example") {
    struct Row {
        StepAction action;
        std::size_t z;
        Phrase last;
    };
    std::vector<Row> const expected{
        {StepAction::begin, 1, {0, 1, 'a'}},  {StepAction::begin, 2, {0, 1, 'b'}},
        {StepAction::begin, 3, {0, 1, 'a'}},  {StepAction::extend, 3, {1, 2, 'a'}},
        {StepAction::begin, 4, {0, 1, 'b'}},  {StepAction::extend, 4, {2, 2, 'a'}},
        {StepAction::begin, 5, {0, 1, 'a'}},  {StepAction::merge, 4, {3, 4, '$'}},
    };
    auto const s = bytes("abaabaa$");
    for(bool merge_first : {false, true}) {
        LzEndParser parser(s, ParseConfig{std::nullopt, merge_first});
        for(std::size_t i = 0; i < expected.size(); ++i) {
            CAPTURE(i);
            REQUIRE(parser.position() == i);
            CHECK(parser.step() == expected[i].action);
            REQUIRE(parser.phrases().size() == expected[i].z);
            CHECK(parser.phrases().back() == expected[i].last);
        }
        CHECK(parser.done());
    }
}

TEST_CASE("candidate search right before the final merge") {
    auto const s = bytes("abaabaa$");
    LzEndParser parser(s);
    while(parser.position() < 7) parser.step();

    CHECK(dict_items(parser.dict()) == std::map<std::size_t, std::size_t>{{1, 1}, {2, 3}, {5, 4}, {6, 2}});

    parser.begin_step();
    CHECK(parser.state().i == 7);
    CHECK(parser.state().i_lex == 3);

    CHECK(parser.lex_smaller_phrase(3) == SourceCandidate{2, 3, 4});
    CHECK(parser.lex_greater_phrase(3) == SourceCandidate{5, 4, 1});
    CHECK(parser.lex_smaller_phrase(2) == SourceCandidate{1, 1, 1});
    CHECK(parser.lex_smaller_phrase(0) == SourceCandidate{});
    CHECK(parser.lex_greater_phrase(7) == SourceCandidate{});

    parser.find_copy_source(Direction::smaller);
    CHECK(parser.state().cand_extend == 3);
    CHECK(parser.state().cand_merge == 3);

    CHECK(parser.apply_case() == StepAction::merge);
    CHECK(dict_items(parser.dict()) == std::map<std::size_t, std::size_t>{{1, 1}, {2, 3}, {6, 2}});
    CHECK(parser.phrases().back() == Phrase{3, 4, '$'});
}

TEST_CASE("lex_greater_phrase on a singleton dictionary") {
    // after "ab" the dict holds only f_1's boundary
    auto const s = bytes("abab");
    LzEndParser parser(s);
    parser.step();
    parser.step();
    auto const& a = parser.index().a_prime();
    REQUIRE(parser.dict().size() == 1);
    std::size_t const key = a[0];
    for(std::size_t probe = 0; probe < key; ++probe) {
        CHECK(parser.lex_greater_phrase(probe) == SourceCandidate{key, 1, parser.index().lce_lex(probe, key)});
    }
}

TEST_CASE("first position has no candidates") {
    auto const s = bytes("abcabc");
    LzEndParser parser(s);
    parser.step();
    parser.begin_step();
    CHECK(parser.state().i == 1);
    parser.find_copy_source(Direction::smaller);
    parser.find_copy_source(Direction::greater);
    CHECK_FALSE(parser.state().cand_extend);
    CHECK_FALSE(parser.state().cand_merge);
}

TEST_CASE("re-query past f_{z-1} that cannot supply a merge") {
    auto const s = bytes("aaaaa");
    LzEndParser parser(s);
    while(parser.position() < 4) parser.step();
    // f_1 = a, f_2 = aa, f_3 = a; the nearest boundary is f_2's, the one past it
    // (f_1's) shares only one byte, too short to merge f_2 f_3 a
    parser.begin_step();
    CHECK(parser.lex_smaller_phrase(parser.state().i_lex).phrase == 2);
    parser.find_copy_source(Direction::smaller);
    CHECK(parser.state().cand_extend == 2);
    CHECK_FALSE(parser.state().cand_merge);
    CHECK(parser.apply_case() == StepAction::extend);

    Parsing const p = parse(s);
    CHECK(phrase_lengths(p) == std::vector<std::size_t>{1, 2, 2});
    CHECK(decode(p) == s);
}

TEST_CASE("small inputs") {
    CHECK(parse({}).phrases.empty());
    CHECK(parse({}).n == 0);
    CHECK(parse(bytes("a")).phrases == std::vector<Phrase>{{0, 1, 'a'}});
    CHECK(parse(bytes("aaaa")).phrases == std::vector<Phrase>{{0, 1, 'a'}, {1, 2, 'a'}, {0, 1, 'a'}});
    CHECK(phrase_lengths(parse(bytes("aaaaa"))) == std::vector<std::size_t>{1, 2, 2});

    LzEndParser empty(std::span<std::uint8_t const>{});
    CHECK(empty.done());
    CHECK_THROWS_AS(empty.step(), std::logic_error);
    CHECK_THROWS_AS(parse(bytes("ab"), ParseConfig{0, false}), std::invalid_argument);
}

TEST_CASE("cap of one byte per phrase") {
    Parsing const p = parse(bytes("abaabaa$"), ParseConfig{1, false});
    REQUIRE(p.z() == 8);
    for(std::size_t i = 0; i < 8; ++i) CHECK(p.phrases[i] == Phrase{0, 1, static_cast<std::uint8_t>("abaabaa$"[i])});
}

TEST_CASE("matches the greedy oracle and keeps the lazy marking invariant") {
    for(auto const& s : small_corpus()) {
        Parsing const p = parse_checked(s);
        Parsing const oracle = naive_parse(s);
        REQUIRE(phrase_lengths(p) == phrase_lengths(oracle));
        REQUIRE(decode(p) == s);
    }
}

TEST_CASE("merge-first produces identical phrases") {
    for(auto const& s : small_corpus()) {
        Parsing const a = parse(s);
        Parsing const b = parse_checked(s, ParseConfig{std::nullopt, true});
        REQUIRE(a == b);
    }
    for(std::size_t n : {1000, 5000}) {
        for(auto const& s : {corpus::fibonacci_word(n), corpus::periodic(n, 13, 1), corpus::run_heavy(n, 2)}) {
            REQUIRE(parse(s) == parse(s, ParseConfig{std::nullopt, true}));
        }
    }
}

TEST_CASE("phrase length cap") {
    std::mt19937_64 rng(31);
    for(int k = 0; k < 200; ++k) {
        auto const s = corpus::random_bytes(1 + rng() % 400, rng(), 1 + rng() % 4);
        Parsing const uncapped = parse(s);
        for(std::size_t h : {1, 2, 4, 8, 64}) {
            for(bool merge_first : {false, true}) {
                Parsing const p = parse_checked(s, ParseConfig{h, merge_first});
                for(auto const& f : p.phrases) REQUIRE(f.len <= h);
                REQUIRE(decode(p) == s);
                if(h == 1) REQUIRE(p.z() == s.size());
            }
        }
        REQUIRE(parse(s, ParseConfig{s.size(), false}) == uncapped);
        REQUIRE(parse(s, ParseConfig{s.size() + 5, true}) == uncapped);
    }
    auto const per = corpus::periodic(3000, 5, 9);
    for(std::size_t h : {2, 8, 64}) {
        Parsing const p = parse(per, ParseConfig{h, false});
        std::size_t longest = 0;
        for(auto const& f : p.phrases) longest = std::max(longest, f.len);
        CHECK(longest == h);
        CHECK(p == parse(per, ParseConfig{h, true}));
    }
}

TEST_CASE("statistics account for every step") {
    auto const s = corpus::fibonacci_word(4000);
    LzEndParser parser(s);
    Parsing const p = parser.run();
    auto const& st = parser.stats();
    CHECK(st.begins + st.extends + st.merges == s.size());
    CHECK(st.begins - st.merges == p.z());
    CHECK(st.dict_inserts - st.dict_removes == p.z() - 1);
    CHECK(st.max_dict_size <= p.z() + st.merges);
}
