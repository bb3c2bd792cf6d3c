#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <lzend/boundary_dict.hpp>
#include <lzend/phrase.hpp>
#include <lzend/text_index.hpp>

namespace lzend {

enum class StepAction { begin, extend, merge };

enum class Direction { smaller, greater };

// Result of a directional boundary search. phrase == 0 means no boundary was found.
struct SourceCandidate {
    std::size_t lex_pos = 0;
    std::size_t phrase = 0;
    std::size_t copy_len = 0;

    bool found() const { return phrase != 0; }
    bool operator==(SourceCandidate const&) const = default;
};

struct ParseState {
    std::size_t i = 0;     // position being parsed
    std::size_t i_lex = 0; // lex rank of the prefix ending at i-1
    std::size_t j_lex = 0; // last probed boundary
    std::optional<std::size_t> cand_extend;
    std::optional<std::size_t> cand_merge;
    std::size_t z = 0;
};

struct ParseStats {
    std::size_t begins = 0;
    std::size_t extends = 0;
    std::size_t merges = 0;
    std::size_t dict_inserts = 0;
    std::size_t dict_removes = 0;
    std::size_t dict_queries = 0;
    std::size_t max_dict_size = 0;
};

// Left-to-right LZ-End parser.
//
// Each input byte either merges the two most recent phrases, extends the most
// recent one, or begins a new phrase. Phrase boundaries are kept in a boundary
// dictionary keyed by lex rank of the reversed prefix; the most recent phrase is
// only marked once the next phrase begins.
class LzEndParser {
private:
    std::span<std::uint8_t const> input_;
    ParseConfig config_;
    TextIndex index_;
    BoundaryDict dict_;
    std::vector<Phrase> phrases_; // phrases_[0] is the empty phrase f_0
    ParseState state_;
    ParseStats stats_;
    std::size_t next_ = 0;
    bool pending_removed_ = false; // f_{z-1} already unmarked by a merge-first search

    std::size_t len_of(std::size_t p) const { return phrases_[p].len; }
    bool extension_allowed() const;
    bool merge_allowed() const;
    void search_merge_first();

public:
    LzEndParser(std::span<std::uint8_t const> input, ParseConfig config = {});

    // construction with a prebuilt index over the same input
    LzEndParser(std::span<std::uint8_t const> input, TextIndex index, ParseConfig config = {});

    bool done() const { return next_ >= input_.size(); }

    // next position that step() will consume
    std::size_t position() const { return next_; }

    // consumes one input byte
    StepAction step();

    // the three phases of step() for positions i >= 1, exposed for tracing
    void begin_step();
    void find_copy_source(Direction dir);
    StepAction apply_case();

    SourceCandidate lex_smaller_phrase(std::size_t probe) const;
    SourceCandidate lex_greater_phrase(std::size_t probe) const;

    ParseState const& state() const { return state_; }
    ParseStats const& stats() const { return stats_; }
    BoundaryDict const& dict() const { return dict_; }
    TextIndex const& index() const { return index_; }
    ParseConfig const& config() const { return config_; }

    // f_1 .. f_z as of now
    std::span<Phrase const> phrases() const { return std::span(phrases_).subspan(1); }

    // runs to completion
    Parsing run();
};

Parsing parse(std::span<std::uint8_t const> input, ParseConfig const& config = {});

} // namespace lzend
