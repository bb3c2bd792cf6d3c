#include <lzend/parser.hpp>

#include <algorithm>
#include <stdexcept>

namespace lzend {

LzEndParser::LzEndParser(std::span<std::uint8_t const> input, ParseConfig config)
    : LzEndParser(input, TextIndex::build(input), config) {}

LzEndParser::LzEndParser(std::span<std::uint8_t const> input, TextIndex index, ParseConfig config)
    : input_(input), config_(config), index_(std::move(index)) {
    if(config_.max_phrase_len && *config_.max_phrase_len == 0) {
        throw std::invalid_argument("max_phrase_len must be at least 1");
    }
    if(index_.size() != input_.size()) throw std::invalid_argument("index does not match input");
    phrases_.push_back(Phrase{0, 0, 0});
}

bool LzEndParser::extension_allowed() const {
    return !config_.max_phrase_len || len_of(state_.z) < *config_.max_phrase_len;
}

bool LzEndParser::merge_allowed() const {
    return !config_.max_phrase_len || len_of(state_.z) + len_of(state_.z - 1) < *config_.max_phrase_len;
}

SourceCandidate LzEndParser::lex_smaller_phrase(std::size_t probe) const {
    if(probe == 0) return {};
    auto const e = dict_.predecessor(probe - 1);
    if(!e) return {};
    return {e->key, e->value, index_.lcp_range_min(e->key + 1, probe)};
}

SourceCandidate LzEndParser::lex_greater_phrase(std::size_t probe) const {
    if(probe + 1 >= index_.size()) return {};
    auto const e = dict_.successor(probe + 1);
    if(!e) return {};
    return {e->key, e->value, index_.lcp_range_min(probe + 1, e->key)};
}

void LzEndParser::begin_step() {
    state_.i = next_;
    state_.i_lex = index_.rank_of_prefix(next_ - 1);
    state_.j_lex = state_.i_lex;
    state_.cand_extend.reset();
    state_.cand_merge.reset();
}

void LzEndParser::find_copy_source(Direction dir) {
    if(!extension_allowed()) return;

    auto query = [&](std::size_t probe) {
        ++stats_.dict_queries;
        return dir == Direction::smaller ? lex_smaller_phrase(probe) : lex_greater_phrase(probe);
    };

    std::size_t const z = state_.z;
    std::size_t const len_z = len_of(z);
    SourceCandidate const c = query(state_.i_lex);
    state_.j_lex = c.lex_pos;
    if(!c.found() || c.copy_len < len_z) return;
    state_.cand_extend = c.phrase;

    if(state_.i <= len_z || !merge_allowed()) return;
    std::size_t const need = len_z + len_of(z - 1);
    if(c.phrase == z - 1) {
        // f_{z-1} cannot source its own merge; look one boundary further out
        SourceCandidate const further = query(c.lex_pos);
        state_.j_lex = further.lex_pos;
        if(further.found() && std::min(c.copy_len, further.copy_len) >= need) state_.cand_merge = further.phrase;
    } else if(c.copy_len >= need) {
        state_.cand_merge = c.phrase;
    }
}

// Removes f_{z-1}'s boundary up front so the nearest boundaries on either side are
// merge candidates, then falls back to the extension search. Produces the same
// phrases as the default search order.
void LzEndParser::search_merge_first() {
    std::size_t const z = state_.z;
    if(z < 2 || !extension_allowed() || !merge_allowed()) {
        find_copy_source(Direction::smaller);
        find_copy_source(Direction::greater);
        return;
    }

    std::size_t const len_z = len_of(z);
    std::size_t const need = len_z + len_of(z - 1);
    std::size_t const prev_key = index_.rank_of_prefix(state_.i - len_z - 1);
    std::size_t const i_lex = state_.i_lex;

    dict_.remove(prev_key);
    ++stats_.dict_removes;
    pending_removed_ = true;

    stats_.dict_queries += 1;
    SourceCandidate const left = lex_smaller_phrase(i_lex);
    if(left.found() && left.copy_len >= need) {
        state_.j_lex = left.lex_pos;
        state_.cand_extend = left.phrase;
        state_.cand_merge = left.phrase;
        return;
    }
    stats_.dict_queries += 1;
    SourceCandidate const right = lex_greater_phrase(i_lex);
    if(right.found() && right.copy_len >= need) {
        state_.j_lex = right.lex_pos;
        state_.cand_extend = right.phrase;
        state_.cand_merge = right.phrase;
        return;
    }

    dict_.insert(prev_key, z - 1);
    ++stats_.dict_inserts;
    pending_removed_ = false;

    // nearest boundary per side now including f_{z-1}; greater side wins ties in
    // the same way the default search overwrites the extension candidate
    auto nearest = [&](SourceCandidate const& other, bool smaller_side) -> SourceCandidate {
        bool const on_side = smaller_side ? prev_key < i_lex : prev_key > i_lex;
        if(!on_side) return other;
        bool const closer = !other.found() || (smaller_side ? prev_key > other.lex_pos : prev_key < other.lex_pos);
        if(!closer) return other;
        std::size_t const copy = smaller_side ? index_.lcp_range_min(prev_key + 1, i_lex)
                                              : index_.lcp_range_min(i_lex + 1, prev_key);
        return {prev_key, z - 1, copy};
    };
    for(auto const& c : {nearest(left, true), nearest(right, false)}) {
        if(c.found() && c.copy_len >= len_z) {
            state_.j_lex = c.lex_pos;
            state_.cand_extend = c.phrase;
        }
    }
}

StepAction LzEndParser::apply_case() {
    std::size_t const i = state_.i;
    std::uint8_t const alpha = input_[i];
    std::size_t& z = state_.z;
    StepAction action;

    if(state_.cand_merge) {
        std::size_t const len_z = len_of(z);
        if(!pending_removed_) {
            dict_.remove(index_.rank_of_prefix(i - len_z - 1));
            ++stats_.dict_removes;
        }
        phrases_[z - 1] = Phrase{*state_.cand_merge, len_z + len_of(z - 1) + 1, alpha};
        phrases_.pop_back();
        --z;
        ++stats_.merges;
        action = StepAction::merge;
    } else if(state_.cand_extend) {
        phrases_[z] = Phrase{*state_.cand_extend, len_of(z) + 1, alpha};
        ++stats_.extends;
        action = StepAction::extend;
    } else {
        dict_.insert(state_.i_lex, z);
        ++stats_.dict_inserts;
        phrases_.push_back(Phrase{0, 1, alpha});
        ++z;
        ++stats_.begins;
        action = StepAction::begin;
    }
    pending_removed_ = false;
    stats_.max_dict_size = std::max(stats_.max_dict_size, dict_.size());
    ++next_;
    return action;
}

StepAction LzEndParser::step() {
    if(done()) throw std::logic_error("LzEndParser::step past end of input");
    if(next_ == 0) {
        phrases_.push_back(Phrase{0, 1, input_[0]});
        state_.z = 1;
        ++stats_.begins;
        ++next_;
        return StepAction::begin;
    }

    begin_step();
    if(config_.merge_first) {
        search_merge_first();
    } else {
        find_copy_source(Direction::smaller);
        if(!state_.cand_extend || !state_.cand_merge) find_copy_source(Direction::greater);
    }
    return apply_case();
}

Parsing LzEndParser::run() {
    while(!done()) step();
    Parsing result;
    result.n = input_.size();
    result.phrases.assign(phrases_.begin() + 1, phrases_.end());
    return result;
}

Parsing parse(std::span<std::uint8_t const> input, ParseConfig const& config) {
    if(config.max_phrase_len && *config.max_phrase_len == 0) {
        throw std::invalid_argument("max_phrase_len must be at least 1");
    }
    if(input.empty()) return {};
    return LzEndParser(input, config).run();
}

} // namespace lzend
