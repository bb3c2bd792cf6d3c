#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <lzend/range_min.hpp>

namespace lzend {

// Static index over the reversed input.
//
// a_prime()[i] is the lexicographic rank of the reversed-input suffix that begins
// at reversed position n-i-1, i.e. the suffix that spells S[0..i] backwards. Ranks
// live in "lex-space"; the LCP array over that space answers longest common
// extension queries via range minima.
class TextIndex {
private:
    std::vector<std::size_t> a_prime_;
    RangeMin lcp_;

public:
    TextIndex() = default;

    // builds the index; the suffix array and the reversed text are not retained
    static TextIndex build(std::span<std::uint8_t const> input);

    std::size_t size() const { return a_prime_.size(); }
    std::vector<std::size_t> const& a_prime() const { return a_prime_; }
    std::vector<std::size_t> const& lcp() const { return lcp_.values(); }

    // lex rank of the reversed prefix ending at input position i
    std::size_t rank_of_prefix(std::size_t i) const { return a_prime_[i]; }

    std::size_t rmq(std::size_t x, std::size_t y) const { return lcp_.argmin(x, y); }

    // H[rmq(x, y)] for x <= y
    std::size_t lcp_range_min(std::size_t x, std::size_t y) const { return lcp_.min(x, y); }

    // longest common prefix of the reversed-input suffixes with lex ranks x != y
    std::size_t lce_lex(std::size_t x, std::size_t y) const;
};

} // namespace lzend
