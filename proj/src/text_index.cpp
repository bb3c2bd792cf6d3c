#include <lzend/text_index.hpp>

#include <algorithm>
#include <stdexcept>

#include <lzend/suffix_array.hpp>

namespace lzend {

TextIndex TextIndex::build(std::span<std::uint8_t const> input) {
    TextIndex idx;
    std::size_t const n = input.size();
    if(n == 0) return idx;

    std::vector<std::size_t> lcp;
    {
        std::vector<std::uint8_t> const reversed(input.rbegin(), input.rend());
        std::vector<std::size_t> const sa = build_suffix_array(reversed);
        lcp = build_lcp_array(reversed, sa);

        idx.a_prime_.resize(n);
        for(std::size_t i = 0; i < n; ++i) idx.a_prime_[n - sa[i] - 1] = i;
    }
    idx.lcp_ = RangeMin(std::move(lcp));
    return idx;
}

std::size_t TextIndex::lce_lex(std::size_t x, std::size_t y) const {
    if(x == y) throw std::invalid_argument("lce_lex: ranks must differ");
    if(x >= size() || y >= size()) throw std::out_of_range("lce_lex: rank out of range");
    return lcp_range_min(std::min(x, y) + 1, std::max(x, y));
}

} // namespace lzend
