#include <lzend/naive_parser.hpp>

#include <algorithm>
#include <vector>

namespace lzend {

Parsing naive_parse(std::span<std::uint8_t const> input) {
    std::size_t const n = input.size();
    Parsing result;
    result.n = n;

    std::vector<std::size_t> boundaries; // boundaries[p-1] = |f_1 .. f_p|
    std::size_t t = 0;
    while(t < n) {
        std::size_t best_len = 0, best_src = 0;
        for(std::size_t p = 1; p <= boundaries.size(); ++p) {
            std::size_t const b = boundaries[p - 1];
            // the copy must leave room for the extension byte
            for(std::size_t l = std::min(b, n - t - 1); l > best_len; --l) {
                if(std::equal(input.begin() + (b - l), input.begin() + b, input.begin() + t)) {
                    best_len = l;
                    best_src = p;
                    break;
                }
            }
        }
        result.phrases.push_back(Phrase{best_src, best_len + 1, input[t + best_len]});
        t += best_len + 1;
        boundaries.push_back(t);
    }
    return result;
}

} // namespace lzend
