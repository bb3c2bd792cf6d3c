#include <lzend/corpus.hpp>

#include <random>

namespace lzend::corpus {

std::vector<std::uint8_t> random_bytes(std::size_t n, std::uint64_t seed, unsigned alphabet) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> dist(0, alphabet - 1);
    std::vector<std::uint8_t> out(n);
    for(auto& c : out) c = static_cast<std::uint8_t>(dist(rng));
    return out;
}

std::vector<std::uint8_t> periodic(std::size_t n, std::size_t period, std::uint64_t seed) {
    auto const w = random_bytes(period, seed);
    std::vector<std::uint8_t> out(n);
    for(std::size_t i = 0; i < n; ++i) out[i] = w[i % period];
    return out;
}

std::vector<std::uint8_t> run_heavy(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> byte(0, 255);
    std::geometric_distribution<std::size_t> run(0.05);
    std::vector<std::uint8_t> out;
    out.reserve(n);
    while(out.size() < n) {
        auto const c = static_cast<std::uint8_t>(byte(rng));
        std::size_t const r = std::min(n - out.size(), run(rng) + 1);
        out.insert(out.end(), r, c);
    }
    return out;
}

std::vector<std::uint8_t> fibonacci_word(std::size_t n) {
    std::vector<std::uint8_t> prev{'a'}, cur{'a', 'b'};
    while(cur.size() < n) {
        std::vector<std::uint8_t> next = cur;
        next.insert(next.end(), prev.begin(), prev.end());
        prev = std::move(cur);
        cur = std::move(next);
    }
    if(n < 2) cur = prev;
    cur.resize(n);
    return cur;
}

std::vector<std::vector<std::uint8_t>> all_strings(std::size_t length, unsigned sigma) {
    std::vector<std::vector<std::uint8_t>> out;
    std::vector<std::uint8_t> s(length, 'a');
    while(true) {
        out.push_back(s);
        std::size_t k = length;
        while(k > 0 && s[k - 1] == 'a' + sigma - 1) s[--k] = 'a';
        if(k == 0) break;
        ++s[k - 1];
    }
    return out;
}

} // namespace lzend::corpus
