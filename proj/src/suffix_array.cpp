#include <lzend/suffix_array.hpp>

#include <algorithm>
#include <limits>
#include <numeric>

namespace lzend {

namespace {

// comparison sort, used for tiny recursion levels
template<typename Idx>
std::vector<Idx> sort_suffixes_naive(std::vector<Idx> const& s) {
    Idx const n = static_cast<Idx>(s.size());
    std::vector<Idx> sa(s.size());
    std::iota(sa.begin(), sa.end(), Idx{0});
    std::sort(sa.begin(), sa.end(), [&](Idx a, Idx b) {
        return std::lexicographical_compare(s.begin() + a, s.begin() + n, s.begin() + b, s.begin() + n);
    });
    return sa;
}

// induced sorting over an integer alphabet [0, upper]
template<typename Idx>
std::vector<Idx> induced_sort(std::vector<Idx> const& s, Idx const upper) {
    Idx const n = static_cast<Idx>(s.size());
    if(n < 16) return sort_suffixes_naive(s);

    // stype[i]: suffix i is smaller than suffix i+1
    std::vector<bool> stype(n, false);
    for(Idx i = n - 2; i >= 0; --i) {
        stype[i] = s[i] == s[i + 1] ? stype[i + 1] : s[i] < s[i + 1];
    }

    // bucket_l[c]: first slot of bucket c; bucket_s[c]: first S-type slot of bucket c
    std::vector<Idx> bucket_l(upper + 2, 0), bucket_s(upper + 2, 0);
    for(Idx i = 0; i < n; ++i) {
        if(stype[i]) ++bucket_l[s[i] + 1];
        else ++bucket_s[s[i]];
    }
    for(Idx c = 0; c <= upper; ++c) {
        bucket_s[c] += bucket_l[c];
        bucket_l[c + 1] += bucket_s[c];
    }

    auto is_lms = [&](Idx i) { return i > 0 && stype[i] && !stype[i - 1]; };

    std::vector<Idx> sa(n);
    std::vector<Idx> head(upper + 2);
    auto induce = [&](std::vector<Idx> const& lms) {
        std::fill(sa.begin(), sa.end(), Idx{-1});

        std::copy(bucket_s.begin(), bucket_s.end(), head.begin());
        for(Idx const d : lms) sa[head[s[d]]++] = d;

        std::copy(bucket_l.begin(), bucket_l.end(), head.begin());
        sa[head[s[n - 1]]++] = n - 1;
        for(Idx i = 0; i < n; ++i) {
            Idx const v = sa[i];
            if(v >= 1 && !stype[v - 1]) sa[head[s[v - 1]]++] = v - 1;
        }

        std::copy(bucket_l.begin(), bucket_l.end(), head.begin());
        for(Idx i = n - 1; i >= 0; --i) {
            Idx const v = sa[i];
            if(v >= 1 && stype[v - 1]) sa[--head[s[v - 1] + 1]] = v - 1;
        }
    };

    std::vector<Idx> lms_rank(n, -1);
    std::vector<Idx> lms;
    for(Idx i = 1; i < n; ++i) {
        if(is_lms(i)) {
            lms_rank[i] = static_cast<Idx>(lms.size());
            lms.push_back(i);
        }
    }
    Idx const m = static_cast<Idx>(lms.size());

    induce(lms);
    if(m == 0) return sa;

    std::vector<Idx> sorted_lms;
    sorted_lms.reserve(m);
    for(Idx const v : sa) {
        if(lms_rank[v] != -1) sorted_lms.push_back(v);
    }

    // name LMS substrings; equal substrings share a name
    std::vector<Idx> reduced(m);
    Idx name = 0;
    reduced[lms_rank[sorted_lms[0]]] = 0;
    for(Idx k = 1; k < m; ++k) {
        Idx l = sorted_lms[k - 1], r = sorted_lms[k];
        Idx const end_l = lms_rank[l] + 1 < m ? lms[lms_rank[l] + 1] : n;
        Idx const end_r = lms_rank[r] + 1 < m ? lms[lms_rank[r] + 1] : n;
        bool same = end_l - l == end_r - r;
        if(same) {
            while(l < end_l && s[l] == s[r]) {
                ++l;
                ++r;
            }
            if(l == n || s[l] != s[r]) same = false;
        }
        if(!same) ++name;
        reduced[lms_rank[sorted_lms[k]]] = name;
    }

    std::vector<Idx> const reduced_sa = induced_sort(reduced, name);
    for(Idx k = 0; k < m; ++k) sorted_lms[k] = lms[reduced_sa[k]];
    induce(sorted_lms);
    return sa;
}

template<typename Idx>
std::vector<std::size_t> suffix_array_with(std::span<std::uint8_t const> text) {
    std::vector<Idx> s(text.begin(), text.end());
    std::vector<Idx> const sa = induced_sort(s, Idx{255});
    return std::vector<std::size_t>(sa.begin(), sa.end());
}

} // namespace

std::vector<std::size_t> build_suffix_array(std::span<std::uint8_t const> text) {
    if(text.size() < static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max())) {
        return suffix_array_with<std::int32_t>(text);
    }
    return suffix_array_with<std::int64_t>(text);
}

std::vector<std::size_t> build_lcp_array(std::span<std::uint8_t const> text,
                                         std::span<std::size_t const> sa) {
    std::size_t const n = text.size();
    std::vector<std::size_t> rank(n);
    for(std::size_t i = 0; i < n; ++i) rank[sa[i]] = i;

    std::vector<std::size_t> lcp(n, 0);
    std::size_t h = 0;
    for(std::size_t i = 0; i < n; ++i) {
        if(rank[i] == 0) {
            h = 0;
            continue;
        }
        std::size_t const j = sa[rank[i] - 1];
        while(i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
        lcp[rank[i]] = h;
        if(h > 0) --h;
    }
    return lcp;
}

} // namespace lzend
