#include <lzend/codec.hpp>

#include <algorithm>
#include <cstring>
#include <vector>

namespace lzend {

namespace {

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for(int b = 0; b < 8; ++b) out.push_back(static_cast<std::uint8_t>(v >> (8 * b)));
}

std::uint64_t get_u64(std::span<std::uint8_t const> bytes, std::size_t at) {
    std::uint64_t v = 0;
    for(int b = 0; b < 8; ++b) v |= std::uint64_t{bytes[at + b]} << (8 * b);
    return v;
}

} // namespace

std::vector<std::uint8_t> serialize(Parsing const& parsing) {
    std::vector<std::uint8_t> out;
    out.reserve(header_size + record_size * parsing.z());
    out.insert(out.end(), std::begin(format_magic), std::end(format_magic));
    put_u64(out, parsing.n);
    put_u64(out, parsing.z());
    for(auto const& f : parsing.phrases) {
        put_u64(out, f.source);
        put_u64(out, f.len);
        out.push_back(f.ext);
    }
    return out;
}

Parsing deserialize(std::span<std::uint8_t const> bytes) {
    if(bytes.size() >= 4 && std::memcmp(bytes.data(), format_magic, 4) != 0) {
        throw FormatError(FormatErrorKind::bad_magic, "not an LZE1 stream");
    }
    if(bytes.size() < header_size) throw FormatError(FormatErrorKind::truncated, "truncated header");

    Parsing parsing;
    parsing.n = get_u64(bytes, 4);
    std::uint64_t const z = get_u64(bytes, 12);
    std::size_t const available = (bytes.size() - header_size) / record_size;
    if(z > available) throw FormatError(FormatErrorKind::truncated, "truncated phrase records");
    if(bytes.size() != header_size + z * record_size) {
        throw FormatError(FormatErrorKind::trailing_data, "trailing bytes after phrase records");
    }

    parsing.phrases.resize(z);
    std::uint64_t total = 0;
    for(std::size_t k = 0; k < z; ++k) {
        std::size_t const at = header_size + k * record_size;
        Phrase& f = parsing.phrases[k];
        f.source = get_u64(bytes, at);
        f.len = get_u64(bytes, at + 8);
        f.ext = bytes[at + 16];
        if(f.source >= k + 1) throw FormatError(FormatErrorKind::invalid_source, "source phrase not before phrase");
        if(f.len == 0 || (f.source == 0 && f.len != 1)) {
            throw FormatError(FormatErrorKind::invalid_phrase, "invalid phrase length");
        }
        if(f.len > parsing.n - total) {
            throw FormatError(FormatErrorKind::length_mismatch, "phrase lengths exceed n");
        }
        total += f.len;
    }
    if(total != parsing.n) throw FormatError(FormatErrorKind::length_mismatch, "phrase lengths do not sum to n");
    return parsing;
}

std::vector<std::uint8_t> decode(Parsing const& parsing) {
    std::vector<std::uint8_t> out;
    out.reserve(parsing.n);
    std::vector<std::size_t> ends; // ends[p-1] = |f_1 .. f_p|
    ends.reserve(parsing.z());
    for(std::size_t k = 0; k < parsing.z(); ++k) {
        Phrase const& f = parsing.phrases[k];
        if(f.len == 0) throw IntegrityError("zero-length phrase");
        if(f.source > k) throw IntegrityError("source phrase not before phrase");
        std::size_t const copy = f.len - 1;
        std::size_t const boundary = f.source == 0 ? 0 : ends[f.source - 1];
        if(copy > boundary) throw IntegrityError("copy exceeds source prefix");
        if(out.size() + f.len > parsing.n) throw IntegrityError("phrases exceed declared length");
        // the copy ends at or before the current end, so it never reads bytes it writes
        for(std::size_t q = boundary - copy; q < boundary; ++q) out.push_back(out[q]);
        out.push_back(f.ext);
        ends.push_back(out.size());
    }
    if(out.size() != parsing.n) throw IntegrityError("phrases do not cover declared length");
    return out;
}

PhraseBoundaries::PhraseBoundaries(Parsing const& parsing) {
    ends_.reserve(parsing.z());
    std::size_t end = 0;
    for(auto const& f : parsing.phrases) {
        end += f.len;
        ends_.push_back(end - 1);
    }
}

std::size_t PhraseBoundaries::phrase_at(std::size_t pos) const {
    return std::lower_bound(ends_.begin(), ends_.end(), pos) - ends_.begin();
}

std::vector<std::uint8_t> extract(Parsing const& parsing, PhraseBoundaries const& bounds, std::size_t start,
                                  std::size_t len, ExtractStats* stats) {
    if(start > parsing.n || len > parsing.n - start) throw std::out_of_range("extract range exceeds input");
    std::vector<std::uint8_t> out(len);

    struct Segment {
        std::size_t pos;    // text position
        std::size_t len;
        std::size_t dest;   // offset into out
        std::size_t depth;
    };
    std::vector<Segment> work;
    if(len > 0) work.push_back({start, len, 0, 0});

    auto const& ends = bounds.ends();
    ExtractStats local;
    while(!work.empty()) {
        Segment seg = work.back();
        work.pop_back();
        ++local.segments;
        local.max_depth = std::max(local.max_depth, seg.depth);

        while(seg.len > 0) {
            std::size_t const k = bounds.phrase_at(seg.pos);
            Phrase const& f = parsing.phrases[k];
            std::size_t const phrase_end = ends[k];
            std::size_t const take = std::min(seg.len, phrase_end - seg.pos + 1);
            std::size_t copy_take = take;
            if(seg.pos + take - 1 == phrase_end) {
                out[seg.dest + take - 1] = f.ext;
                --copy_take;
            }
            if(copy_take > 0) {
                // copy part of f ends right before phrase_end and mirrors the bytes
                // ending at the boundary of f.source
                std::size_t const src_end = ends[f.source - 1];
                std::size_t const src_pos = src_end - (phrase_end - 1 - seg.pos);
                work.push_back({src_pos, copy_take, seg.dest, seg.depth + 1});
            }
            seg.pos += take;
            seg.dest += take;
            seg.len -= take;
        }
    }
    if(stats) *stats = local;
    return out;
}

} // namespace lzend
