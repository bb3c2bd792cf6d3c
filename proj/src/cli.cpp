#include <lzend/cli.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include <lzend/codec.hpp>
#include <lzend/corpus.hpp>
#include <lzend/parser.hpp>

namespace lzend::cli {

namespace {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if(!in) throw IoError("cannot open " + path);
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if(in.bad()) throw IoError("read failed: " + path);
    return data;
}

void write_output(std::string const& path, std::span<std::uint8_t const> data, std::ostream& out) {
    if(path.empty() || path == "-") {
        out.write(reinterpret_cast<char const*>(data.data()), static_cast<std::streamsize>(data.size()));
        out.flush();
        if(!out) throw IoError("write to standard output failed");
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if(!f) throw IoError("cannot create " + path);
    f.write(reinterpret_cast<char const*>(data.data()), static_cast<std::streamsize>(data.size()));
    if(!f) throw IoError("write failed: " + path);
}

std::size_t max_phrase_len(Parsing const& parsing) {
    std::size_t m = 0;
    for(auto const& f : parsing.phrases) m = std::max(m, f.len);
    return m;
}

std::string format_ratio(Parsing const& parsing) {
    double const r = parsing.n == 0 ? 0.0 : static_cast<double>(parsing.z()) / static_cast<double>(parsing.n);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", r);
    return buf;
}

struct Options {
    std::string input;
    std::string output;
    std::size_t max_len = 0; // 0 = uncapped
    bool merge_first = false;
    bool verify = false;
    bool encoded = false;
    std::size_t start = 0;
    std::size_t len = 0;
    std::string kind = "random";
    std::size_t size = 10u << 20;
    std::size_t period = 4096;
    std::uint64_t seed = 1;

    ParseConfig parse_config() const {
        ParseConfig c;
        if(max_len > 0) c.max_phrase_len = max_len;
        c.merge_first = merge_first;
        return c;
    }
};

void add_parse_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("-m,--max-phrase-len", opt.max_len, "Cap on phrase length (bounds extraction time)")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--merge-first", opt.merge_first, "Search merge candidates first (repetitive inputs)");
}

int do_encode(Options const& opt, std::ostream& out, std::ostream& err) {
    auto const input = read_file(opt.input);
    Parsing const parsing = parse(input, opt.parse_config());
    if(opt.verify && decode(parsing) != input) {
        err << "verification failed: decoded output differs from input\n";
        return exit_format;
    }
    write_output(opt.output, serialize(parsing), out);
    return exit_ok;
}

int do_decode(Options const& opt, std::ostream& out) {
    Parsing const parsing = deserialize(read_file(opt.input));
    write_output(opt.output, decode(parsing), out);
    return exit_ok;
}

int do_extract(Options const& opt, std::ostream& out) {
    Parsing const parsing = deserialize(read_file(opt.input));
    if(opt.start > parsing.n || opt.len > parsing.n - opt.start) {
        throw ValidationError("range [" + std::to_string(opt.start) + ", +" + std::to_string(opt.len) +
                              ") exceeds input length " + std::to_string(parsing.n));
    }
    PhraseBoundaries const bounds(parsing);
    write_output("-", extract(parsing, bounds, opt.start, opt.len), out);
    return exit_ok;
}

int do_stats(Options const& opt, std::ostream& out) {
    auto const data = read_file(opt.input);
    Parsing const parsing = opt.encoded ? deserialize(data) : parse(data, opt.parse_config());
    out << "input length n:   " << parsing.n << '\n'
        << "phrases z:        " << parsing.z() << '\n'
        << "ratio z/n:        " << format_ratio(parsing) << '\n'
        << "max phrase len:   " << max_phrase_len(parsing) << '\n'
        << stats_line(parsing) << '\n';
    return exit_ok;
}

int do_bench(Options const& opt, std::ostream& out) {
    std::vector<std::uint8_t> input;
    std::string label;
    if(!opt.input.empty()) {
        input = read_file(opt.input);
        label = opt.input;
    } else if(opt.kind == "random") {
        input = corpus::random_bytes(opt.size, opt.seed);
        label = "random";
    } else if(opt.kind == "periodic") {
        input = corpus::periodic(opt.size, opt.period, opt.seed);
        label = "periodic(period=" + std::to_string(opt.period) + ")";
    } else if(opt.kind == "runs") {
        input = corpus::run_heavy(opt.size, opt.seed);
        label = "runs";
    } else {
        input = corpus::fibonacci_word(opt.size);
        label = "fibonacci";
    }

    BenchResult const r = bench_parse(input, opt.parse_config());
    char ratio[32];
    std::snprintf(ratio, sizeof ratio, "%.6f", r.ratio());
    out << "input: " << label << (opt.merge_first ? " [merge-first]" : "") << '\n'
        << "index construction: " << r.index_seconds << " s\n"
        << "parsing:            " << r.parse_seconds << " s\n"
        << "n=" << r.n << " z=" << r.z << " ratio=" << ratio << " maxlen=" << r.max_len
        << " parse_seconds=" << r.parse_seconds << '\n';
    return exit_ok;
}

} // namespace

BenchResult bench_parse(std::span<std::uint8_t const> input, ParseConfig const& config) {
    using clock = std::chrono::steady_clock;
    BenchResult r;
    r.n = input.size();
    if(input.empty()) return r;

    auto const t0 = clock::now();
    TextIndex index = TextIndex::build(input);
    auto const t1 = clock::now();
    LzEndParser parser(input, std::move(index), config);
    while(!parser.done()) parser.step();
    auto const t2 = clock::now();

    r.index_seconds = std::chrono::duration<double>(t1 - t0).count();
    r.parse_seconds = std::chrono::duration<double>(t2 - t1).count();
    r.z = parser.phrases().size();
    for(auto const& f : parser.phrases()) r.max_len = std::max(r.max_len, f.len);
    return r;
}

std::string stats_line(Parsing const& parsing) {
    return "n=" + std::to_string(parsing.n) + " z=" + std::to_string(parsing.z()) + " ratio=" +
           format_ratio(parsing) + " maxlen=" + std::to_string(max_phrase_len(parsing));
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"LZ-End compressor"};
    app.require_subcommand(1);
    Options opt;

    auto* encode = app.add_subcommand("encode", "Parse a file and write its LZE1 encoding");
    encode->add_option("input", opt.input, "Input file")->required();
    encode->add_option("-o,--output", opt.output, "Output file (default: standard output)");
    add_parse_flags(encode, opt);
    encode->add_flag("--verify", opt.verify, "Decode in memory and compare before writing");

    auto* decode_cmd = app.add_subcommand("decode", "Restore the original bytes from an LZE1 file");
    decode_cmd->add_option("input", opt.input, "LZE1 file")->required();
    decode_cmd->add_option("-o,--output", opt.output, "Output file (default: standard output)");

    auto* extract_cmd = app.add_subcommand("extract", "Print a byte range of an LZE1 file's original");
    extract_cmd->add_option("input", opt.input, "LZE1 file")->required();
    extract_cmd->add_option("--start", opt.start, "First position")->required();
    extract_cmd->add_option("--len", opt.len, "Number of bytes")->required();

    auto* stats = app.add_subcommand("stats", "Print n, z, z/n and the longest phrase length");
    stats->add_option("input", opt.input, "Input file")->required();
    stats->add_flag("--encoded", opt.encoded, "Input is an LZE1 file rather than raw bytes");
    add_parse_flags(stats, opt);

    auto* bench = app.add_subcommand("bench", "Time the parsing phase on a generated or given input");
    bench->add_option("--input", opt.input, "Input file (overrides --kind)");
    bench->add_option("--kind", opt.kind, "Generated corpus")
        ->check(CLI::IsMember({"random", "periodic", "runs", "fibonacci"}));
    bench->add_option("--size", opt.size, "Generated corpus length in bytes");
    bench->add_option("--period", opt.period, "Period for --kind periodic")->check(CLI::PositiveNumber);
    bench->add_option("--seed", opt.seed, "Generator seed");
    add_parse_flags(bench, opt);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch(CLI::ParseError const& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }

    try {
        if(encode->parsed()) return do_encode(opt, out, err);
        if(decode_cmd->parsed()) return do_decode(opt, out);
        if(extract_cmd->parsed()) return do_extract(opt, out);
        if(stats->parsed()) return do_stats(opt, out);
        return do_bench(opt, out);
    } catch(IoError const& e) {
        err << "I/O error: " << e.what() << '\n';
        return exit_io;
    } catch(FormatError const& e) {
        err << "format error: " << e.what() << '\n';
        return exit_format;
    } catch(IntegrityError const& e) {
        err << "integrity error: " << e.what() << '\n';
        return exit_format;
    } catch(ValidationError const& e) {
        err << "invalid request: " << e.what() << '\n';
        return exit_format;
    }
}

} // namespace lzend::cli
