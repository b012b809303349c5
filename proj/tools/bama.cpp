#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bama/bench.hpp"
#include "bama/corpus.hpp"
#include "bama/errors.hpp"
#include "bama/pipeline.hpp"

namespace {

std::vector<std::uint8_t> read_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw bama::config_error("cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad())
        throw bama::config_error("cannot read " + path);
    return bytes;
}

void write_bytes(const std::string& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw bama::config_error("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw bama::config_error("cannot write " + path);
}

void emit_text(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::trunc);
    if (!out)
        throw bama::config_error("cannot open " + out_path + " for writing");
    out << text;
    if (!out)
        throw bama::config_error("cannot write " + out_path);
}

// "start,step,count" with an optional ",jitter" tail.
bama::ApComponent parse_component(const std::string& text) {
    long long start = 0, step = 0, count = 0;
    double jitter = 0.0;
    char extra = 0;
    int n = std::sscanf(text.c_str(), "%lld,%lld,%lld,%lf%c", &start, &step, &count, &jitter,
                        &extra);
    if (n != 3 && n != 4)
        throw bama::config_error("component must be start,step,count[,jitter]: " + text);
    bama::ApComponent c;
    c.start = start;
    c.step = step;
    c.count = count;
    c.jitter_p = (n == 4) ? jitter : 0.0;
    return c;
}

struct CodecArgs {
    std::string mode = "1";
    std::string coder = "huffman";
    std::int64_t block_size = 1024;
    std::int64_t min_run = 3;
    std::string guard = "on";
    bool allow_small_blocks = false;
};

void add_codec_flags(CLI::App& cmd, CodecArgs& args, bool with_mode_and_coder) {
    if (with_mode_and_coder) {
        cmd.add_option("--mode", args.mode, "Catalyst mode")
            ->check(CLI::IsMember({"1", "2"}));
        cmd.add_option("--coder", args.coder, "Entropy coder")
            ->check(CLI::IsMember({"rle", "lzw", "huffman", "arith", "none"}));
    }
    cmd.add_option("--block-size", args.block_size, "Block size in bits (default 1024)");
    cmd.add_option("--min-run", args.min_run, "Shortest extractable run (default 3)");
    cmd.add_option("--guard", args.guard, "Profitability guard")
        ->check(CLI::IsMember({"on", "off"}));
    cmd.add_flag("--allow-small-blocks", args.allow_small_blocks,
                 "Permit --block-size under 1024 bits");
}

bama::PipelineParams pipeline_params(const CodecArgs& args) {
    if (args.block_size < 1)
        throw bama::config_error("--block-size must be at least 1");
    if (args.block_size < 1024 && !args.allow_small_blocks)
        throw bama::config_error(
            "--block-size under 1024 needs --allow-small-blocks");
    bama::PipelineParams params;
    params.block_size = static_cast<std::size_t>(args.block_size);
    params.catalyst.min_run = args.min_run;
    params.catalyst.guard = args.guard == "on";
    return params;
}

struct CorpusArgs {
    std::string input; // raw file; empty means generate
    double p_one = 0.024;
    std::int64_t length_bits = 1048576;
    std::uint64_t seed = 0;
};

void add_corpus_flags(CLI::App& cmd, CorpusArgs& args) {
    cmd.add_option("input", args.input, "Raw input file (generated corpus when omitted)");
    cmd.add_option("--p-one", args.p_one, "Bernoulli 1 density (default 0.024)");
    cmd.add_option("--length-bits", args.length_bits, "Generated corpus length (default 1048576)");
    cmd.add_option("--seed", args.seed, "Generator seed");
}

bama::BitVector corpus_from_args(const CorpusArgs& args) {
    bama::CorpusSpec spec;
    if (!args.input.empty()) {
        spec.kind = bama::CorpusKind::file;
        spec.path = args.input;
        spec.p_one = 0.0;
        return bama::generate_corpus(spec);
    }
    if (args.length_bits < 1)
        throw bama::config_error("--length-bits must be at least 1");
    spec.kind = bama::CorpusKind::bernoulli;
    spec.length_bits = static_cast<std::size_t>(args.length_bits);
    spec.p_one = args.p_one;
    spec.seed = args.seed;
    return bama::generate_corpus(spec);
}

char format_sep(const std::string& format) {
    return format == "tsv" ? '\t' : ',';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bama: arithmetic-progression compression catalyst and entropy coders"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a corpus file");
    std::string gen_kind = "bernoulli";
    double gen_p_one = 0.024;
    std::int64_t gen_length = 1048576;
    std::uint64_t gen_seed = 0;
    std::vector<std::string> gen_components;
    std::string gen_out;
    gen->add_option("--kind", gen_kind, "Corpus family")
        ->check(CLI::IsMember({"bernoulli", "ap-rich"}));
    gen->add_option("--p-one", gen_p_one, "Bernoulli 1 density (default 0.024)");
    gen->add_option("--length-bits", gen_length, "Corpus length (default 1048576)");
    gen->add_option("--seed", gen_seed, "Generator seed");
    gen->add_option("--component", gen_components,
                    "ap-rich run start,step,count[,jitter]; repeatable");
    gen->add_option("--out", gen_out, "Output file")->required();

    // encode
    auto* encode = app.add_subcommand("encode", "Compress a raw file into a container");
    std::string enc_in, enc_out;
    CodecArgs enc_args;
    encode->add_option("input", enc_in, "Raw input file")->required();
    encode->add_option("--out", enc_out, "Container output file")->required();
    add_codec_flags(*encode, enc_args, true);

    // decode
    auto* decode = app.add_subcommand("decode", "Expand a container back to raw bytes");
    std::string dec_in, dec_out;
    decode->add_option("input", dec_in, "Container file")->required();
    decode->add_option("--out", dec_out, "Raw output file")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "Run the three pipelines and report metrics");
    CorpusArgs bench_corpus;
    CodecArgs bench_args;
    std::vector<std::string> bench_coders;
    std::string bench_format = "csv";
    std::string bench_out;
    bool bench_no_timing = false;
    add_corpus_flags(*bench, bench_corpus);
    add_codec_flags(*bench, bench_args, false);
    bench->add_option("--coder", bench_coders, "Entropy coder; repeatable (default huffman)")
        ->check(CLI::IsMember({"rle", "lzw", "huffman", "arith", "none"}));
    bench->add_option("--format", bench_format, "Report format")
        ->check(CLI::IsMember({"csv", "tsv"}));
    bench->add_option("--out", bench_out, "Report file (stdout when omitted)");
    bench->add_flag("--no-timing", bench_no_timing, "Drop the ns_per_byte row");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Acceptance frequency across min_run values");
    CorpusArgs sweep_corpus;
    std::vector<std::int64_t> sweep_min_runs;
    std::int64_t sweep_block_size = 1024;
    std::string sweep_guard = "on";
    bool sweep_allow_small = false;
    std::string sweep_format = "csv";
    std::string sweep_out;
    add_corpus_flags(*sweep, sweep_corpus);
    sweep->add_option("--min-run", sweep_min_runs,
                      "Sweep points; repeatable (default 3 4 5 6 8)");
    sweep->add_option("--block-size", sweep_block_size, "Block size in bits (default 1024)");
    sweep->add_option("--guard", sweep_guard, "Profitability guard")
        ->check(CLI::IsMember({"on", "off"}));
    sweep->add_flag("--allow-small-blocks", sweep_allow_small,
                    "Permit --block-size under 1024 bits");
    sweep->add_option("--format", sweep_format, "Report format")
        ->check(CLI::IsMember({"csv", "tsv"}));
    sweep->add_option("--out", sweep_out, "Report file (stdout when omitted)");

    try {
        app.parse(argc, argv);

        if (gen->parsed()) {
            bama::CorpusSpec spec;
            spec.kind = gen_kind == "ap-rich" ? bama::CorpusKind::ap_rich
                                              : bama::CorpusKind::bernoulli;
            if (gen_length < 1)
                throw bama::config_error("--length-bits must be at least 1");
            spec.length_bits = static_cast<std::size_t>(gen_length);
            spec.p_one = gen_p_one;
            spec.seed = gen_seed;
            for (const std::string& text : gen_components)
                spec.components.push_back(parse_component(text));
            write_bytes(gen_out, bama::generate_corpus(spec).pack_bytes());
        } else if (encode->parsed()) {
            bama::PipelineParams params = pipeline_params(enc_args);
            std::vector<std::uint8_t> raw = read_bytes(enc_in);
            bama::BitVector stream = bama::BitVector::from_bytes(raw, raw.size() * 8);
            bama::Mode mode = enc_args.mode == "2" ? bama::Mode::mode2 : bama::Mode::mode1;
            bama::Codec codec = bama::codec_from_name(enc_args.coder);
            write_bytes(enc_out, bama::compress(stream, mode, codec, params));
        } else if (decode->parsed()) {
            std::vector<std::uint8_t> container = read_bytes(dec_in);
            // A stream whose bit count is not byte aligned pads its final
            // byte with zeros here; encode inputs are whole files, so the
            // encode -> decode cycle is byte exact.
            write_bytes(dec_out, bama::decompress(container).pack_bytes());
        } else if (bench->parsed()) {
            bama::PipelineParams params = pipeline_params(bench_args);
            bama::BitVector corpus = corpus_from_args(bench_corpus);
            if (bench_coders.empty())
                bench_coders.push_back("huffman");
            std::vector<bama::Codec> codecs;
            for (const std::string& name : bench_coders)
                codecs.push_back(bama::codec_from_name(name));
            bama::ReportOptions opts;
            opts.sep = format_sep(bench_format);
            opts.include_timing = !bench_no_timing;
            emit_text(bench_out, bama::bench_report(corpus, codecs, params, opts));
        } else if (sweep->parsed()) {
            if (sweep_block_size < 1)
                throw bama::config_error("--block-size must be at least 1");
            if (sweep_block_size < 1024 && !sweep_allow_small)
                throw bama::config_error(
                    "--block-size under 1024 needs --allow-small-blocks");
            bama::PipelineParams params;
            params.block_size = static_cast<std::size_t>(sweep_block_size);
            params.catalyst.guard = sweep_guard == "on";
            bama::BitVector corpus = corpus_from_args(sweep_corpus);
            if (sweep_min_runs.empty())
                sweep_min_runs = {3, 4, 5, 6, 8};
            std::vector<bama::SweepPoint> points =
                bama::sweep_acceptance(corpus, sweep_min_runs, params);
            emit_text(sweep_out, bama::sweep_report(points, format_sep(sweep_format)));
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    } catch (const bama::unsupported_format& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const bama::corrupt_stream& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const bama::varint_overflow& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        // config_error and friends
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
