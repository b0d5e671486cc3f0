#include "blockmark/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>

#include <CLI11.hpp>

#include "blockmark/attacks.hpp"
#include "blockmark/blocks.hpp"
#include "blockmark/embed.hpp"
#include "blockmark/extract.hpp"
#include "blockmark/keyfile.hpp"
#include "blockmark/metrics.hpp"
#include "blockmark/permute.hpp"
#include "blockmark/pnm.hpp"
#include "blockmark/rng.hpp"

namespace blockmark::cli {

namespace {

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                    std::istreambuf_iterator<char>()};
    if (in.bad()) {
        throw std::runtime_error("error reading '" + path + "'");
    }
    return bytes;
}

// Writes via a temp file + rename so a failure never leaves partial output.
void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write '" + path + "'");
        }
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
        if (!out) {
            std::error_code ignore;
            std::filesystem::remove(tmp, ignore);
            throw std::runtime_error("cannot write '" + path + "'");
        }
    }
    std::filesystem::rename(tmp, path);
}

void write_file(const std::string& path, const std::string& text) {
    write_file(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

GrayImage load_pgm(const std::string& path) { return read_pgm(read_file(path)); }
BitMatrix load_pbm(const std::string& path) { return read_pbm(read_file(path)); }

KeyFile load_key(const std::string& path) {
    const auto bytes = read_file(path);
    return keyfile_parse(std::string_view(reinterpret_cast<const char*>(bytes.data()),
                                          bytes.size()));
}

std::string format_metric(double v) {
    if (std::isinf(v)) {
        return "inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string format_ncc(const std::optional<double>& v) {
    return v ? format_metric(*v) : "undef";
}

std::pair<int, int> parse_size(const std::string& text) {
    const auto x = text.find('x');
    int w = 0, h = 0;
    auto all = [](std::string_view s, int& v) {
        const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 10);
        return ec == std::errc{} && p == s.data() + s.size() && !s.empty();
    };
    if (x == std::string::npos || !all(std::string_view(text).substr(0, x), w) ||
        !all(std::string_view(text).substr(x + 1), h)) {
        throw std::runtime_error("expected <width>x<height>, got '" + text + "'");
    }
    return {w, h};
}

std::pair<std::int64_t, std::int64_t> parse_fraction(const std::string& text) {
    const auto slash = text.find('/');
    std::int64_t num = 0, den = 0;
    auto all = [](std::string_view s, std::int64_t& v) {
        const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 10);
        return ec == std::errc{} && p == s.data() + s.size() && !s.empty();
    };
    if (slash == std::string::npos || !all(std::string_view(text).substr(0, slash), num) ||
        !all(std::string_view(text).substr(slash + 1), den)) {
        throw std::runtime_error("expected <num>/<den>, got '" + text + "'");
    }
    return {num, den};
}

std::uint64_t entropy_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

GrayImage apply_attack(const GrayImage& img, const std::string& type, double value,
                       std::uint64_t seed) {
    if (type == "gaussian") return gaussian_noise(img, value, seed);
    if (type == "saltpepper") return salt_pepper(img, value, seed);
    if (type == "mean") return mean_filter(img, static_cast<int>(value));
    if (type == "median") return median_filter(img, static_cast<int>(value));
    if (type == "brightness") return brightness_shift(img, static_cast<int>(value));
    if (type == "dctq") return dct_quantize(img, static_cast<int>(value));
    throw std::runtime_error("unknown attack type '" + type + "'");
}

struct KeygenOptions {
    std::string host_size;
    std::string mark_size;
    int block = 4;
    std::string alpha = "1/10";
    int c_min = 2;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string out_path = "key.wmk";
};

void run_keygen(const KeygenOptions& opt, std::ostream& out) {
    KeyFile key;
    std::tie(key.host_width, key.host_height) = parse_size(opt.host_size);
    std::tie(key.mark_width, key.mark_height) = parse_size(opt.mark_size);
    key.block_size = opt.block;
    std::tie(key.alpha_num, key.alpha_den) = parse_fraction(opt.alpha);
    key.c_min = opt.c_min;

    SplitMix64 master(opt.seed_given ? opt.seed : entropy_seed());
    key.perm_seed = master.next();
    key.scramble_seed = master.next();
    key.delta_seed = master.next();

    key.validate();
    write_file(opt.out_path, keyfile_serialize(key));
    out << opt.out_path << "\n";
}

void run_embed(const std::string& host_path, const std::string& mark_path,
               const std::string& key_path, const std::string& out_path, std::ostream& out) {
    const KeyFile key = load_key(key_path);
    const GrayImage host = load_pgm(host_path);
    const BitMatrix mark = load_pbm(mark_path);
    const GrayImage watermarked = embed(host, mark, key);
    write_file(out_path, write_pgm(watermarked));
    out << "psnr=" << format_metric(psnr(host, watermarked)) << "\n";
}

void run_extract(const std::string& host_path, const std::string& wm_path,
                 const std::string& key_path, const std::string& out_path,
                 const std::string& reference_path, std::ostream& out) {
    const KeyFile key = load_key(key_path);
    const GrayImage host = load_pgm(host_path);
    const GrayImage watermarked = load_pgm(wm_path);
    const BitMatrix recovered = extract(host, watermarked, key);
    write_file(out_path, write_pbm(recovered));
    if (!reference_path.empty()) {
        const BitMatrix reference = load_pbm(reference_path);
        out << "ber=" << format_metric(ber(recovered, reference))
            << " ncc=" << format_ncc(ncc(recovered, reference)) << "\n";
    }
}

struct AttackOptions {
    std::string in_path;
    std::string out_path;
    std::string type;
    double sigma = 0.0;
    double p = 0.0;
    int k = 0;
    int offset = 0;
    int quality = 0;
    std::uint64_t seed = 0;
};

void run_attack(const AttackOptions& opt, const CLI::App& cmd) {
    double value = 0.0;
    const char* needed = nullptr;
    if (opt.type == "gaussian") {
        needed = "--sigma";
        value = opt.sigma;
    } else if (opt.type == "saltpepper") {
        needed = "--p";
        value = opt.p;
    } else if (opt.type == "mean" || opt.type == "median") {
        needed = "--k";
        value = opt.k;
    } else if (opt.type == "brightness") {
        needed = "--offset";
        value = opt.offset;
    } else if (opt.type == "dctq") {
        needed = "--quality";
        value = opt.quality;
    } else {
        throw std::runtime_error("unknown attack type '" + opt.type + "'");
    }
    if (cmd.count(needed) == 0) {
        throw std::runtime_error("attack type '" + opt.type + "' requires " + needed);
    }
    const GrayImage img = load_pgm(opt.in_path);
    write_file(opt.out_path, write_pgm(apply_attack(img, opt.type, value, opt.seed)));
}

struct EvalPoint {
    const char* attack;
    const char* param; // printed verbatim in the CSV
    double value;
    bool seeded;
};

constexpr EvalPoint kEvalGrid[] = {
    {"gaussian", "0", 0.0, true},     {"gaussian", "1", 1.0, true},
    {"gaussian", "2", 2.0, true},     {"gaussian", "4", 4.0, true},
    {"gaussian", "8", 8.0, true},     {"saltpepper", "0", 0.0, true},
    {"saltpepper", "0.01", 0.01, true}, {"saltpepper", "0.05", 0.05, true},
    {"mean", "1", 1.0, false},        {"mean", "3", 3.0, false},
    {"mean", "5", 5.0, false},        {"median", "1", 1.0, false},
    {"median", "3", 3.0, false},      {"median", "5", 5.0, false},
    {"dctq", "90", 90.0, false},      {"dctq", "70", 70.0, false},
    {"dctq", "50", 50.0, false},      {"dctq", "30", 30.0, false},
    {"dctq", "10", 10.0, false},
};

std::size_t count_saturated_blocks(const GrayImage& host, const BitMatrix& mark,
                                   const KeyFile& key) {
    const BlockGrid grid(host.width, host.height, key.block_size);
    const auto scrambled = scramble_bits(mark.bits, key.scramble_seed);
    const auto perm = fisher_yates(grid.block_count(), key.perm_seed);
    std::size_t saturated = 0;
    for (std::size_t i = 0; i < scrambled.size(); ++i) {
        const auto block = block_view(host, grid, perm[i]);
        const auto [min_it, max_it] = std::minmax_element(block.begin(), block.end());
        if ((scrambled[i] == 1 && *max_it == 255) || (scrambled[i] == 0 && *min_it == 0)) {
            ++saturated;
        }
    }
    return saturated;
}

void run_evaluate(const std::string& host_path, const std::string& mark_path,
                  const std::string& key_path, const std::string& out_path, int seeds,
                  std::ostream& out) {
    if (seeds < 1) {
        throw std::runtime_error("--seeds must be >= 1");
    }
    const KeyFile key = load_key(key_path);
    const GrayImage host = load_pgm(host_path);
    const BitMatrix mark = load_pbm(mark_path);
    const GrayImage watermarked = embed(host, mark, key);

    std::string csv = "attack,param,seed,psnr_attacked,ber,ncc\n";
    for (const EvalPoint& point : kEvalGrid) {
        const int runs = point.seeded ? seeds : 1;
        for (int seed = 0; seed < runs; ++seed) {
            const GrayImage attacked =
                apply_attack(watermarked, point.attack, point.value,
                             static_cast<std::uint64_t>(seed));
            const BitMatrix recovered = extract(host, attacked, key);
            csv += std::string(point.attack) + "," + point.param + "," +
                   std::to_string(seed) + "," + format_metric(psnr(watermarked, attacked)) +
                   "," + format_metric(ber(recovered, mark)) + "," +
                   format_ncc(ncc(recovered, mark)) + "\n";
        }
    }
    write_file(out_path, csv);
    out << "saturated_blocks=" << count_saturated_blocks(host, mark, key) << "\n";
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Block-based grayscale image watermarking toolkit"};
    app.name("blockmark");
    app.require_subcommand(1);

    KeygenOptions keygen;
    auto* keygen_cmd = app.add_subcommand("keygen", "Generate a key file");
    keygen_cmd->add_option("--host-size", keygen.host_size, "Host size as WxH")->required();
    keygen_cmd->add_option("--mark-size", keygen.mark_size, "Mark size as WxH")->required();
    keygen_cmd->add_option("--block", keygen.block, "Block size");
    keygen_cmd->add_option("--alpha", keygen.alpha, "Contrast scale as NUM/DEN");
    keygen_cmd->add_option("--cmin", keygen.c_min, "Minimum contrast budget");
    auto* seed_opt = keygen_cmd->add_option("--seed", keygen.seed, "Master seed");
    keygen_cmd->add_option("--out", keygen.out_path, "Output key path");

    std::string host_path, mark_path, key_path, out_path, wm_path, reference_path;
    auto* embed_cmd = app.add_subcommand("embed", "Embed a mark into a host image");
    embed_cmd->add_option("--host", host_path)->required();
    embed_cmd->add_option("--mark", mark_path)->required();
    embed_cmd->add_option("--key", key_path)->required();
    embed_cmd->add_option("--out", out_path)->required();

    auto* extract_cmd = app.add_subcommand("extract", "Recover the mark from a watermarked image");
    extract_cmd->add_option("--host", host_path)->required();
    extract_cmd->add_option("--watermarked", wm_path)->required();
    extract_cmd->add_option("--key", key_path)->required();
    extract_cmd->add_option("--out", out_path)->required();
    extract_cmd->add_option("--reference", reference_path);

    AttackOptions attack;
    auto* attack_cmd = app.add_subcommand("attack", "Apply one simulated attack");
    attack_cmd->add_option("--in", attack.in_path)->required();
    attack_cmd->add_option("--out", attack.out_path)->required();
    attack_cmd->add_option("--type", attack.type)->required();
    attack_cmd->add_option("--sigma", attack.sigma);
    attack_cmd->add_option("--p", attack.p);
    attack_cmd->add_option("--k", attack.k);
    attack_cmd->add_option("--offset", attack.offset);
    attack_cmd->add_option("--quality", attack.quality);
    attack_cmd->add_option("--seed", attack.seed);

    int eval_seeds = 5;
    auto* evaluate_cmd = app.add_subcommand("evaluate", "Run the attack grid and report metrics");
    evaluate_cmd->add_option("--host", host_path)->required();
    evaluate_cmd->add_option("--mark", mark_path)->required();
    evaluate_cmd->add_option("--key", key_path)->required();
    evaluate_cmd->add_option("--out", out_path)->required();
    evaluate_cmd->add_option("--seeds", eval_seeds);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (keygen_cmd->parsed()) {
            keygen.seed_given = seed_opt->count() > 0;
            run_keygen(keygen, out);
        } else if (embed_cmd->parsed()) {
            run_embed(host_path, mark_path, key_path, out_path, out);
        } else if (extract_cmd->parsed()) {
            run_extract(host_path, wm_path, key_path, out_path, reference_path, out);
        } else if (attack_cmd->parsed()) {
            run_attack(attack, *attack_cmd);
        } else if (evaluate_cmd->parsed()) {
            run_evaluate(host_path, mark_path, key_path, out_path, eval_seeds, out);
        }
    } catch (const std::exception& e) {
        err << "blockmark: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace blockmark::cli
