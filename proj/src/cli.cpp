#include "ps2c/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "ps2c/bench.hpp"
#include "ps2c/dataset.hpp"
#include "ps2c/discretizer.hpp"
#include "ps2c/errors.hpp"
#include "ps2c/log.hpp"
#include "ps2c/pattern_index.hpp"
#include "ps2c/pipeline.hpp"
#include "ps2c/report.hpp"
#include "ps2c/sampler_trie.hpp"
#include "ps2c/synthgen.hpp"

namespace ps2c::cli {

namespace fs = std::filesystem;

namespace {

std::vector<std::size_t> parse_size_list(const std::string& text, const std::string& flag) {
    std::vector<std::size_t> out;
    std::string_view rest = text;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto tok = rest.substr(0, comma);
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
            throw ParseError(flag + ": '" + std::string(tok) + "' is not a positive integer");
        }
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    if (out.empty()) throw ParseError(flag + " must list at least one value");
    return out;
}

void add_config_flags(CLI::App& app, PipelineConfig& config) {
    app.add_option("--alphas", config.alphas, "Alphabet sizes A")->delimiter(',');
    app.add_option("--omegas", config.omegas, "PAA window sizes Omega")->delimiter(',');
    app.add_option("--lmax", config.l_max, "Maximum pattern length");
    app.add_option("--smin", config.s_min, "Minimum normalized chi-square to accept a pattern");
    app.add_option("--tau", config.tau, "Temperature for q^(1/tau) edge weights");
    app.add_option("--k", config.k, "Patterns sampled per (alpha, omega) cell");
    app.add_option("--seed", config.seed, "Master seed");
}

int resolve_thread_flag(int flag_value, bool flag_given) {
    if (flag_given) return flag_value;
    if (const char* env = std::getenv("PS2C_THREADS")) {
        int v = 0;
        const std::string_view s(env);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc{} && ptr == s.data() + s.size()) return v;
        log::warning("ignoring malformed PS2C_THREADS='" + std::string(s) + "'");
    }
    return 0;
}

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot write " + path.string());
    f << text;
    if (!f) throw IoError("write failure on " + path.string());
}

void write_matrix(const fs::path& path, const FeatureMatrix& matrix) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot write " + path.string());
    matrix.write_csv(f);
    if (!f) throw IoError("write failure on " + path.string());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pattern-sampling shapelet features for time series classification"};
    app.name("ps2c");
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    bool verbose = false;
    app.add_flag("-v,--verbose", verbose, "Log skipped cells and other details");

    // run
    PipelineConfig run_config;
    std::string run_train, run_test, run_out = "ps2c_out";
    int run_resamples = 1;
    int run_threads = 0;
    bool emit_features = false;
    auto* run_cmd = app.add_subcommand("run", "Fit, transform, classify and report accuracy");
    run_cmd->add_option("train", run_train, "Training set (UCR text)")->required();
    run_cmd->add_option("test", run_test, "Test set (UCR text)")->required();
    add_config_flags(*run_cmd, run_config);
    run_cmd->add_option("--resamples", run_resamples, "Number of evaluations; the first uses the given split");
    auto* run_threads_opt = run_cmd->add_option("--threads", run_threads, "Worker threads (0 = all cores; env PS2C_THREADS)");
    run_cmd->add_option("--out", run_out, "Output directory");
    run_cmd->add_flag("--emit-features", emit_features, "Write feature CSVs per resample");

    // discretize
    std::string disc_train;
    SaxParams disc_params{4, 1};
    auto* disc_cmd = app.add_subcommand("discretize", "Print the SAX word of every instance");
    disc_cmd->add_option("train", disc_train, "Dataset (UCR text)")->required();
    disc_cmd->add_option("--alpha", disc_params.alpha, "Alphabet size")->required();
    disc_cmd->add_option("--omega", disc_params.omega, "PAA window")->required();

    // trie-dump
    std::string trie_train;
    SaxParams trie_params{4, 1};
    PipelineConfig trie_config;
    auto* trie_cmd = app.add_subcommand("trie-dump", "Fit the weighted trie for one cell and print it");
    trie_cmd->add_option("train", trie_train, "Training set (UCR text)")->required();
    trie_cmd->add_option("--alpha", trie_params.alpha, "Alphabet size")->required();
    trie_cmd->add_option("--omega", trie_params.omega, "PAA window")->required();
    trie_cmd->add_option("--lmax", trie_config.l_max, "Maximum pattern length");
    trie_cmd->add_option("--smin", trie_config.s_min, "Minimum normalized chi-square to accept a pattern");
    trie_cmd->add_option("--tau", trie_config.tau, "Temperature for q^(1/tau) edge weights");

    // bench
    BenchOptions bench;
    std::string bench_sizes, bench_lengths = "128";
    int bench_threads = 0;
    auto* bench_cmd = app.add_subcommand("bench", "Time fit + transform on planted-motif data");
    bench_cmd->add_option("--sizes", bench_sizes, "Comma-separated instance counts N")->required();
    bench_cmd->add_option("--lengths", bench_lengths, "Comma-separated series lengths n");
    bench_cmd->add_option("--repeats", bench.repeats, "Timed repetitions per row (best is reported)");
    bench_cmd->add_option("--motif-length", bench.motif_length, "Planted motif length (0 = n/8 per row)");
    add_config_flags(*bench_cmd, bench.config);
    auto* bench_threads_opt = bench_cmd->add_option("--threads", bench_threads, "Worker threads (0 = all cores)");

    // generate
    SynthSpec synth;
    std::size_t synth_test_per_class = 50;
    std::string synth_out = "ps2c_out";
    auto* gen_cmd = app.add_subcommand("generate", "Write a planted-motif train/test pair in UCR format");
    gen_cmd->add_option("--per-class", synth.per_class, "Training instances per class");
    gen_cmd->add_option("--test-per-class", synth_test_per_class, "Test instances per class");
    gen_cmd->add_option("--length", synth.length, "Series length");
    gen_cmd->add_option("--noise", synth.noise, "Gaussian noise sigma");
    gen_cmd->add_option("--motif-length", synth.motif_length, "Motif length");
    gen_cmd->add_option("--amplitude", synth.amplitude, "Motif amplitude");
    gen_cmd->add_option("--seed", synth.seed, "Seed");
    gen_cmd->add_option("--out", synth_out, "Output directory");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kFailure;
    }

    const auto previous_level = log::level();
    if (verbose) log::set_level(log::Level::info);
    struct RestoreLevel {
        log::Level level;
        ~RestoreLevel() { log::set_level(level); }
    } restore{previous_level};

    try {
        if (*run_cmd) {
            const auto train = load_ucr(run_train);
            const auto test = load_ucr(run_test);
            RunOptions options;
            options.threads = resolve_thread_flag(run_threads, run_threads_opt->count() > 0);

            fs::create_directories(run_out);
            const fs::path dir(run_out);
            FeatureSink sink;
            if (emit_features) {
                sink = [&](const ResampleResult& r, const SplitPair&, const MergedFeatureSet& m) {
                    const auto tag = std::to_string(r.index);
                    write_matrix(dir / ("features_train_r" + tag + ".csv"), m.train);
                    write_matrix(dir / ("features_test_r" + tag + ".csv"), m.test);
                };
            }
            const auto report = run_experiment(train, test, run_config, run_resamples, options, sink);
            const auto json = experiment_report_json(report, run_config, run_resamples, train, test);
            const auto text = json.dump(2) + "\n";
            write_text_file(dir / "report.json", text);
            write_text_file(dir / "timings.json", timings_json(report.timings).dump(2) + "\n");
            out << text;
            err << "ps2c: " << report.resamples.size() << " resample(s), mean accuracy " << std::fixed
                << std::setprecision(4) << report.mean_accuracy << " (sd " << report.stddev_accuracy << "), "
                << report.resamples.front().columns << " features, " << std::setprecision(3)
                << report.timings.total << " s\n";
            err.unsetf(std::ios::floatfield);
            return kOk;
        }
        if (*disc_cmd) {
            disc_params.validate();
            const auto data = znormalize(load_ucr(disc_train));
            write_discretized(out, data, discretize(data, disc_params));
            return kOk;
        }
        if (*trie_cmd) {
            trie_params.validate();
            const auto data = znormalize(load_ucr(trie_train));
            data.require_trainable();
            const auto words = discretize(data, trie_params);
            const auto index = PatternIndex::build(words, trie_config.l_max);
            const auto trie = fit_sampler(index, data.class_ids(), data.num_classes(), trie_config.l_max,
                                          trie_config.s_min, trie_config.tau);
            if (trie.empty()) {
                err << "ps2c: no pattern reached s_min=" << trie_config.s_min << '\n';
                return kNoPatterns;
            }
            trie.dump(out);
            return kOk;
        }
        if (*bench_cmd) {
            bench.sizes = parse_size_list(bench_sizes, "--sizes");
            bench.lengths = parse_size_list(bench_lengths, "--lengths");
            bench.run.threads = resolve_thread_flag(bench_threads, bench_threads_opt->count() > 0);
            write_bench_table(out, run_bench(bench));
            return kOk;
        }
        if (*gen_cmd) {
            const auto data = generate_split(synth, synth_test_per_class);
            fs::create_directories(synth_out);
            save_ucr(fs::path(synth_out) / "synth_TRAIN.tsv", data.train);
            save_ucr(fs::path(synth_out) / "synth_TEST.tsv", data.test);
            return kOk;
        }
    } catch (const NoPatternsError& e) {
        err << "ps2c: " << e.what() << '\n';
        return kNoPatterns;
    } catch (const std::exception& e) {
        err << "ps2c: " << e.what() << '\n';
        return kFailure;
    }
    return kFailure;
}

}  // namespace ps2c::cli
