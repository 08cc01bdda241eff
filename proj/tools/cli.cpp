#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hurst/convergence.hpp"
#include "hurst/error.hpp"
#include "hurst/estimators.hpp"
#include "hurst/fgn.hpp"
#include "hurst/io.hpp"
#include "hurst/random.hpp"
#include "hurst/study.hpp"
#include "hurst/trace.hpp"

namespace hurst::cli {
namespace {

namespace fs = std::filesystem;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return kUsageError;
        case ErrorKind::Parse:
        case ErrorKind::Ordering:
        case ErrorKind::InsufficientData: return kDataError;
        case ErrorKind::DegenerateInput:
        case ErrorKind::EmbeddingFailure: return kEstimationError;
    }
    return kEstimationError;
}

EstimatorId estimator_or_throw(const std::string& name) {
    if (const auto id = parse_estimator(name)) {
        return *id;
    }
    throw InvalidArgument("unknown estimator '" + name + "' (rs, aggvar, periodogram, whittle, wavelet)");
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
    } else {
        write_file_atomic(path, text);
    }
}

std::string flags_of(const HurstEstimate& e) {
    std::string flags;
    auto add = [&](const char* f) {
        if (!flags.empty()) {
            flags += '|';
        }
        flags += f;
    };
    if (e.diagnostics.clamped) {
        add("clamped");
    }
    if (e.diagnostics.boundary) {
        add("boundary");
    }
    return flags.empty() ? "ok" : flags;
}

struct GenOptions {
    double hurst = 0.0;
    std::size_t length = 0;
    double variance = 1.0;
    std::uint64_t seed = 0;
    std::size_t count = 1;
    std::string out;
};

int cmd_gen(const GenOptions& o, std::ostream& out) {
    const FgnSpec spec{HurstParameter(o.hurst), o.length, o.variance, o.seed};
    if (o.count < 1) {
        throw InvalidArgument("--count must be >= 1");
    }
    const FgnGenerator generator(spec.hurst, spec.length, spec.variance);
    out << "# hurst-gen-manifest v1\n" << "path,hurst,length,variance,seed\n";
    for (std::size_t i = 0; i < o.count; ++i) {
        char suffix[32];
        std::snprintf(suffix, sizeof(suffix), "-%03zu", i);
        const std::string path = o.out + suffix;
        const std::uint64_t seed = derive_seed(o.seed, i);
        write_file_atomic(path, series_text(generator.sample(seed).values()));
        out << path << ',' << format_double(o.hurst) << ',' << o.length << ',' << format_double(o.variance) << ','
            << seed << '\n';
    }
    return kSuccess;
}

struct EstimateOptions {
    std::string method;
    bool all = false;
    std::vector<std::string> inputs;
};

int cmd_estimate(const EstimateOptions& o, std::ostream& out, std::ostream& err) {
    std::vector<EstimatorId> methods;
    if (o.all) {
        methods.assign(kAllEstimators.begin(), kAllEstimators.end());
    } else if (!o.method.empty()) {
        methods.push_back(estimator_or_throw(o.method));
    } else {
        throw InvalidArgument("one of --method or --all is required");
    }
    int code = kSuccess;
    out << kEstimatesHeader << '\n' << "file,method,h_hat,flags\n";
    for (const auto& path : o.inputs) {
        std::optional<TimeSeries> series;
        try {
            series = read_series_file(path);
        } catch (const Error& e) {
            err << path << ": " << e.what() << '\n';
            for (auto m : methods) {
                out << path << ',' << to_string(m) << ",,error:" << to_string(e.kind()) << '\n';
            }
            code = kDataError;
            continue;
        }
        for (auto m : methods) {
            try {
                const auto e = estimate(m, series->values());
                out << path << ',' << to_string(m) << ',' << format_double(e.h_hat) << ',' << flags_of(e) << '\n';
            } catch (const Error& e) {
                err << path << ": " << e.what() << '\n';
                out << path << ',' << to_string(m) << ",,error:" << to_string(e.kind()) << '\n';
                if (code == kSuccess) {
                    code = kEstimationError;
                }
            }
        }
    }
    return code;
}

struct StudyOptions {
    std::string config;
    std::vector<double> h;
    std::vector<int> exponents;
    std::size_t replicates = 0;
    std::vector<std::string> estimators;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::size_t jobs = 0;
    std::string out_dir;
};

int cmd_study(const StudyOptions& o, std::ostream& out) {
    StudyConfig cfg;
    if (!o.config.empty()) {
        std::ifstream in(o.config);
        if (!in) {
            throw InvalidArgument("cannot open config " + o.config);
        }
        std::stringstream buf;
        buf << in.rdbuf();
        cfg = study_config_from_json(buf.str());
    }
    if (!o.h.empty()) {
        cfg.h_grid = o.h;
    }
    if (!o.exponents.empty()) {
        cfg.length_exponents = o.exponents;
    }
    if (o.replicates != 0) {
        cfg.replicates = o.replicates;
    }
    if (!o.estimators.empty()) {
        cfg.estimators.clear();
        for (const auto& name : o.estimators) {
            if (name == "all") {
                cfg.estimators.assign(kAllEstimators.begin(), kAllEstimators.end());
                break;
            }
            cfg.estimators.push_back(estimator_or_throw(name));
        }
    }
    if (o.seed_set) {
        cfg.base_seed = o.seed;
    }
    cfg.jobs = o.jobs;
    cfg.validate();

    const auto report = run_study(cfg);
    fs::create_directories(o.out_dir);
    const fs::path dir(o.out_dir);
    write_file_atomic(dir / "study.csv", study_cells_csv(report));
    write_file_atomic(dir / "nmin.csv", study_nmin_csv(report));
    write_file_atomic(dir / "study.json", study_json(report));
    out << study_nmin_csv(report);
    return kSuccess;
}

struct ConvergeOptions {
    std::string method = "whittle";
    std::size_t tau0 = 64;
    std::size_t tau_u = 200;
    std::size_t jobs = 0;
    std::string out;
    std::string json;
    std::vector<std::string> inputs;
};

int cmd_converge(const ConvergeOptions& o, std::ostream& out) {
    const ConvergenceConfig cfg{estimator_or_throw(o.method), o.tau0, o.tau_u};
    cfg.validate();
    std::vector<TimeSeries> batch;
    for (const auto& path : o.inputs) {
        batch.push_back(read_series_file(path));
    }
    for (const auto& s : batch) {
        if (s.size() != batch.front().size()) {
            throw Error(ErrorKind::Parse, "all inputs to converge must have the same length");
        }
    }
    const auto track = batch.size() == 1 ? converge(batch.front().values(), cfg) : converge_mean(batch, cfg, o.jobs);
    emit(track_csv(track, cfg.method), o.out, out);
    if (!o.json.empty()) {
        write_file_atomic(o.json, track_json(track, cfg));
    }
    return kSuccess;
}

struct SlideOptions {
    std::string method = "whittle";
    std::size_t window = 256;
    std::size_t step = 256;
    std::string out;
    std::string json;
    std::string input;
};

int cmd_slide(const SlideOptions& o, std::ostream& out) {
    const WindowConfig cfg{estimator_or_throw(o.method), o.window, o.step};
    cfg.validate();
    const auto series = read_series_file(o.input);
    const auto track = sliding_window(series.values(), cfg);
    emit(track_csv(track, cfg.method), o.out, out);
    if (!o.json.empty()) {
        write_file_atomic(o.json, track_json(track, cfg));
    }
    return kSuccess;
}

struct IngestOptions {
    double bin_width = 0.01;
    std::string value = "packets";
    std::string input;
    std::string out;
};

int cmd_ingest(const IngestOptions& o, std::ostream& out, std::ostream& err) {
    BinningSpec spec;
    spec.bin_width = o.bin_width;
    if (o.value == "packets") {
        spec.value = BinValue::PacketCount;
    } else if (o.value == "bytes") {
        spec.value = BinValue::ByteCount;
    } else {
        throw InvalidArgument("--value must be 'packets' or 'bytes'");
    }
    std::ifstream in(o.input);
    if (!in) {
        throw InvalidArgument("cannot open trace " + o.input);
    }
    std::vector<PacketRecord> records;
    try {
        records = parse_trace(in);
    } catch (const LineError& e) {
        err << o.input << ':' << e.line() << ": " << to_string(e.kind()) << " error: " << e.detail() << '\n';
        return kDataError;
    }
    const auto series = bin_trace(records, spec);
    write_file_atomic(o.out, series_text(series.values()));
    const double duration = records.back().timestamp - records.front().timestamp;
    out << "# hurst-ingest v1\n"
        << "records,duration,length\n"
        << records.size() << ',' << format_double(duration) << ',' << series.size() << '\n';
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hurst index estimation and fGn synthesis toolkit", "hurst"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Synthesise exact fGn series (Davies-Harte)");
    gen_cmd->add_option("--hurst", gen.hurst, "Hurst index in (0, 1)")->required();
    gen_cmd->add_option("--length", gen.length, "Samples per series")->required();
    gen_cmd->add_option("--variance", gen.variance, "Marginal variance");
    gen_cmd->add_option("--seed", gen.seed, "Base seed; file i uses a seed derived from it");
    gen_cmd->add_option("--count", gen.count, "Number of series");
    gen_cmd->add_option("--out", gen.out, "Output prefix; files get -000, -001, ...")->required();

    EstimateOptions est;
    auto* est_cmd = app.add_subcommand("estimate", "Estimate H for series files");
    auto* method_opt = est_cmd->add_option("--method", est.method, "rs, aggvar, periodogram, whittle or wavelet");
    auto* all_opt = est_cmd->add_flag("--all", est.all, "Run every estimator");
    method_opt->excludes(all_opt);
    est_cmd->add_option("inputs", est.inputs, "Series files")->required();

    StudyOptions study;
    auto* study_cmd = app.add_subcommand("study", "Monte-Carlo accuracy study over an (H, N) grid");
    study_cmd->set_help_flag("--help", "Print this help message and exit");
    study_cmd->add_option("--config", study.config, "JSON config (flags override it)");
    study_cmd->add_option("--h", study.h, "Hurst grid values");
    study_cmd->add_option("--exp", study.exponents, "Length exponents i (N = 2^i)");
    study_cmd->add_option("--replicates", study.replicates, "Replicates per cell");
    study_cmd->add_option("--estimators", study.estimators, "Estimator names or 'all'");
    auto* seed_opt = study_cmd->add_option("--seed", study.seed, "Base seed");
    study_cmd->add_option("--jobs", study.jobs, "Worker threads (0 = all cores)");
    study_cmd->add_option("--out-dir", study.out_dir, "Output directory")->required();

    ConvergeOptions conv;
    auto* conv_cmd = app.add_subcommand("converge", "Growing-prefix convergence track (averaged over inputs)");
    conv_cmd->add_option("--method", conv.method, "Estimator");
    conv_cmd->add_option("--tau0", conv.tau0, "Initial prefix length");
    conv_cmd->add_option("--tau-u", conv.tau_u, "Prefix increment");
    conv_cmd->add_option("--jobs", conv.jobs, "Worker threads (0 = all cores)");
    conv_cmd->add_option("--out", conv.out, "Track CSV path (default stdout)");
    conv_cmd->add_option("--json", conv.json, "Also write the JSON track here");
    conv_cmd->add_option("inputs", conv.inputs, "Series files")->required();

    SlideOptions slide;
    auto* slide_cmd = app.add_subcommand("slide", "Sliding-window estimates over one series");
    slide_cmd->add_option("--method", slide.method, "Estimator");
    slide_cmd->add_option("--window", slide.window, "Window length");
    slide_cmd->add_option("--step", slide.step, "Distance between window starts");
    slide_cmd->add_option("--out", slide.out, "Track CSV path (default stdout)");
    slide_cmd->add_option("--json", slide.json, "Also write the JSON track here");
    slide_cmd->add_option("input", slide.input, "Series file")->required();

    IngestOptions ingest;
    auto* ingest_cmd = app.add_subcommand("ingest", "Bin a two-column packet trace into a series");
    ingest_cmd->add_option("--bin-width", ingest.bin_width, "Bin width in seconds");
    ingest_cmd->add_option("--value", ingest.value, "packets or bytes");
    ingest_cmd->add_option("trace", ingest.input, "Trace file")->required();
    ingest_cmd->add_option("--out", ingest.out, "Output series file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (gen_cmd->parsed()) {
            return cmd_gen(gen, out);
        }
        if (est_cmd->parsed()) {
            return cmd_estimate(est, out, err);
        }
        if (study_cmd->parsed()) {
            study.seed_set = seed_opt->count() > 0;
            return cmd_study(study, out);
        }
        if (conv_cmd->parsed()) {
            return cmd_converge(conv, out);
        }
        if (slide_cmd->parsed()) {
            return cmd_slide(slide, out);
        }
        if (ingest_cmd->parsed()) {
            return cmd_ingest(ingest, out, err);
        }
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    }
    return kUsageError;
}

}  // namespace hurst::cli
