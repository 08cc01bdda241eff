#include "hurst/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "hurst/error.hpp"

namespace hurst {
namespace {

using nlohmann::json;

json number_or_null(double v) {
    return std::isfinite(v) ? json(v) : json(nullptr);
}

json track_points(const ConvergenceTrack& track) {
    json points = json::array();
    for (const auto& p : track.points) {
        points.push_back({{"t", p.t},
                          {"h_hat", p.h_hat ? json(*p.h_hat) : json(nullptr)},
                          {"survivors", p.survivors}});
    }
    return points;
}

std::string track_document(const ConvergenceTrack& track, json config) {
    json doc = {
        {"format", "hurst-track"},
        {"version", kJsonFormatVersion},
        {"config", std::move(config)},
        {"averaged", track.averaged},
        {"replicate_count", track.replicate_count},
        {"gaps", track.gaps()},
        {"points", track_points(track)},
    };
    return doc.dump(2) + "\n";
}

}  // namespace

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::optional<double> parse_double(std::string_view token) {
    if (!token.empty() && token.front() == '+') {
        token.remove_prefix(1);
    }
    double v = 0.0;
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), last, v);
    if (ec != std::errc() || ptr != last || token.empty()) {
        return std::nullopt;
    }
    return v;
}

void write_series(std::ostream& out, std::span<const double> x) {
    out << series_text(x);
}

std::string series_text(std::span<const double> x) {
    std::string text(kSeriesHeader);
    text += '\n';
    for (double v : x) {
        text += format_double(v);
        text += '\n';
    }
    return text;
}

TimeSeries read_series(std::istream& in) {
    std::vector<double> values;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
            line.remove_suffix(1);
        }
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
            line.remove_prefix(1);
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto v = parse_double(line);
        if (!v || !std::isfinite(*v)) {
            throw LineError(ErrorKind::Parse, line_no, "invalid sample '" + std::string(line) + "'");
        }
        values.push_back(*v);
    }
    if (values.empty()) {
        throw InsufficientData("series file contains no samples");
    }
    return TimeSeries(std::move(values));
}

TimeSeries read_series_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot open " + path.string());
    }
    return read_series(in);
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw InvalidArgument("cannot write " + tmp.string());
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) {
            throw InvalidArgument("short write to " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw InvalidArgument("cannot rename onto " + path.string() + ": " + ec.message());
    }
}

std::string study_cells_csv(const StudyReport& report) {
    std::ostringstream out;
    out << kStudyCellsHeader << '\n' << "h0,n,method,bias,sigma,mse,rmse,failures,quality\n";
    for (const auto& c : report.cells) {
        out << format_double(c.h0) << ',' << c.n << ',' << to_string(c.method) << ',' << format_double(c.bias)
            << ',' << format_double(c.sigma) << ',' << format_double(c.mse) << ',' << format_double(c.rmse)
            << ',' << c.failures() << ',' << to_string(c.quality) << '\n';
    }
    return out.str();
}

std::string study_nmin_csv(const StudyReport& report) {
    std::ostringstream out;
    out << kStudyNminHeader << '\n' << "method,nmin\n";
    for (const auto& e : report.nmin_table) {
        out << to_string(e.method) << ',';
        if (e.nmin) {
            out << *e.nmin;
        } else {
            out << "none";
        }
        out << '\n';
    }
    return out.str();
}

std::string study_json(const StudyReport& report) {
    const auto& cfg = report.config;
    json estimators = json::array();
    for (auto id : cfg.estimators) {
        estimators.push_back(std::string(to_string(id)));
    }
    json cells = json::array();
    for (const auto& c : report.cells) {
        cells.push_back({
            {"h0", c.h0},
            {"n", c.n},
            {"method", std::string(to_string(c.method))},
            {"bias", number_or_null(c.bias)},
            {"sigma", number_or_null(c.sigma)},
            {"mse", number_or_null(c.mse)},
            {"rmse", number_or_null(c.rmse)},
            {"used", c.used},
            {"errored", c.errored},
            {"clamped", c.clamped},
            {"failures", c.failures()},
            {"quality", std::string(to_string(c.quality))},
        });
    }
    json nmin = json::array();
    for (const auto& e : report.nmin_table) {
        nmin.push_back({{"method", std::string(to_string(e.method))},
                        {"nmin", e.nmin ? json(*e.nmin) : json(nullptr)}});
    }
    json doc = {
        {"format", "hurst-study"},
        {"version", kJsonFormatVersion},
        {"config",
         {{"h_grid", cfg.h_grid},
          {"length_exponents", cfg.length_exponents},
          {"replicates", cfg.replicates},
          {"estimators", estimators},
          {"base_seed", cfg.base_seed}}},
        {"cells", cells},
        {"nmin", nmin},
    };
    return doc.dump(2) + "\n";
}

StudyConfig study_config_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("study config: ") + e.what());
    }
    if (doc.contains("config")) {
        doc = doc["config"];
    }
    StudyConfig cfg;
    try {
        if (doc.contains("h_grid")) {
            cfg.h_grid = doc["h_grid"].get<std::vector<double>>();
        }
        if (doc.contains("length_exponents")) {
            cfg.length_exponents = doc["length_exponents"].get<std::vector<int>>();
        }
        if (doc.contains("replicates")) {
            cfg.replicates = doc["replicates"].get<std::size_t>();
        }
        if (doc.contains("base_seed")) {
            cfg.base_seed = doc["base_seed"].get<std::uint64_t>();
        }
        if (doc.contains("estimators")) {
            cfg.estimators.clear();
            for (const auto& name : doc["estimators"]) {
                const auto id = parse_estimator(name.get<std::string>());
                if (!id) {
                    throw InvalidArgument("unknown estimator '" + name.get<std::string>() + "'");
                }
                cfg.estimators.push_back(*id);
            }
        }
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("study config: ") + e.what());
    }
    return cfg;
}

std::string track_csv(const ConvergenceTrack& track, EstimatorId method) {
    std::ostringstream out;
    out << kTrackHeader << '\n';
    out << "# method=" << to_string(method) << " averaged=" << (track.averaged ? "true" : "false")
        << " replicates=" << track.replicate_count << " gaps=" << track.gaps() << '\n';
    out << "t,h_hat\n";
    for (const auto& p : track.points) {
        out << p.t << ',';
        if (p.h_hat) {
            out << format_double(*p.h_hat);
        }
        out << '\n';
    }
    return out.str();
}

std::string track_json(const ConvergenceTrack& track, const ConvergenceConfig& cfg) {
    return track_document(track, {{"kind", "convergence"},
                                  {"method", std::string(to_string(cfg.method))},
                                  {"tau0", cfg.tau0},
                                  {"tau_u", cfg.tau_u}});
}

std::string track_json(const ConvergenceTrack& track, const WindowConfig& cfg) {
    return track_document(track, {{"kind", "sliding-window"},
                                  {"method", std::string(to_string(cfg.method))},
                                  {"window", cfg.window},
                                  {"step", cfg.step}});
}

}  // namespace hurst
