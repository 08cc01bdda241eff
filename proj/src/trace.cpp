#include "hurst/trace.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>

#include "hurst/error.hpp"
#include "hurst/io.hpp"

namespace hurst {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
            ++i;
        }
        if (i > start) {
            fields.push_back(line.substr(start, i - start));
        }
    }
    return fields;
}

}  // namespace

std::vector<PacketRecord> parse_trace(std::istream& in) {
    std::vector<PacketRecord> records;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        const auto fields = split_fields(line);
        if (fields.empty() || fields.front().front() == '#') {
            continue;
        }
        if (fields.size() != 2) {
            throw LineError(ErrorKind::Parse, line_no,
                            "expected 2 fields (timestamp size), got " + std::to_string(fields.size()));
        }
        const auto ts = parse_double(fields[0]);
        if (!ts || !std::isfinite(*ts) || *ts < 0.0) {
            throw LineError(ErrorKind::Parse, line_no, "invalid timestamp '" + std::string(fields[0]) + "'");
        }
        std::uint64_t size = 0;
        const auto* first = fields[1].data();
        const auto* last = first + fields[1].size();
        const auto [ptr, ec] = std::from_chars(first, last, size);
        if (ec != std::errc() || ptr != last || size == 0) {
            throw LineError(ErrorKind::Parse, line_no, "invalid packet size '" + std::string(fields[1]) + "'");
        }
        if (!records.empty() && *ts < records.back().timestamp) {
            throw LineError(ErrorKind::Ordering, line_no, "timestamp decreases");
        }
        records.push_back({*ts, size});
    }
    return records;
}

std::vector<PacketRecord> parse_trace(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_trace(in);
}

std::string serialize_trace(std::span<const PacketRecord> records) {
    std::string out;
    for (const auto& r : records) {
        out += format_double(r.timestamp);
        out += ' ';
        out += std::to_string(r.size);
        out += '\n';
    }
    return out;
}

TimeSeries bin_trace(std::span<const PacketRecord> records, const BinningSpec& spec) {
    if (!(spec.bin_width > 0.0) || !std::isfinite(spec.bin_width)) {
        throw InvalidArgument("bin width must be positive");
    }
    if (records.empty()) {
        throw InsufficientData("cannot bin an empty trace");
    }
    for (std::size_t i = 1; i < records.size(); ++i) {
        if (records[i].timestamp < records[i - 1].timestamp) {
            throw InvalidArgument("trace records must be in non-decreasing time order");
        }
    }
    const double t0 = records.front().timestamp;
    auto bin_of = [&](double t) { return static_cast<std::size_t>(std::floor((t - t0) / spec.bin_width)); };
    std::vector<double> series(bin_of(records.back().timestamp) + 1, 0.0);
    for (const auto& r : records) {
        series[bin_of(r.timestamp)] += spec.value == BinValue::PacketCount ? 1.0 : static_cast<double>(r.size);
    }
    return TimeSeries(std::move(series));
}

}  // namespace hurst
