#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hurst/timeseries.hpp"

namespace hurst {

/// One row of a two-column packet trace: arrival time (s) and size (bytes).
struct PacketRecord {
    double timestamp;
    std::uint64_t size;

    friend bool operator==(const PacketRecord&, const PacketRecord&) = default;
};

enum class BinValue { PacketCount, ByteCount };

struct BinningSpec {
    double bin_width = 0.01;  // seconds
    BinValue value = BinValue::PacketCount;
};

/// Parses "timestamp size" lines. Blank lines and lines starting with '#'
/// are skipped. Throws LineError (Parse) on malformed lines and LineError
/// (Ordering) when a timestamp decreases; ties are allowed.
[[nodiscard]] std::vector<PacketRecord> parse_trace(std::istream& in);
[[nodiscard]] std::vector<PacketRecord> parse_trace(std::string_view text);

/// Inverse of parse_trace for well-formed records.
[[nodiscard]] std::string serialize_trace(std::span<const PacketRecord> records);

/// Bins anchored at the first timestamp: bin k covers
/// [t_first + k w, t_first + (k + 1) w). The series runs up to the bin
/// holding the last record, so every record is counted; empty bins are 0.
[[nodiscard]] TimeSeries bin_trace(std::span<const PacketRecord> records, const BinningSpec& spec);

}  // namespace hurst
