#include <doctest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "hurst/error.hpp"
#include "hurst/trace.hpp"

using namespace hurst;

namespace {

std::size_t error_line(std::string_view text, ErrorKind kind) {
    try {
        (void)parse_trace(text);
    } catch (const LineError& e) {
        CHECK(e.kind() == kind);
        return e.line();
    }
    FAIL("no error raised");
    return 0;
}

std::vector<PacketRecord> random_trace(std::uint64_t seed, std::size_t count, double tick) {
    std::mt19937_64 rng(seed);
    std::geometric_distribution<int> gap(0.3);
    std::uniform_int_distribution<std::uint64_t> size(40, 1500);
    std::vector<PacketRecord> out;
    std::int64_t ticks = static_cast<std::int64_t>(seed % 7);
    for (std::size_t i = 0; i < count; ++i) {
        ticks += gap(rng);
        out.push_back({static_cast<double>(ticks) * tick, size(rng)});
    }
    return out;
}

}  // namespace

TEST_CASE("parsing examples") {
    const auto two = parse_trace("0.001 64\n0.002 1500\n");
    CHECK(two == std::vector<PacketRecord>{{0.001, 64}, {0.002, 1500}});
    CHECK(parse_trace("# header\n\n0.5 512\n") == std::vector<PacketRecord>{{0.5, 512}});
    CHECK(parse_trace("  1.5\t\t40  \r\n") == std::vector<PacketRecord>{{1.5, 40}});
    CHECK(parse_trace("0.1 64\n0.1 64\n").size() == 2);
    CHECK(parse_trace("").empty());
    std::istringstream stream("3 100\n4 200\n");
    CHECK(parse_trace(stream).size() == 2);
}

TEST_CASE("parse and ordering errors carry line numbers") {
    CHECK(error_line("0.2 64\n0.1 64\n", ErrorKind::Ordering) == 2);
    CHECK(error_line("# c\n0.1 64\nabc 64\n", ErrorKind::Parse) == 3);
    CHECK(error_line("0.1\n", ErrorKind::Parse) == 1);
    CHECK(error_line("0.1 64 7\n", ErrorKind::Parse) == 1);
    CHECK(error_line("0.1 0\n", ErrorKind::Parse) == 1);
    CHECK(error_line("0.1 -5\n", ErrorKind::Parse) == 1);
    CHECK(error_line("0.1 6.5\n", ErrorKind::Parse) == 1);
    CHECK(error_line("-0.1 64\n", ErrorKind::Parse) == 1);
    CHECK(error_line("nan 64\n", ErrorKind::Parse) == 1);
    CHECK(error_line("0.1 64\n\n0.3x 64\n", ErrorKind::Parse) == 3);
}

TEST_CASE("binning examples") {
    const std::vector<PacketRecord> r = {{0.000, 64}, {0.005, 64}, {0.015, 64}};
    CHECK(bin_trace(r, {0.01, BinValue::PacketCount}).vector() == std::vector<double>{2, 1});
    CHECK(bin_trace(r, {0.01, BinValue::ByteCount}).vector() == std::vector<double>{128, 64});
    const std::vector<PacketRecord> one = {{3.0, 900}};
    CHECK(bin_trace(one, {0.01, BinValue::PacketCount}).vector() == std::vector<double>{1});
    CHECK(bin_trace(one, {0.01, BinValue::ByteCount}).vector() == std::vector<double>{900});
}

TEST_CASE("bins are anchored at the first record, and the last record is kept") {
    const std::vector<PacketRecord> r = {{10.0, 1}, {10.5, 1}, {11.0, 1}};
    const auto s = bin_trace(r, {0.5, BinValue::PacketCount});
    CHECK(s.vector() == std::vector<double>{1, 1, 1});
    const auto gap = bin_trace(std::vector<PacketRecord>{{0.0, 1}, {0.25, 2}}, {0.0625, BinValue::ByteCount});
    CHECK(gap.vector() == std::vector<double>{1, 0, 0, 0, 2});
}

TEST_CASE("binning errors") {
    CHECK_THROWS_AS((void)bin_trace({}, {}), InsufficientData);
    const std::vector<PacketRecord> r = {{0.0, 1}};
    CHECK_THROWS_AS((void)bin_trace(r, {0.0, BinValue::PacketCount}), InvalidArgument);
    CHECK_THROWS_AS((void)bin_trace(r, {-1.0, BinValue::PacketCount}), InvalidArgument);
    const std::vector<PacketRecord> backwards = {{1.0, 1}, {0.5, 1}};
    CHECK_THROWS_AS((void)bin_trace(backwards, {}), Error);
}

TEST_CASE("property: conservation") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto r = random_trace(seed, 500 + seed * 13, 0.0007);
        const double bytes = std::accumulate(r.begin(), r.end(), 0.0,
                                             [](double a, const PacketRecord& p) { return a + static_cast<double>(p.size); });
        for (double w : {0.001, 0.01, 0.037}) {
            const auto pc = bin_trace(r, {w, BinValue::PacketCount});
            const auto bc = bin_trace(r, {w, BinValue::ByteCount});
            CHECK(std::accumulate(pc.values().begin(), pc.values().end(), 0.0) == static_cast<double>(r.size()));
            CHECK(std::accumulate(bc.values().begin(), bc.values().end(), 0.0) == bytes);
        }
    }
}

TEST_CASE("property: rebinning consistency on aligned boundaries") {
    // Dyadic timestamps and widths make every bin boundary exact. Block
    // aggregation averages, so m times the aggregate is the coarse bin sum.
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto r = random_trace(seed, 2000, 1.0 / 1024.0);
        const double w = 1.0 / 64.0;
        for (std::size_t m : {2u, 4u, 8u}) {
            for (auto value : {BinValue::PacketCount, BinValue::ByteCount}) {
                const auto fine = bin_trace(r, {w, value});
                const auto coarse = bin_trace(r, {w * static_cast<double>(m), value});
                const auto agg = aggregate(fine.values(), m);
                REQUIRE(agg.size() <= coarse.size());
                CHECK(coarse.size() - agg.size() <= 1);
                for (std::size_t k = 0; k < agg.size(); ++k) {
                    CHECK(agg.values()[k] * static_cast<double>(m) == coarse.values()[k]);
                }
            }
        }
    }
}

TEST_CASE("property: serialize then parse is the identity") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto r = random_trace(seed, 300, 0.000123456789);
        // Awkward values: tiny, huge and non-terminating timestamps.
        r.front().timestamp = r[1].timestamp > 0.0 ? 1e-300 : 0.0;
        r.back().timestamp = 1e9 / 3.0;
        r.back().size = 18446744073709551615ULL;
        CHECK(parse_trace(serialize_trace(r)) == r);
    }
}
