#include <doctest.h>

#include <cmath>

#include "hurst/convergence.hpp"
#include "hurst/error.hpp"
#include "hurst/fgn.hpp"
#include "hurst/random.hpp"

using namespace hurst;

namespace {

EstimatorFactory constant_factory(double value) {
    return [value](EstimatorId method, std::size_t) -> Estimator {
        return [method, value](std::span<const double>) { return HurstEstimate{method, value, {}}; };
    };
}

// Returns the first sample of the series, so each series carries its own value.
EstimatorFactory first_sample_factory() {
    return [](EstimatorId method, std::size_t) -> Estimator {
        return [method](std::span<const double> x) { return HurstEstimate{method, x[0], {}}; };
    };
}

std::vector<TimeSeries> batch(double h, std::size_t n, std::size_t count, std::uint64_t seed) {
    return generate_batch({HurstParameter(h), n}, count, seed);
}

}  // namespace

TEST_CASE("prefix arithmetic") {
    const ConvergenceConfig cfg;
    const auto p = prefix_lengths(65536, cfg);
    CHECK(p.size() == 1 + (65536 - 64) / 200);
    CHECK(p.size() == 328);
    CHECK(p.front() == 64);
    CHECK(p.back() == 64 + 327 * 200);
    CHECK(prefix_lengths(64, cfg) == std::vector<std::size_t>{64});
    CHECK_THROWS_AS((void)prefix_lengths(63, cfg), InsufficientData);
    for (std::size_t i = 1; i < p.size(); ++i) {
        CHECK(p[i] > p[i - 1]);
    }
}

TEST_CASE("window arithmetic") {
    const WindowConfig cfg;
    CHECK(window_starts(1024, cfg) == std::vector<std::size_t>{0, 256, 512, 768});
    CHECK(window_starts(256, cfg) == std::vector<std::size_t>{0});
    CHECK(window_starts(1023, cfg).size() == 3);
    CHECK_THROWS_AS((void)window_starts(255, cfg), InsufficientData);
    const WindowConfig overlap{EstimatorId::Whittle, 256, 100};
    CHECK(window_starts(600, overlap) == std::vector<std::size_t>{0, 100, 200, 300});
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS((ConvergenceConfig{EstimatorId::RS, 63, 200}.validate()), InvalidArgument);
    CHECK_THROWS_AS((ConvergenceConfig{EstimatorId::RS, 64, 0}.validate()), InvalidArgument);
    CHECK_THROWS_AS((WindowConfig{EstimatorId::RS, 256, 257}.validate()), InvalidArgument);
    CHECK_THROWS_AS((WindowConfig{EstimatorId::RS, 256, 0}.validate()), InvalidArgument);
    CHECK_THROWS_AS((WindowConfig{EstimatorId::RS, 32, 16}.validate()), InvalidArgument);
}

TEST_CASE("single-point track when the series is exactly tau0 long") {
    const auto x = generate({HurstParameter(0.7), 64, 1.0, 3});
    const auto track = converge(x.values(), {EstimatorId::AggVar, 64, 200});
    REQUIRE(track.points.size() == 1);
    CHECK(track.points[0].t == 64);
    CHECK_FALSE(track.averaged);
    CHECK(track.points[0].h_hat == estimate_aggvar(x.values()).h_hat);
}

TEST_CASE("stub estimators") {
    const auto x = generate({HurstParameter(0.7), 2000, 1.0, 3});
    const auto track = converge(x.values(), {}, constant_factory(0.7));
    CHECK(track.points.size() == 10);
    for (const auto& p : track.points) {
        CHECK(p.h_hat == 0.7);
    }

    std::vector<TimeSeries> two = {TimeSeries(std::vector<double>(300, 0.6)),
                                   TimeSeries(std::vector<double>(300, 0.8))};
    const auto avg = converge_mean(two, {}, first_sample_factory());
    CHECK(avg.averaged);
    CHECK(avg.replicate_count == 2);
    for (const auto& p : avg.points) {
        CHECK(*p.h_hat == doctest::Approx(0.7).epsilon(1e-15));
        CHECK(p.survivors == 2);
    }
}

TEST_CASE("errored prefixes become gaps, and survivors are averaged") {
    // Only prefixes of at least 300 samples succeed.
    const auto factory = [](EstimatorId method, std::size_t n) -> Estimator {
        return [method, n](std::span<const double> x) {
            if (n < 300) {
                throw InsufficientData("stub");
            }
            return HurstEstimate{method, x[0], {}};
        };
    };
    const auto x = generate({HurstParameter(0.7), 1000, 1.0, 1});
    const auto track = converge(x.values(), {}, factory);
    CHECK(track.gaps() == 2);  // 64, 264
    CHECK_FALSE(track.points[0].h_hat.has_value());
    CHECK(track.points[2].h_hat.has_value());

    // Series 0 fails everywhere; the mean is taken over the rest.
    const auto picky = [](EstimatorId method, std::size_t) -> Estimator {
        return [method](std::span<const double> x) {
            if (x[0] == 1.0) {
                throw DegenerateInput("stub");
            }
            return HurstEstimate{method, x[0], {}};
        };
    };
    std::vector<TimeSeries> three = {TimeSeries(std::vector<double>(100, 1.0)),
                                     TimeSeries(std::vector<double>(100, 0.5)),
                                     TimeSeries(std::vector<double>(100, 0.75))};
    const auto avg = converge_mean(three, {}, picky);
    REQUIRE(avg.points.size() == 1);
    CHECK(avg.points[0].survivors == 2);
    CHECK(*avg.points[0].h_hat == 0.625);
}

TEST_CASE("batch of one equals the single-series track") {
    const auto b = batch(0.8, 1500, 1, 4);
    const auto single = converge(b[0].values(), {});
    const auto mean = converge_mean(b, {});
    REQUIRE(single.points.size() == mean.points.size());
    for (std::size_t i = 0; i < single.points.size(); ++i) {
        CHECK(single.points[i].t == mean.points[i].t);
        CHECK(single.points[i].h_hat == mean.points[i].h_hat);
    }
}

TEST_CASE("property: mean track is the pointwise mean of individual tracks") {
    for (auto method : {EstimatorId::Whittle, EstimatorId::RS, EstimatorId::Wavelet}) {
        const auto b = batch(0.75, 1100, 7, 40 + static_cast<int>(method));
        const ConvergenceConfig cfg{method, 64, 150};
        const auto mean = converge_mean(b, cfg, 2);
        std::vector<ConvergenceTrack> tracks;
        for (const auto& s : b) {
            tracks.push_back(converge(s.values(), cfg));
        }
        for (std::size_t i = 0; i < mean.points.size(); ++i) {
            double sum = 0.0;
            std::size_t count = 0;
            for (const auto& t : tracks) {
                if (t.points[i].h_hat) {
                    sum += *t.points[i].h_hat;
                    ++count;
                }
            }
            CHECK(mean.points[i].survivors == count);
            if (count > 0) {
                CHECK(std::abs(*mean.points[i].h_hat - sum / static_cast<double>(count)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("property: final prefix equals a direct estimate") {
    const auto x = generate({HurstParameter(0.65), 3000, 1.0, 12});
    for (auto id : kAllEstimators) {
        const ConvergenceConfig cfg{id, 64, 200};
        const auto track = converge(x.values(), cfg);
        const std::size_t last = track.points.back().t;
        CHECK(last == 64 + 14 * 200);
        CHECK(track.points.back().h_hat == estimate(id, x.values().first(last)).h_hat);
    }
}

TEST_CASE("property: one full-length window equals a direct estimate") {
    const auto x = generate({HurstParameter(0.85), 777, 1.0, 13});
    for (auto id : kAllEstimators) {
        const auto track = sliding_window(x.values(), {id, 777, 777});
        REQUIRE(track.points.size() == 1);
        CHECK(track.points[0].t == 0);
        CHECK(track.points[0].h_hat == estimate(id, x.values()).h_hat);
    }
}

TEST_CASE("sliding windows use the right slices") {
    const auto x = generate({HurstParameter(0.8), 1024, 1.0, 14});
    const auto track = sliding_window(x.values(), {EstimatorId::Whittle, 256, 256});
    REQUIRE(track.points.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(track.points[i].t == 256 * i);
        CHECK(track.points[i].h_hat == estimate_whittle(x.values().subspan(256 * i, 256)).h_hat);
    }
}

TEST_CASE("averaged Whittle track settles near the generating H") {
    const auto b = batch(0.8, 4096, 100, 15);
    const auto track = converge_mean(b, {EstimatorId::Whittle, 64, 200});
    CHECK(std::abs(*track.points.back().h_hat - 0.8) <= 0.03);
}
