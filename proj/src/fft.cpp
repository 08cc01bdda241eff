#include "hurst/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

#include "hurst/error.hpp"

namespace hurst::fft {
namespace {

// FFTW planning is not thread-safe, execution with the new-array interface is.
// Plans are created once per (kind, size, sign) and kept for the process lifetime.
class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    fftw_plan complex_plan(int n, int sign) {
        std::lock_guard lock(mutex_);
        auto key = std::make_tuple(0, n, sign);
        if (auto it = plans_.find(key); it != plans_.end()) {
            return it->second;
        }
        auto* in = fftw_alloc_complex(static_cast<std::size_t>(n));
        auto* out = fftw_alloc_complex(static_cast<std::size_t>(n));
        fftw_plan p = fftw_plan_dft_1d(n, in, out, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(in);
        fftw_free(out);
        plans_.emplace(key, p);
        return p;
    }

    fftw_plan r2c_plan(int n) {
        std::lock_guard lock(mutex_);
        auto key = std::make_tuple(1, n, 0);
        if (auto it = plans_.find(key); it != plans_.end()) {
            return it->second;
        }
        auto* in = fftw_alloc_real(static_cast<std::size_t>(n));
        auto* out = fftw_alloc_complex(static_cast<std::size_t>(n / 2 + 1));
        fftw_plan p = fftw_plan_dft_r2c_1d(n, in, out, FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(in);
        fftw_free(out);
        plans_.emplace(key, p);
        return p;
    }

    PlanCache(const PlanCache&) = delete;
    PlanCache& operator=(const PlanCache&) = delete;

private:
    PlanCache() = default;
    ~PlanCache() {
        for (auto& [key, plan] : plans_) {
            fftw_destroy_plan(plan);
        }
    }

    std::mutex mutex_;
    std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

}  // namespace

std::vector<std::complex<double>> transform(std::span<const std::complex<double>> in, Direction dir) {
    if (in.empty()) {
        throw InvalidArgument("DFT of an empty sequence");
    }
    const int n = static_cast<int>(in.size());
    const int sign = dir == Direction::Forward ? FFTW_FORWARD : FFTW_BACKWARD;
    std::vector<std::complex<double>> src(in.begin(), in.end());
    std::vector<std::complex<double>> out(in.size());
    fftw_plan plan = PlanCache::instance().complex_plan(n, sign);
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(src.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

std::vector<std::complex<double>> real_forward(std::span<const double> in) {
    if (in.empty()) {
        throw InvalidArgument("DFT of an empty sequence");
    }
    const int n = static_cast<int>(in.size());
    std::vector<double> src(in.begin(), in.end());
    std::vector<std::complex<double>> out(in.size() / 2 + 1);
    fftw_plan plan = PlanCache::instance().r2c_plan(n);
    fftw_execute_dft_r2c(plan, src.data(), reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

}  // namespace hurst::fft
