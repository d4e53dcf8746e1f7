#include "iriscap/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace iriscap {

namespace {

// Plans are created once per length with FFTW_ESTIMATE (deterministic
// algorithm choice) and FFTW_UNALIGNED (so the new-array execute interface
// accepts arbitrary caller buffers). Creation is serialized; execution via
// fftw_execute_dft_r2c is thread-safe.
class PlanCache {
public:
    fftw_plan r2c(std::size_t n) {
        std::lock_guard lock(mutex_);
        auto it = plans_.find(n);
        if (it != plans_.end()) return it->second;
        std::vector<double> in(n);
        std::vector<std::complex<double>> out(n / 2 + 1);
        fftw_plan plan = fftw_plan_dft_r2c_1d(
            static_cast<int>(n), in.data(),
            reinterpret_cast<fftw_complex*>(out.data()),
            FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (plan == nullptr) throw std::runtime_error("fftw plan creation failed");
        plans_.emplace(n, plan);
        return plan;
    }

    ~PlanCache() {
        for (auto& [n, plan] : plans_) fftw_destroy_plan(plan);
    }

private:
    std::mutex mutex_;
    std::unordered_map<std::size_t, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache instance;
    return instance;
}

}  // namespace

std::vector<std::complex<double>> rfft(std::span<const double> x) {
    if (x.empty()) throw std::invalid_argument("rfft: empty input");
    const std::size_t n = x.size();
    fftw_plan plan = cache().r2c(n);
    std::vector<double> in(x.begin(), x.end());
    std::vector<std::complex<double>> out(n / 2 + 1);
    fftw_execute_dft_r2c(plan, in.data(),
                         reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

std::vector<double> dft_power_full(std::span<const double> x) {
    const std::size_t n = x.size();
    const auto half = rfft(x);
    std::vector<double> power(n);
    for (std::size_t i = 0; i < half.size(); ++i) power[i] = std::norm(half[i]);
    for (std::size_t i = half.size(); i < n; ++i) power[i] = power[n - i];
    return power;
}

}  // namespace iriscap
