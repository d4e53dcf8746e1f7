#include "iriscap/ar_model.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "iriscap/errors.hpp"
#include "iriscap/fft.hpp"
#include "iriscap/rng.hpp"

namespace iriscap {

SpectrumEstimate::SpectrumEstimate(std::vector<double> values)
    : values_(std::move(values)) {
    if (values_.empty()) {
        throw std::invalid_argument("SpectrumEstimate: empty value list");
    }
    for (double v : values_) {
        if (!std::isfinite(v) || v <= 0.0) {
            throw std::invalid_argument(
                "SpectrumEstimate: values must be finite and strictly positive");
        }
    }
}

std::vector<std::complex<double>> characteristic_roots(const ArModel& model) {
    const std::size_t p = model.order();
    if (p == 0) return {};
    // Companion matrix of z^p - a1 z^{p-1} - ... - ap.
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(p, p);
    for (std::size_t j = 0; j < p; ++j) companion(0, j) = model.coeffs[j];
    for (std::size_t i = 1; i < p; ++i) companion(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    std::vector<std::complex<double>> roots(p);
    for (std::size_t i = 0; i < p; ++i) roots[i] = solver.eigenvalues()(i);
    return roots;
}

bool is_stable(const ArModel& model) {
    if (!(model.noise_variance > 0.0) || !std::isfinite(model.noise_variance)) {
        return false;
    }
    for (double c : model.coeffs) {
        if (!std::isfinite(c)) return false;
    }
    for (const auto& root : characteristic_roots(model)) {
        if (std::abs(root) >= 1.0 - kStabilityMargin) return false;
    }
    return true;
}

SpectrumEstimate psd_of_model(const ArModel& model, std::size_t n_bins) {
    if (n_bins < 2) throw std::invalid_argument("psd_of_model: n_bins must be >= 2");
    if (!is_stable(model)) {
        throw UnstableModelError("psd_of_model: model is not strictly stable");
    }
    // Denominator sequence a = [1, -alpha_1, ..., -alpha_p], folded modulo
    // n_bins (exact: exp(-j2pi i k/n) is n-periodic in k).
    std::vector<double> denom_coeffs(n_bins, 0.0);
    denom_coeffs[0] += 1.0;
    for (std::size_t k = 1; k <= model.order(); ++k) {
        denom_coeffs[k % n_bins] -= model.coeffs[k - 1];
    }
    const auto denom_power = dft_power_full(denom_coeffs);
    std::vector<double> values(n_bins);
    for (std::size_t i = 0; i < n_bins; ++i) {
        if (!(denom_power[i] > 1e-280)) {
            throw UnstableModelError(
                "psd_of_model: transfer function denominator vanishes on the grid");
        }
        values[i] = model.noise_variance / denom_power[i];
    }
    return SpectrumEstimate(std::move(values));
}

std::size_t default_burn_in(const ArModel& model) {
    return std::max<std::size_t>(10 * model.order(), 500);
}

SignalVector synthesize(const ArModel& model, std::size_t length,
                        std::uint64_t seed, std::size_t burn_in) {
    if (length == 0) throw std::invalid_argument("synthesize: length must be >= 1");
    if (!is_stable(model)) {
        throw UnstableModelError("synthesize: model is not strictly stable");
    }
    const std::size_t p = model.order();
    RandomEngine engine = make_engine(seed);
    std::normal_distribution<double> noise(0.0, std::sqrt(model.noise_variance));

    SignalVector out;
    out.samples.resize(length);
    // Circular history of the last p values, zero-initialized prehistory.
    std::vector<double> history(std::max<std::size_t>(p, 1), 0.0);
    std::size_t head = 0;
    const std::size_t total = burn_in + length;
    for (std::size_t t = 0; t < total; ++t) {
        double value = noise(engine);
        for (std::size_t i = 1; i <= p; ++i) {
            value += model.coeffs[i - 1] * history[(head + p - i) % p];
        }
        if (p > 0) {
            history[head] = value;
            head = (head + 1) % p;
        }
        if (t >= burn_in) out.samples[t - burn_in] = value;
    }
    return out;
}

SignalVector synthesize(const ArModel& model, std::size_t length,
                        std::uint64_t seed) {
    return synthesize(model, length, seed, default_burn_in(model));
}

}  // namespace iriscap
