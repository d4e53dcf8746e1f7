#include "iriscap/burg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "iriscap/errors.hpp"
#include "iriscap/stats.hpp"

namespace iriscap {

namespace {

// Reflection coefficients are capped just inside the unit circle so the
// estimated model always clears the stability margin, even on nearly
// unit-root data.
constexpr double kMaxReflection = 1.0 - 1e-5;

void validate_input(std::span<const double> samples, std::size_t order) {
    if (order == 0) throw InvalidOrderError("burg: order must be >= 1");
    if (samples.size() <= order + 1) {
        throw InvalidOrderError("burg: need more than order + 1 samples");
    }
    const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
    if (*lo == *hi) {
        throw DegenerateSignalError("burg: constant input has no spectrum");
    }
}

}  // namespace

BurgRecursion burg_recursion(std::span<const double> samples, std::size_t max_order) {
    validate_input(samples, max_order);
    const std::size_t n = samples.size();

    const double m = mean(samples);
    std::vector<double> fwd(n), bwd(n);
    for (std::size_t t = 0; t < n; ++t) fwd[t] = bwd[t] = samples[t] - m;

    BurgRecursion result;
    result.sigma2.resize(max_order + 1);
    result.reflection.resize(max_order);

    double power = 0.0;
    for (double v : fwd) power += v * v;
    power /= static_cast<double>(n);
    result.sigma2[0] = power;
    if (!(power > 0.0)) {
        throw DegenerateSignalError("burg: zero-power input");
    }

    std::vector<double> coeffs;  // alpha of the current order
    coeffs.reserve(max_order);

    for (std::size_t order = 1; order <= max_order; ++order) {
        double num = 0.0, den = 0.0;
        for (std::size_t t = order; t < n; ++t) {
            num += fwd[t] * bwd[t - 1];
            den += fwd[t] * fwd[t] + bwd[t - 1] * bwd[t - 1];
        }
        if (!(den > 0.0)) {
            throw DegenerateSignalError(
                "burg: prediction error vanished (perfectly predictable input)");
        }
        double k = 2.0 * num / den;
        k = std::clamp(k, -kMaxReflection, kMaxReflection);
        result.reflection[order - 1] = k;

        // Levinson update: alpha_new[j] = alpha[j] - k * alpha[order-2-j].
        std::vector<double> next(order);
        next[order - 1] = k;
        for (std::size_t j = 0; j + 1 < order; ++j) {
            next[j] = coeffs[j] - k * coeffs[order - 2 - j];
        }
        coeffs = std::move(next);

        // Both error updates must read the pre-update values; walking
        // backwards keeps bwd[t-1] intact until it is consumed.
        for (std::size_t t = n - 1; t >= order; --t) {
            const double f = fwd[t];
            fwd[t] = f - k * bwd[t - 1];
            bwd[t] = bwd[t - 1] - k * f;
        }

        result.sigma2[order] = result.sigma2[order - 1] * (1.0 - k * k);
        if (!(result.sigma2[order] > 1e-280)) {
            throw DegenerateSignalError(
                "burg: residual variance underflowed (perfectly predictable input)");
        }
    }
    result.coeffs = std::move(coeffs);
    return result;
}

ArModel burg_estimate(const SignalVector& x, std::size_t order) {
    auto recursion = burg_recursion(x.samples, order);
    ArModel model;
    model.coeffs = std::move(recursion.coeffs);
    model.noise_variance = recursion.sigma2[order];
    return model;
}

double aic_score(const SignalVector& x, std::size_t order) {
    const auto recursion = burg_recursion(x.samples, order);
    const double n = static_cast<double>(x.samples.size());
    return n * std::log(recursion.sigma2[order]) + 2.0 * static_cast<double>(order);
}

std::size_t select_order(std::span<const SignalVector> x_set,
                         std::span<const std::size_t> candidate_orders,
                         const OrderSelectConfig& config) {
    if (x_set.empty()) throw std::invalid_argument("select_order: no vectors");
    if (candidate_orders.empty()) {
        throw std::invalid_argument("select_order: no candidate orders");
    }
    std::vector<std::size_t> candidates(candidate_orders.begin(),
                                        candidate_orders.end());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    if (candidates.front() == 0) {
        throw std::invalid_argument("select_order: orders must be positive");
    }
    const std::size_t max_order = candidates.back();

    std::vector<double> avg_aic(candidates.size(), 0.0);
    for (const auto& x : x_set) {
        const auto recursion = burg_recursion(x.samples, max_order);
        const double n = static_cast<double>(x.samples.size());
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            avg_aic[c] += n * std::log(recursion.sigma2[candidates[c]]) +
                          2.0 * static_cast<double>(candidates[c]);
        }
    }
    for (double& a : avg_aic) a /= static_cast<double>(x_set.size());

    for (std::size_t c = 1; c < candidates.size(); ++c) {
        const double improvement = avg_aic[c - 1] - avg_aic[c];
        if (improvement < config.rel_tolerance * std::abs(avg_aic[c - 1])) {
            return candidates[c];
        }
    }
    // Curve still improving at the last candidate: take the argmin,
    // ties toward the smaller order.
    std::size_t best = 0;
    for (std::size_t c = 1; c < candidates.size(); ++c) {
        if (avg_aic[c] < avg_aic[best]) best = c;
    }
    return candidates[best];
}

}  // namespace iriscap
