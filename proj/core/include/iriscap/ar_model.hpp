#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "iriscap/signal.hpp"

namespace iriscap {

/// Autoregressive model X_t = sum_{i=1..p} coeffs[i-1] * X_{t-i} + eta_t,
/// driven by zero-mean white Gaussian noise with variance noise_variance.
///
/// The transfer function is H(f) = 1 / sum_{k=0..p} a_k exp(-j 2 pi f k)
/// with denominator coefficients a_0 = 1, a_k = -coeffs[k-1]; this makes the
/// recursion, H(f), and the PSD sigma^2 |H(f)|^2 mutually consistent.
struct ArModel {
    std::vector<double> coeffs;   // alpha_1 .. alpha_p
    double noise_variance = 1.0;  // sigma^2_eta > 0

    std::size_t order() const noexcept { return coeffs.size(); }
};

/// Roots must stay strictly inside |z| < 1 - kStabilityMargin for a model to
/// count as stable; keeps marginal spectra from blowing up.
inline constexpr double kStabilityMargin = 1e-6;

/// Roots of z^p - alpha_1 z^{p-1} - ... - alpha_p (companion-matrix
/// eigenvalues). Empty for order 0.
std::vector<std::complex<double>> characteristic_roots(const ArModel& model);

/// True iff every characteristic root has modulus < 1 - kStabilityMargin
/// and noise_variance > 0.
bool is_stable(const ArModel& model);

/// Samples sigma^2 |H(f_i)|^2 on the uniform n_bins-point grid f_i = i/n.
/// The grid mean of the result equals the process variance (up to
/// discretization). Throws UnstableModelError / std::invalid_argument.
SpectrumEstimate psd_of_model(const ArModel& model, std::size_t n_bins);

/// Burn-in long enough for transients of poles up to |0.99| to decay.
std::size_t default_burn_in(const ArModel& model);

/// Draws one realization of the model, discarding `burn_in` initial samples.
/// Deterministic for a given seed.
SignalVector synthesize(const ArModel& model, std::size_t length,
                        std::uint64_t seed, std::size_t burn_in);
SignalVector synthesize(const ArModel& model, std::size_t length,
                        std::uint64_t seed);

}  // namespace iriscap
