#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace iriscap {

/// Regularized lower incomplete gamma P(shape, x); the CDF of a unit-scale
/// gamma variable.
double regularized_gamma_p(double shape, double x);

/// Gamma density with given shape and scale; 0 for x < 0.
double gamma_pdf(double x, double shape, double scale);

/// Two-sided Kolmogorov-Smirnov statistic of samples against a CDF.
/// Sorts a copy of the samples.
double ks_statistic(std::span<const double> samples,
                    const std::function<double(double)>& cdf);

/// Asymptotic KS critical value at significance alpha for n samples
/// (c(alpha) * sqrt(1/n), valid for large n).
double ks_critical_value(double alpha, std::size_t n);

/// Mean of a sequence; Kahan-compensated.
double mean(std::span<const double> xs);

/// Unbiased sample variance.
double sample_variance(std::span<const double> xs);

}  // namespace iriscap
