#pragma once

#include <span>
#include <vector>

#include "iriscap/ar_model.hpp"
#include "iriscap/signal.hpp"

namespace iriscap {

/// Burg (maximum entropy) AR estimate of the given order: minimizes the
/// summed forward+backward prediction error via reflection-coefficient /
/// Levinson updates. The sample mean is removed before estimation. The
/// returned model is always stable.
///
/// Throws InvalidOrderError when order + 1 >= length and
/// DegenerateSignalError for constant/all-zero input.
ArModel burg_estimate(const SignalVector& x, std::size_t order);

/// AIC = n * ln(residual variance at `order`) + 2 * order, with the residual
/// variance taken from the Burg recursion.
double aic_score(const SignalVector& x, std::size_t order);

struct OrderSelectConfig {
    /// The AIC curve counts as converged once the relative improvement over
    /// the previous candidate drops below this.
    double rel_tolerance = 1e-3;
};

/// Averages aic_score across vectors for every candidate order and returns
/// the first candidate whose improvement over the previous one falls below
/// the configured relative tolerance; falls back to the argmin of the
/// average curve (ties toward the smaller order).
std::size_t select_order(std::span<const SignalVector> x_set,
                         std::span<const std::size_t> candidate_orders,
                         const OrderSelectConfig& config = {});

/// One pass of the Burg recursion up to max_order; sigma2[m] is the residual
/// variance of the order-m model (sigma2[0] is the centered signal power).
/// Exposed because AIC sweeps reuse a single recursion across orders.
struct BurgRecursion {
    std::vector<double> reflection;  // k_1 .. k_maxorder
    std::vector<double> sigma2;      // size maxorder + 1
    std::vector<double> coeffs;      // alpha of the final order
};
BurgRecursion burg_recursion(std::span<const double> samples, std::size_t max_order);

}  // namespace iriscap
