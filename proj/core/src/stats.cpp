#include "iriscap/stats.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace iriscap {

double regularized_gamma_p(double shape, double x) {
    if (shape <= 0.0) throw std::invalid_argument("gamma_p: shape must be > 0");
    if (x <= 0.0) return 0.0;
    return boost::math::gamma_p(shape, x);
}

double gamma_pdf(double x, double shape, double scale) {
    if (shape <= 0.0 || scale <= 0.0) {
        throw std::invalid_argument("gamma_pdf: shape and scale must be > 0");
    }
    if (x < 0.0) return 0.0;
    if (x == 0.0) {
        if (shape > 1.0) return 0.0;
        if (shape == 1.0) return 1.0 / scale;
        return std::numeric_limits<double>::infinity();
    }
    const double log_pdf = (shape - 1.0) * std::log(x) - x / scale -
                           std::lgamma(shape) - shape * std::log(scale);
    return std::exp(log_pdf);
}

double ks_statistic(std::span<const double> samples,
                    const std::function<double(double)>& cdf) {
    if (samples.empty()) throw std::invalid_argument("ks_statistic: no samples");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i]);
        d = std::max(d, f - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - f);
    }
    return d;
}

double ks_critical_value(double alpha, std::size_t n) {
    if (n == 0) throw std::invalid_argument("ks_critical_value: n == 0");
    // c(alpha) = sqrt(-ln(alpha/2)/2) from the Kolmogorov tail formula.
    const double c = std::sqrt(-0.5 * std::log(alpha / 2.0));
    return c / std::sqrt(static_cast<double>(n));
}

double mean(std::span<const double> xs) {
    if (xs.empty()) throw std::invalid_argument("mean: empty input");
    double sum = 0.0, comp = 0.0;
    for (double x : xs) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
    if (xs.size() < 2) throw std::invalid_argument("sample_variance: need >= 2");
    const double m = mean(xs);
    double acc = 0.0;
    for (double x : xs) acc += (x - m) * (x - m);
    return acc / static_cast<double>(xs.size() - 1);
}

}  // namespace iriscap
