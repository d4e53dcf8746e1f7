#include "iriscap/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "iriscap/errors.hpp"
#include "iriscap/stats.hpp"
#include "parallel.hpp"

namespace iriscap {

ScoreHistogram build_histogram(std::span<const double> scores, std::size_t n_bins) {
    if (n_bins == 0) throw std::invalid_argument("build_histogram: n_bins must be >= 1");
    if (scores.size() < 30) {
        throw InsufficientDataError("build_histogram: need at least 30 scores");
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (double s : scores) {
        if (!std::isfinite(s)) {
            throw std::invalid_argument("build_histogram: non-finite score");
        }
        if (s < 0.0) {
            throw std::invalid_argument("build_histogram: negative score");
        }
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    if (lo == hi) {
        throw InsufficientDataError("build_histogram: zero-width score range");
    }

    ScoreHistogram hist;
    hist.sample_count = scores.size();
    hist.bin_edges.resize(n_bins + 1);
    const double width = hi / static_cast<double>(n_bins);
    for (std::size_t b = 0; b <= n_bins; ++b) {
        hist.bin_edges[b] = width * static_cast<double>(b);
    }
    hist.bin_edges.back() = hi;

    std::vector<std::size_t> counts(n_bins, 0);
    for (double s : scores) {
        auto b = static_cast<std::size_t>(s / width);
        if (b >= n_bins) b = n_bins - 1;  // s == hi lands in the last bin
        ++counts[b];
    }
    hist.densities.resize(n_bins);
    const double norm = 1.0 / (static_cast<double>(scores.size()) * width);
    for (std::size_t b = 0; b < n_bins; ++b) {
        hist.densities[b] = static_cast<double>(counts[b]) * norm;
    }
    return hist;
}

std::string to_string(ChiSquareParameterization p) {
    return p == ChiSquareParameterization::GammaShapeK ? "gamma_k" : "chi_square_dof";
}

ChiSquareParameterization parameterization_from_string(const std::string& s) {
    if (s == "gamma_k") return ChiSquareParameterization::GammaShapeK;
    if (s == "chi_square_dof") return ChiSquareParameterization::ChiSquareDof;
    throw std::invalid_argument("unknown parameterization '" + s + "'");
}

namespace {

std::pair<double, double> shape_scale(std::size_t dof, double scale,
                                      ChiSquareParameterization p) {
    if (dof == 0) throw std::invalid_argument("model_pdf: dof must be >= 1");
    if (!(scale > 0.0)) throw std::invalid_argument("model_pdf: scale must be > 0");
    if (p == ChiSquareParameterization::GammaShapeK) {
        return {static_cast<double>(dof), scale};
    }
    return {static_cast<double>(dof) / 2.0, 2.0 * scale};
}

}  // namespace

double model_pdf(double x, std::size_t dof, double scale,
                 ChiSquareParameterization parameterization) {
    const auto [shape, gamma_scale] = shape_scale(dof, scale, parameterization);
    return gamma_pdf(x, shape, gamma_scale);
}

std::vector<double> default_scale_grid(double score_mean, std::size_t k_max,
                                       std::size_t points) {
    if (!(score_mean > 0.0)) {
        throw std::invalid_argument("default_scale_grid: mean must be > 0");
    }
    if (k_max == 0 || points < 2) {
        throw std::invalid_argument("default_scale_grid: bad grid shape");
    }
    const double lo = score_mean / (10.0 * static_cast<double>(k_max));
    const double hi = 10.0 * score_mean;
    std::vector<double> grid(points);
    const double step = (std::log(hi) - std::log(lo)) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        grid[i] = std::exp(std::log(lo) + step * static_cast<double>(i));
    }
    return grid;
}

ImposterFit fit_chisquare(const ScoreHistogram& hist, std::size_t k_min,
                          std::size_t k_max, std::span<const double> scale_grid,
                          ChiSquareParameterization parameterization,
                          unsigned threads) {
    if (hist.n_bins() < 2 || hist.sample_count == 0) {
        throw std::invalid_argument("fit_chisquare: degenerate histogram");
    }
    if (k_min == 0 || k_min > k_max) {
        throw std::invalid_argument("fit_chisquare: bad dof range");
    }
    if (scale_grid.empty()) {
        throw std::invalid_argument("fit_chisquare: empty scale grid");
    }

    std::vector<double> centers(hist.n_bins());
    for (std::size_t b = 0; b < hist.n_bins(); ++b) centers[b] = hist.bin_center(b);

    const std::size_t n_k = k_max - k_min + 1;
    std::vector<double> best_lse(n_k, std::numeric_limits<double>::infinity());
    std::vector<std::size_t> best_scale_idx(n_k, 0);

    detail::parallel_chunks(n_k, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t ki = begin; ki < end; ++ki) {
            const std::size_t dof = k_min + ki;
            for (std::size_t si = 0; si < scale_grid.size(); ++si) {
                double lse = 0.0;
                for (std::size_t b = 0; b < centers.size(); ++b) {
                    const double diff = hist.densities[b] -
                        model_pdf(centers[b], dof, scale_grid[si], parameterization);
                    lse += diff * diff;
                }
                // Strict '<' keeps the first (smallest scale) on ties.
                if (lse < best_lse[ki]) {
                    best_lse[ki] = lse;
                    best_scale_idx[ki] = si;
                }
            }
        }
    });

    // Sequential reduction in ascending dof order: ties go to the smaller K.
    std::size_t best_k = 0;
    for (std::size_t ki = 1; ki < n_k; ++ki) {
        if (best_lse[ki] < best_lse[best_k]) best_k = ki;
    }
    ImposterFit fit;
    fit.dof = k_min + best_k;
    fit.scale = scale_grid[best_scale_idx[best_k]];
    fit.lse = best_lse[best_k];
    fit.parameterization = parameterization;
    return fit;
}

double fmr(const ImposterFit& fit, double tau) {
    if (tau < 0.0) throw std::invalid_argument("fmr: tau must be >= 0");
    const auto [shape, gamma_scale] =
        shape_scale(fit.dof, fit.scale, fit.parameterization);
    return regularized_gamma_p(shape, tau / gamma_scale);
}

}  // namespace iriscap
