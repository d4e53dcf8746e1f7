#pragma once

#include <span>
#include <string>
#include <vector>

namespace iriscap {

/// Density-normalized histogram over equal-width bins spanning [0, max].
struct ScoreHistogram {
    std::vector<double> bin_edges;  // n_bins + 1, strictly increasing
    std::vector<double> densities;  // probability per unit score
    std::size_t sample_count = 0;

    std::size_t n_bins() const noexcept { return densities.size(); }
    double bin_center(std::size_t b) const {
        return 0.5 * (bin_edges[b] + bin_edges[b + 1]);
    }
};

/// Requires >= 30 finite, non-negative scores with a non-degenerate range.
ScoreHistogram build_histogram(std::span<const double> scores, std::size_t n_bins);

/// Two defensible readings of the fitted "chi-square" family; both have
/// mean K * P, and the sphere-packing bound depends only on (K, P).
enum class ChiSquareParameterization {
    GammaShapeK,   // Gamma(shape K, scale P): sum of K squared complex Gaussians
    ChiSquareDof,  // Gamma(shape K/2, scale 2P): chi-square with K dof, scaled
};

std::string to_string(ChiSquareParameterization p);
ChiSquareParameterization parameterization_from_string(const std::string& s);

/// Density of the fitted family at x >= 0.
double model_pdf(double x, std::size_t dof, double scale,
                 ChiSquareParameterization parameterization =
                     ChiSquareParameterization::GammaShapeK);

/// Best-fit degrees of freedom K and per-entry variance P; lse is the grid
/// minimum of the squared density error.
struct ImposterFit {
    std::size_t dof = 1;
    double scale = 1.0;
    double lse = 0.0;
    ChiSquareParameterization parameterization =
        ChiSquareParameterization::GammaShapeK;
};

/// 200 log-spaced points spanning [mean / (10 * k_max), 10 * mean].
std::vector<double> default_scale_grid(double score_mean, std::size_t k_max,
                                       std::size_t points = 200);

/// Exhaustive least-squares search over dof in [k_min, k_max] and the scale
/// grid; ties broken toward smaller K, then smaller P. Deterministic
/// regardless of thread count.
ImposterFit fit_chisquare(const ScoreHistogram& hist, std::size_t k_min,
                          std::size_t k_max, std::span<const double> scale_grid,
                          ChiSquareParameterization parameterization =
                              ChiSquareParameterization::GammaShapeK,
                          unsigned threads = 1);

/// False match rate: CDF of the fitted family at tau.
double fmr(const ImposterFit& fit, double tau);

}  // namespace iriscap
