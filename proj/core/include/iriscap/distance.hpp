#pragma once

#include <Eigen/Dense>

#include <span>
#include <string>
#include <vector>

#include "iriscap/ar_model.hpp"
#include "iriscap/signal.hpp"

namespace iriscap {

/// |DFT|^2 / n on the full n-point grid, optionally averaged over several
/// images of one class. Bins are non-negative (zero is legal, unlike
/// SpectrumEstimate) and the bin mean equals the signal power.
struct Periodogram {
    std::vector<double> values;
    std::size_t n_images_averaged = 1;

    std::size_t n_bins() const noexcept { return values.size(); }
};

Periodogram periodogram(const SignalVector& x);
Periodogram avg_periodogram(std::span<const SignalVector> xs);

/// Asymptotic log-likelihood ratio for "class m" vs "class k" given the
/// averaged query periodogram:
///   Lambda(m,k) = -sum_i [ (1/S_m - 1/S_k) * pav_i + ln(S_m / S_k) ].
/// Positive values favor class m; with pav set bin-wise to S_m this equals
/// relative_entropy(S_m, S_k) exactly.
double loglik_asymptotic(const SpectrumEstimate& s_m, const SpectrumEstimate& s_k,
                         const Periodogram& pav);

/// d(m,k) = sum_i [ S_m/S_k - ln(S_m/S_k) - 1 ]  >= 0, the expected
/// log-likelihood ratio under class m. Asymmetric in its arguments.
double relative_entropy(const SpectrumEstimate& s_m, const SpectrumEstimate& s_k);

/// Exact autocovariance sequence r_0..r_max_lag of a stable AR model
/// (Yule-Walker system for lags 0..p, linear recursion beyond).
std::vector<double> ar_autocovariance(const ArModel& model, std::size_t max_lag);

/// n x n Toeplitz covariance built from ar_autocovariance.
Eigen::MatrixXd toeplitz_covariance(const ArModel& model, std::size_t n);

struct ExactLoglikOptions {
    std::size_t max_dimension = 512;  // test-oracle scale cap
    double condition_cap = 1e12;      // spectral bound max(S)/min(S)
};

/// Exact Gaussian log-likelihood ratio
///   -(1/2N) sum_j Y_j' (K_m^{-1} - K_k^{-1}) Y_j - (1/2) ln det(K_m K_k^{-1})
/// with Toeplitz covariances from the exact AR autocovariances. Note the
/// asymptotic statistic above sums over the full frequency grid and is
/// therefore twice this quantity for large n.
double loglik_exact(std::span<const SignalVector> ys, const ArModel& model_m,
                    const ArModel& model_k, const ExactLoglikOptions& options = {});

enum class Hypothesis { ClassM, ClassK };

/// Lambda > threshold decides class m; ties go to class k. Default
/// threshold 0.
Hypothesis decide(double loglik, double threshold = 0.0);

/// Density of one per-bin component of the averaged log-likelihood under
/// H_m: an N-Erlang variable shifted by a = ln(S_m/S_k) with scale
/// s2 = 1 - S_m/S_k (requires s2 > 0, i.e. S_m < S_k at that bin).
double erlang_pdf(double x, std::size_t n_images, double a, double s2);

/// CDF matching erlang_pdf.
double erlang_cdf(double x, std::size_t n_images, double a, double s2);

/// One enrolled class: template spectrum plus the averaged periodogram of
/// its held-out authentication vectors.
struct ClassRecord {
    std::string id;
    SpectrumEstimate enrollment;
    Periodogram auth_pav;
};

struct PairScore {
    std::string class_m;
    std::string class_k;
    double loglik = 0.0;
    double rel_entropy = 0.0;
};

/// All M(M-1) ordered pair scores, sorted lexicographically by
/// (class_m, class_k). Pairs are evaluated in parallel when threads > 1.
std::vector<PairScore> pairwise_scores(std::span<const ClassRecord> classes,
                                       unsigned threads = 1);

}  // namespace iriscap
