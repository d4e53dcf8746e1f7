#include "iriscap/distance.hpp"

#include <Eigen/Cholesky>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "iriscap/errors.hpp"
#include "iriscap/fft.hpp"
#include "iriscap/stats.hpp"
#include "parallel.hpp"

namespace iriscap {

namespace {

// Numerically-zero bins are floored before ratios/logs.
constexpr double kSpectrumFloor = 1e-30;

void require_same_grid(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw GridMismatchError(std::string(what) + ": mismatched grids");
}

void require_positive_spectrum(const SpectrumEstimate& s, const char* what) {
    if (s.n_bins() == 0) throw std::invalid_argument(std::string(what) + ": empty spectrum");
}

}  // namespace

Periodogram periodogram(const SignalVector& x) {
    if (x.size() < 2) throw std::invalid_argument("periodogram: need length >= 2");
    const std::size_t n = x.size();
    Periodogram out;
    out.values = dft_power_full(x.samples);
    const double scale = 1.0 / static_cast<double>(n);
    for (double& v : out.values) v *= scale;
    out.n_images_averaged = 1;
    return out;
}

Periodogram avg_periodogram(std::span<const SignalVector> xs) {
    if (xs.empty()) throw std::invalid_argument("avg_periodogram: no vectors");
    const std::size_t n = xs.front().size();
    Periodogram acc = periodogram(xs.front());
    for (std::size_t j = 1; j < xs.size(); ++j) {
        if (xs[j].size() != n) {
            throw GridMismatchError("avg_periodogram: mismatched vector lengths");
        }
        const Periodogram p = periodogram(xs[j]);
        for (std::size_t i = 0; i < n; ++i) acc.values[i] += p.values[i];
    }
    const double scale = 1.0 / static_cast<double>(xs.size());
    for (double& v : acc.values) v *= scale;
    acc.n_images_averaged = xs.size();
    return acc;
}

double loglik_asymptotic(const SpectrumEstimate& s_m, const SpectrumEstimate& s_k,
                         const Periodogram& pav) {
    require_positive_spectrum(s_m, "loglik_asymptotic");
    require_same_grid(s_m.n_bins(), s_k.n_bins(), "loglik_asymptotic");
    require_same_grid(s_m.n_bins(), pav.n_bins(), "loglik_asymptotic");
    double sum = 0.0;
    for (std::size_t i = 0; i < s_m.n_bins(); ++i) {
        const double sm = std::max(s_m[i], kSpectrumFloor);
        const double sk = std::max(s_k[i], kSpectrumFloor);
        // log(sm) - log(sk) rather than log(sm/sk): makes the antisymmetry
        // Lambda(m,k) = -Lambda(k,m) hold bit-exactly.
        sum += -((1.0 / sm - 1.0 / sk) * pav.values[i] + (std::log(sm) - std::log(sk)));
    }
    return sum;
}

double relative_entropy(const SpectrumEstimate& s_m, const SpectrumEstimate& s_k) {
    require_positive_spectrum(s_m, "relative_entropy");
    require_same_grid(s_m.n_bins(), s_k.n_bins(), "relative_entropy");
    double sum = 0.0;
    for (std::size_t i = 0; i < s_m.n_bins(); ++i) {
        const double sm = std::max(s_m[i], kSpectrumFloor);
        const double sk = std::max(s_k[i], kSpectrumFloor);
        sum += sm / sk - (std::log(sm) - std::log(sk)) - 1.0;
    }
    return std::max(sum, 0.0);
}

std::vector<double> ar_autocovariance(const ArModel& model, std::size_t max_lag) {
    if (!is_stable(model)) {
        throw UnstableModelError("ar_autocovariance: model is not strictly stable");
    }
    const std::size_t p = model.order();
    std::vector<double> r(max_lag + 1, 0.0);
    if (p == 0) {
        r[0] = model.noise_variance;
        return r;
    }
    // Yule-Walker block for lags 0..p:
    //   r_j - sum_i alpha_i r_{|j-i|} = sigma^2 [j == 0]
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(p + 1, p + 1);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(p + 1);
    b(0) = model.noise_variance;
    for (std::size_t j = 0; j <= p; ++j) {
        a(j, j) += 1.0;
        for (std::size_t i = 1; i <= p; ++i) {
            const std::size_t lag = j >= i ? j - i : i - j;
            a(j, lag) -= model.coeffs[i - 1];
        }
    }
    const Eigen::VectorXd head = a.colPivHouseholderQr().solve(b);
    for (std::size_t j = 0; j <= std::min(p, max_lag); ++j) r[j] = head(j);
    for (std::size_t t = p + 1; t <= max_lag; ++t) {
        double v = 0.0;
        for (std::size_t i = 1; i <= p; ++i) v += model.coeffs[i - 1] * r[t - i];
        r[t] = v;
    }
    return r;
}

Eigen::MatrixXd toeplitz_covariance(const ArModel& model, std::size_t n) {
    if (n == 0) throw std::invalid_argument("toeplitz_covariance: n must be >= 1");
    const auto r = ar_autocovariance(model, n - 1);
    Eigen::MatrixXd cov(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cov(i, j) = r[i >= j ? i - j : j - i];
        }
    }
    return cov;
}

namespace {

// Grenander-Szego: Toeplitz covariance eigenvalues lie within the range of
// the spectral density, so max(S)/min(S) bounds the condition number.
double condition_bound(const ArModel& model) {
    const auto spectrum = psd_of_model(model, 4096);
    const auto [lo, hi] =
        std::minmax_element(spectrum.values().begin(), spectrum.values().end());
    return *hi / *lo;
}

}  // namespace

double loglik_exact(std::span<const SignalVector> ys, const ArModel& model_m,
                    const ArModel& model_k, const ExactLoglikOptions& options) {
    if (ys.empty()) throw std::invalid_argument("loglik_exact: no query vectors");
    const std::size_t n = ys.front().size();
    if (n == 0) throw std::invalid_argument("loglik_exact: empty query vector");
    if (n > options.max_dimension) {
        throw std::invalid_argument("loglik_exact: dimension exceeds the oracle cap");
    }
    for (const auto& y : ys) {
        if (y.size() != n) throw GridMismatchError("loglik_exact: mismatched lengths");
    }
    if (std::max(condition_bound(model_m), condition_bound(model_k)) >
        options.condition_cap) {
        throw Error("loglik_exact: covariance condition number beyond cap");
    }

    const Eigen::MatrixXd cov_m = toeplitz_covariance(model_m, n);
    const Eigen::MatrixXd cov_k = toeplitz_covariance(model_k, n);
    const Eigen::LLT<Eigen::MatrixXd> llt_m(cov_m);
    const Eigen::LLT<Eigen::MatrixXd> llt_k(cov_k);
    if (llt_m.info() != Eigen::Success || llt_k.info() != Eigen::Success) {
        throw Error("loglik_exact: covariance factorization failed");
    }

    auto log_det = [](const Eigen::LLT<Eigen::MatrixXd>& llt) {
        return 2.0 * llt.matrixLLT().diagonal().array().log().sum();
    };

    double quad = 0.0;
    Eigen::VectorXd y(n);
    for (const auto& sample : ys) {
        for (std::size_t i = 0; i < n; ++i) y(i) = sample.samples[i];
        quad += y.dot(llt_m.solve(y)) - y.dot(llt_k.solve(y));
    }
    const double n_images = static_cast<double>(ys.size());
    return -quad / (2.0 * n_images) - 0.5 * (log_det(llt_m) - log_det(llt_k));
}

Hypothesis decide(double loglik, double threshold) {
    return loglik > threshold ? Hypothesis::ClassM : Hypothesis::ClassK;
}

double erlang_pdf(double x, std::size_t n_images, double a, double s2) {
    if (n_images == 0) throw std::invalid_argument("erlang_pdf: n_images must be >= 1");
    if (!(s2 > 0.0)) {
        throw std::invalid_argument(
            "erlang_pdf: scale 1 - S_m/S_k must be positive (requires S_m < S_k)");
    }
    if (x <= a) return 0.0;
    const double n = static_cast<double>(n_images);
    const double t = x - a;
    if (n_images == 1) return std::exp(-t / s2) / s2;
    const double log_pdf = n * std::log(n / s2) + (n - 1.0) * std::log(t) -
                           n * t / s2 - std::lgamma(n);
    return std::exp(log_pdf);
}

double erlang_cdf(double x, std::size_t n_images, double a, double s2) {
    if (n_images == 0) throw std::invalid_argument("erlang_cdf: n_images must be >= 1");
    if (!(s2 > 0.0)) throw std::invalid_argument("erlang_cdf: scale must be positive");
    if (x <= a) return 0.0;
    const double n = static_cast<double>(n_images);
    return regularized_gamma_p(n, n * (x - a) / s2);
}

std::vector<PairScore> pairwise_scores(std::span<const ClassRecord> classes,
                                       unsigned threads) {
    if (classes.size() < 2) {
        throw std::invalid_argument("pairwise_scores: need at least 2 classes");
    }
    std::vector<std::size_t> order(classes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return classes[a].id < classes[b].id;
    });

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(classes.size() * (classes.size() - 1));
    for (std::size_t m : order) {
        for (std::size_t k : order) {
            if (m != k) pairs.emplace_back(m, k);
        }
    }

    std::vector<PairScore> scores(pairs.size());
    detail::parallel_chunks(pairs.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            const auto& [m, k] = pairs[idx];
            PairScore& score = scores[idx];
            score.class_m = classes[m].id;
            score.class_k = classes[k].id;
            score.rel_entropy =
                relative_entropy(classes[m].enrollment, classes[k].enrollment);
            score.loglik = loglik_asymptotic(classes[m].enrollment,
                                             classes[k].enrollment,
                                             classes[m].auth_pav);
        }
    });
    return scores;
}

}  // namespace iriscap
