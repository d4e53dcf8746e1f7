#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace iriscap {

/// A real-valued feature vector (vectorized image or synthetic realization).
struct SignalVector {
    std::vector<double> samples;
    std::string class_id;
    std::string sample_id;

    std::size_t size() const noexcept { return samples.size(); }
};

/// Sampled power spectral density on the uniform full grid f_i = i/n,
/// i = 0..n-1. Values are strictly positive and finite; spectra of real
/// signals satisfy S(f_i) == S(f_{n-i}).
class SpectrumEstimate {
public:
    SpectrumEstimate() = default;

    /// Validates positivity/finiteness; throws std::invalid_argument.
    explicit SpectrumEstimate(std::vector<double> values);

    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t n_bins() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }

private:
    std::vector<double> values_;
};

}  // namespace iriscap
