#pragma once

#include <complex>
#include <span>
#include <vector>

namespace iriscap {

/// Forward DFT of a real sequence; returns bins 0..n/2 (the rest follow by
/// conjugate symmetry). Thread-safe; plans are cached per length.
std::vector<std::complex<double>> rfft(std::span<const double> x);

/// |DFT(x)|^2 on the full n-point grid. The upper half is mirrored from the
/// lower half so conjugate symmetry holds exactly, bit for bit.
std::vector<double> dft_power_full(std::span<const double> x);

}  // namespace iriscap
