#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "iriscap/signal.hpp"

namespace iriscap {

/// A pre-segmented, unwrapped iris texture strip. Row 0 is the
/// pupil-adjacent side; columns run along the angular direction.
struct NormalizedImage {
    Eigen::MatrixXd pixels;
    std::string class_id;
    std::string sample_id;
};

struct GaborParams {
    double center_frequency = 1.0 / 9.0;  // cycles/pixel, in (0, 0.5)
    double bandwidth = 0.5;               // dimensionless kernel width
};

/// Complex Gabor kernel: Gaussian envelope of width s = bandwidth /
/// center_frequency (pixels), carrier exp(j 2 pi f0 x) along the column
/// axis, truncated at |x|,|y| <= 3s and DC-compensated (zero kernel sum).
Eigen::MatrixXcd gabor_kernel(const GaborParams& params);

/// Convolves (true convolution) the image with the Gabor kernel under
/// symmetric boundary reflection; output has the same dimensions.
/// Throws when the kernel does not fit inside the image.
Eigen::MatrixXcd gabor_filter(const NormalizedImage& image,
                              const GaborParams& params);

/// Keeps the ceil(rows/2) rows adjacent to row 0 (the pupil boundary).
Eigen::MatrixXcd crop_half(const Eigen::MatrixXcd& filtered);

/// Anti-diagonal alternating scan from the top-left to the bottom-right
/// corner; a bijection onto 0..rows*cols-1.
std::vector<double> zigzag(const Eigen::MatrixXd& matrix);

/// Zigzag of the real part followed by zigzag of the imaginary part,
/// concatenated and mean-centered. Output length is 2*rows*cols.
SignalVector vectorize(const Eigen::MatrixXcd& filtered,
                       std::string class_id = {}, std::string sample_id = {});

}  // namespace iriscap
