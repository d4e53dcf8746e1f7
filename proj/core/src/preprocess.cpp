#include "iriscap/preprocess.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "iriscap/errors.hpp"
#include "iriscap/stats.hpp"

namespace iriscap {

namespace {

void validate_params(const GaborParams& params) {
    if (!(params.center_frequency > 0.0) || !(params.center_frequency < 0.5)) {
        throw std::invalid_argument("gabor: center_frequency must be in (0, 0.5)");
    }
    if (!(params.bandwidth > 0.0)) {
        throw std::invalid_argument("gabor: bandwidth must be > 0");
    }
}

// Half-sample symmetric reflection (edge pixel repeated). A single fold is
// enough because the kernel is required to fit inside the image.
inline Eigen::Index reflect(Eigen::Index i, Eigen::Index n) {
    if (i < 0) return -i - 1;
    if (i >= n) return 2 * n - i - 1;
    return i;
}

}  // namespace

Eigen::MatrixXcd gabor_kernel(const GaborParams& params) {
    validate_params(params);
    const double s = params.bandwidth / params.center_frequency;
    const auto radius = std::max<Eigen::Index>(
        1, static_cast<Eigen::Index>(std::floor(3.0 * s)));
    const Eigen::Index size = 2 * radius + 1;

    Eigen::MatrixXcd kernel(size, size);
    std::complex<double> sum{0.0, 0.0};
    for (Eigen::Index i = 0; i < size; ++i) {
        const double y = static_cast<double>(i - radius);
        for (Eigen::Index j = 0; j < size; ++j) {
            const double x = static_cast<double>(j - radius);
            const double envelope = std::exp(-(x * x + y * y) / (2.0 * s * s));
            const double phase = 2.0 * std::numbers::pi * params.center_frequency * x;
            kernel(i, j) = envelope * std::complex<double>(std::cos(phase),
                                                           std::sin(phase));
            sum += kernel(i, j);
        }
    }
    // DC compensation: a constant image must produce zero response.
    kernel.array() -= sum / static_cast<double>(size * size);
    return kernel;
}

Eigen::MatrixXcd gabor_filter(const NormalizedImage& image,
                              const GaborParams& params) {
    const Eigen::Index rows = image.pixels.rows();
    const Eigen::Index cols = image.pixels.cols();
    if (rows < 2 || cols < 2) {
        throw std::invalid_argument("gabor_filter: image must be at least 2x2");
    }
    if (!image.pixels.allFinite()) {
        throw std::invalid_argument("gabor_filter: image has non-finite pixels");
    }
    const Eigen::MatrixXcd kernel = gabor_kernel(params);
    const Eigen::Index radius = (kernel.rows() - 1) / 2;
    if (kernel.rows() > rows || kernel.cols() > cols) {
        throw Error("gabor_filter: kernel larger than image");
    }

    Eigen::MatrixXcd out(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) {
            std::complex<double> acc{0.0, 0.0};
            for (Eigen::Index i = -radius; i <= radius; ++i) {
                const Eigen::Index rr = reflect(r - i, rows);
                for (Eigen::Index j = -radius; j <= radius; ++j) {
                    const Eigen::Index cc = reflect(c - j, cols);
                    acc += kernel(i + radius, j + radius) * image.pixels(rr, cc);
                }
            }
            out(r, c) = acc;
        }
    }
    return out;
}

Eigen::MatrixXcd crop_half(const Eigen::MatrixXcd& filtered) {
    if (filtered.rows() < 2) {
        throw std::invalid_argument("crop_half: need at least 2 rows");
    }
    const Eigen::Index keep = (filtered.rows() + 1) / 2;
    return filtered.topRows(keep);
}

std::vector<double> zigzag(const Eigen::MatrixXd& matrix) {
    const Eigen::Index rows = matrix.rows();
    const Eigen::Index cols = matrix.cols();
    if (rows == 0 || cols == 0) throw std::invalid_argument("zigzag: empty matrix");

    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(rows * cols));
    for (Eigen::Index d = 0; d <= rows + cols - 2; ++d) {
        const Eigen::Index r_lo = std::max<Eigen::Index>(0, d - cols + 1);
        const Eigen::Index r_hi = std::min(d, rows - 1);
        if (d % 2 == 1) {
            for (Eigen::Index r = r_lo; r <= r_hi; ++r) out.push_back(matrix(r, d - r));
        } else {
            for (Eigen::Index r = r_hi; r >= r_lo; --r) out.push_back(matrix(r, d - r));
        }
    }
    return out;
}

SignalVector vectorize(const Eigen::MatrixXcd& filtered, std::string class_id,
                       std::string sample_id) {
    const auto re = zigzag(filtered.real());
    const auto im = zigzag(filtered.imag());

    SignalVector out;
    out.class_id = std::move(class_id);
    out.sample_id = std::move(sample_id);
    out.samples.reserve(re.size() + im.size());
    out.samples.insert(out.samples.end(), re.begin(), re.end());
    out.samples.insert(out.samples.end(), im.begin(), im.end());

    const double m = mean(out.samples);
    for (double& v : out.samples) v -= m;
    return out;
}

}  // namespace iriscap
