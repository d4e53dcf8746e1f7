#include "iriscap/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "iriscap/errors.hpp"
#include "iriscap/rng.hpp"

namespace iriscap {

void validate_manifest(const DatasetManifest& manifest) {
    if (!(manifest.split_fraction > 0.0) || !(manifest.split_fraction < 1.0)) {
        throw std::invalid_argument("manifest: split_fraction must be in (0, 1)");
    }
    if (manifest.classes.empty()) {
        throw std::invalid_argument("manifest: no classes");
    }
    std::set<std::string> ids;
    for (const auto& cls : manifest.classes) {
        if (cls.id.empty()) throw std::invalid_argument("manifest: empty class id");
        if (!ids.insert(cls.id).second) {
            throw std::invalid_argument("manifest: duplicate class id '" + cls.id + "'");
        }
        if (cls.samples.size() < 2) {
            throw std::invalid_argument("manifest: class '" + cls.id +
                                        "' needs at least 2 samples");
        }
    }
}

std::vector<ClassSplit> split_enrollment(const DatasetManifest& manifest,
                                         std::uint64_t seed) {
    validate_manifest(manifest);
    std::vector<ClassSplit> splits;
    splits.reserve(manifest.classes.size());
    for (const auto& cls : manifest.classes) {
        const std::size_t count = cls.samples.size();
        const auto want = static_cast<std::size_t>(
            std::ceil(manifest.split_fraction * static_cast<double>(count)));
        // Both sets must stay non-empty.
        const std::size_t n_enroll = std::clamp<std::size_t>(want, 1, count - 1);

        std::vector<std::size_t> order(count);
        std::iota(order.begin(), order.end(), 0);
        RandomEngine engine = make_engine(mix_seed(seed, fnv1a(cls.id)));
        fisher_yates_shuffle(order, engine);

        ClassSplit split;
        split.class_id = cls.id;
        split.enrollment.assign(order.begin(), order.begin() + n_enroll);
        split.authentication.assign(order.begin() + n_enroll, order.end());
        std::sort(split.enrollment.begin(), split.enrollment.end());
        std::sort(split.authentication.begin(), split.authentication.end());
        splits.push_back(std::move(split));
    }
    return splits;
}

SpectrumEstimate enrollment_spectrum(std::span<const SpectrumEstimate> spectra) {
    if (spectra.empty()) {
        throw std::invalid_argument("enrollment_spectrum: no spectra");
    }
    const std::size_t n = spectra.front().n_bins();
    std::vector<double> acc(n, 0.0);
    for (const auto& s : spectra) {
        if (s.n_bins() != n) {
            throw GridMismatchError("enrollment_spectrum: mismatched frequency grids");
        }
        for (std::size_t i = 0; i < n; ++i) acc[i] += s[i];
    }
    for (double& v : acc) v /= static_cast<double>(spectra.size());
    return SpectrumEstimate(std::move(acc));
}

}  // namespace iriscap
