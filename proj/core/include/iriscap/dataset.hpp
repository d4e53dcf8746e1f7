#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "iriscap/signal.hpp"

namespace iriscap {

struct SampleRef {
    enum class Kind { Image, Vector };
    std::filesystem::path path;
    Kind kind = Kind::Vector;
};

struct ManifestClass {
    std::string id;
    std::vector<SampleRef> samples;
};

/// Dataset description: classes with >= 2 samples each, unique ids, and the
/// enrollment split fraction in (0, 1).
struct DatasetManifest {
    double split_fraction = 0.5;
    std::vector<ManifestClass> classes;
};

/// Throws std::invalid_argument describing the first violated invariant.
void validate_manifest(const DatasetManifest& manifest);

/// Per-class sample partition (indices into ManifestClass::samples).
struct ClassSplit {
    std::string class_id;
    std::vector<std::size_t> enrollment;
    std::vector<std::size_t> authentication;
};

/// Seeded random per-class split: ceil(split_fraction * count) samples go to
/// enrollment (clamped so both sets stay non-empty), the rest to
/// authentication. Deterministic per seed.
std::vector<ClassSplit> split_enrollment(const DatasetManifest& manifest,
                                         std::uint64_t seed);

/// Per-bin arithmetic mean of the enrollment spectra; the class template.
SpectrumEstimate enrollment_spectrum(std::span<const SpectrumEstimate> spectra);

}  // namespace iriscap
