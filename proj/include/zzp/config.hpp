#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "zzp/zigzag.hpp"

namespace zzp {

/// Invalid or inconsistent experiment configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class PipelineKind { bootstrap, threshold, witness, pairwise };

struct InputSpec {
    // either a generator ...
    std::optional<Shape> shape;
    std::size_t n = 0;
    double noise = 0.0;
    // ... or a file
    std::filesystem::path file;
    bool distances = false;  // file holds a distance matrix rather than points
};

struct ExperimentConfig {
    PipelineKind kind = PipelineKind::bootstrap;
    std::uint64_t seed = 0;
    InputSpec input;

    double epsilon = 1.0;
    int max_dim = 2;
    std::vector<int> dims;  // homology dimensions; default 0..max_dim-1
    SequenceKind sequence = SequenceKind::unions;
    bool keep_half_integral = false;

    // bootstrap: fixed-size samples, or one sample per entry of `sizes`
    std::size_t samples = 0;
    std::size_t sample_size = 0;
    std::vector<std::size_t> sizes;

    // threshold
    std::string filter;  // "codensity" or "kde"
    std::vector<double> parameters;
    double percent = 100.0;
    std::size_t subsample = 0;

    // witness / pairwise: `stages` landmark sets of `landmarks` points, or
    // one per entry of `sizes`
    std::size_t stages = 0;
    std::size_t landmarks = 0;
    std::vector<std::size_t> accept_betti;
    std::size_t max_retries = 1000;
    bool exclude_landmark_witnesses = false;

    // pairwise
    BarcodeCriterion criterion;

    std::filesystem::path out_json;
    std::filesystem::path out_svg;
    bool timings = false;

    /// Throws ConfigError naming the offending key.
    void validate() const;
};

/// Parses a JSON config. Relative input paths resolve against `base_dir`.
ExperimentConfig parse_config(const nlohmann::json& j,
                              const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

/// Canonical JSON form, echoed into reports; parse_config(to_json(c)) == c.
nlohmann::ordered_json to_json(const ExperimentConfig& c);

std::string_view pipeline_name(PipelineKind k);
std::string_view sequence_name(SequenceKind k);

}  // namespace zzp
