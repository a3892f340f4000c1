#pragma once

#include <stdexcept>

#include "zzp/config.hpp"
#include "zzp/report.hpp"

namespace zzp {

/// Failure while running a valid configuration (e.g. rejection sampling
/// exhausted its retries).
class PipelineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Loads or generates the input described by the config. `seed` feeds the
/// generator only.
Metric load_input(const InputSpec& input, std::uint64_t seed);

RunReport run_bootstrap(const ExperimentConfig& cfg);
RunReport run_threshold(const ExperimentConfig& cfg);
RunReport run_witness(const ExperimentConfig& cfg);
RunReport run_pairwise(const ExperimentConfig& cfg);

/// Validates and dispatches on cfg.kind.
RunReport run_pipeline(const ExperimentConfig& cfg);

/// SVG for a report: the barcode, or the compatibility graph for pairwise runs.
std::string render_report(const RunReport& r);

}  // namespace zzp
