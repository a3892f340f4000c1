#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zzp/config.hpp"
#include "zzp/zigzag.hpp"

namespace zzp {

struct StageRecord {
    std::size_t size = 0;               // points (or landmarks) in the stage
    std::vector<std::size_t> betti;     // aligned with RunReport::dims
    std::optional<double> parameter;    // filter parameter (threshold runs)
    std::optional<std::size_t> retries; // rejected draws before acceptance (witness runs)
};

struct RunReport {
    ExperimentConfig config;
    std::vector<int> dims;
    std::vector<StageRecord> stages;
    /// Barcode as reported: half-integral intervals suppressed unless the
    /// config keeps them.
    Barcode barcode;
    std::optional<Graph> graph;
    std::vector<std::pair<std::string, double>> timings;  // seconds
};

/// One JSON object per dimension in `dims`, intervals in barcode order.
nlohmann::ordered_json barcode_to_json(const Barcode& b, const std::vector<int>& dims);
/// Inverse of barcode_to_json; accepts a single object or an array of them.
Barcode barcode_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const RunReport& r);
/// Serialized report, terminated by a newline.
std::string dump(const RunReport& r);

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace zzp
