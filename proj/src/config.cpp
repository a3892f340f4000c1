#include "zzp/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace zzp {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view pipeline_name(PipelineKind k) {
    switch (k) {
        case PipelineKind::bootstrap: return "bootstrap";
        case PipelineKind::threshold: return "threshold";
        case PipelineKind::witness: return "witness";
        case PipelineKind::pairwise: return "pairwise";
    }
    return "?";
}

std::string_view sequence_name(SequenceKind k) {
    switch (k) {
        case SequenceKind::unions: return "union";
        case SequenceKind::intersections: return "intersection";
        case SequenceKind::biwitness: return "biwitness";
    }
    return "?";
}

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

void only_keys(const json& obj, const std::string& where, std::initializer_list<const char*> keys) {
    if (!obj.is_object()) fail(where + ": expected an object");
    const std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& [k, v] : obj.items())
        if (!allowed.count(k)) fail(where + ": unknown key '" + k + "'");
}

template <class T>
T get(const json& obj, const std::string& where, const char* key, T fallback) {
    if (!obj.contains(key)) return fallback;
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        fail(where + "." + key + ": wrong type");
    }
}

std::vector<std::size_t> sizes_of(const json& sec, const std::string& where) {
    if (sec.contains("sizes") && sec.contains("size_range"))
        fail(where + ": give either 'sizes' or 'size_range', not both");
    if (sec.contains("size_range")) {
        const auto r = get<std::vector<std::size_t>>(sec, where, "size_range", {});
        if (r.size() != 2 || r[0] > r[1] || r[0] == 0)
            fail(where + ".size_range: expected [first, last] with 1 <= first <= last");
        std::vector<std::size_t> out;
        for (std::size_t s = r[0]; s <= r[1]; ++s) out.push_back(s);
        return out;
    }
    return get<std::vector<std::size_t>>(sec, where, "sizes", {});
}

SequenceKind parse_sequence(const std::string& s) {
    if (s == "union") return SequenceKind::unions;
    if (s == "intersection") return SequenceKind::intersections;
    fail("complex.sequence: expected 'union' or 'intersection', got '" + s + "'");
}

BarcodeCriterion parse_criterion(const json& j) {
    if (!j.is_object()) fail("pairwise.criterion: expected an object keyed by dimension");
    BarcodeCriterion c;
    for (const auto& [k, v] : j.items()) {
        int p;
        try {
            std::size_t used = 0;
            p = std::stoi(k, &used);
            if (used != k.size() || p < 0) throw std::invalid_argument(k);
        } catch (const std::exception&) {
            fail("pairwise.criterion: key '" + k + "' is not a dimension");
        }
        c.dims.push_back(p);
        if (!v.is_array()) fail("pairwise.criterion." + k + ": expected a list of [start, end]");
        for (const auto& iv : v) {
            if (!iv.is_array() || iv.size() != 2 || !iv[0].is_number() || !iv[1].is_number())
                fail("pairwise.criterion." + k + ": expected [start, end] pairs");
            const int s = static_cast<int>(iv[0].get<double>() * 2.0);
            const int e = static_cast<int>(iv[1].get<double>() * 2.0);
            c.expected.add({p, ZigzagIndex{s}, ZigzagIndex{e}});
        }
    }
    std::sort(c.dims.begin(), c.dims.end());
    return c;
}

}  // namespace

ExperimentConfig parse_config(const json& j, const std::filesystem::path& base_dir) {
    only_keys(j, "config",
              {"pipeline", "seed", "input", "complex", "bootstrap", "threshold", "witness", "pairwise",
               "output"});
    ExperimentConfig c;
    const auto kind = get<std::string>(j, "config", "pipeline", "");
    if (kind == "bootstrap") c.kind = PipelineKind::bootstrap;
    else if (kind == "threshold") c.kind = PipelineKind::threshold;
    else if (kind == "witness") c.kind = PipelineKind::witness;
    else if (kind == "pairwise") c.kind = PipelineKind::pairwise;
    else fail("pipeline: expected bootstrap, threshold, witness or pairwise, got '" + kind + "'");
    c.seed = get<std::uint64_t>(j, "config", "seed", 0);

    if (!j.contains("input")) fail("input: missing");
    const auto& in = j["input"];
    only_keys(in, "input", {"shape", "n", "noise", "file", "format"});
    if (in.contains("shape") == in.contains("file")) fail("input: give exactly one of 'shape' or 'file'");
    if (in.contains("shape")) {
        try {
            c.input.shape = parse_shape(get<std::string>(in, "input", "shape", ""));
        } catch (const std::invalid_argument& e) {
            fail(std::string("input.shape: ") + e.what());
        }
        c.input.n = get<std::size_t>(in, "input", "n", 0);
        c.input.noise = get<double>(in, "input", "noise", 0.0);
    } else {
        std::filesystem::path f = get<std::string>(in, "input", "file", "");
        c.input.file = f.is_absolute() || base_dir.empty() ? f : base_dir / f;
        const auto fmt = get<std::string>(in, "input", "format", "points");
        if (fmt != "points" && fmt != "distances")
            fail("input.format: expected 'points' or 'distances'");
        c.input.distances = fmt == "distances";
    }

    if (j.contains("complex")) {
        const auto& s = j["complex"];
        only_keys(s, "complex", {"epsilon", "max_dim", "dims", "sequence"});
        c.epsilon = get<double>(s, "complex", "epsilon", c.epsilon);
        c.max_dim = get<int>(s, "complex", "max_dim", c.max_dim);
        c.dims = get<std::vector<int>>(s, "complex", "dims", {});
        c.sequence = parse_sequence(get<std::string>(s, "complex", "sequence", "union"));
    }
    if (c.kind == PipelineKind::witness || c.kind == PipelineKind::pairwise)
        c.sequence = SequenceKind::biwitness;

    if (j.contains("bootstrap")) {
        const auto& s = j["bootstrap"];
        only_keys(s, "bootstrap", {"samples", "sample_size", "sizes", "size_range"});
        c.samples = get<std::size_t>(s, "bootstrap", "samples", 0);
        c.sample_size = get<std::size_t>(s, "bootstrap", "sample_size", 0);
        c.sizes = sizes_of(s, "bootstrap");
    }
    if (j.contains("threshold")) {
        const auto& s = j["threshold"];
        only_keys(s, "threshold", {"filter", "parameters", "percent", "subsample"});
        c.filter = get<std::string>(s, "threshold", "filter", "");
        c.parameters = get<std::vector<double>>(s, "threshold", "parameters", {});
        c.percent = get<double>(s, "threshold", "percent", 100.0);
        c.subsample = get<std::size_t>(s, "threshold", "subsample", 0);
    }
    if (j.contains("witness")) {
        const auto& s = j["witness"];
        only_keys(s, "witness",
                  {"stages", "landmarks", "sizes", "size_range", "accept_betti", "max_retries",
                   "exclude_landmark_witnesses"});
        c.stages = get<std::size_t>(s, "witness", "stages", 0);
        c.landmarks = get<std::size_t>(s, "witness", "landmarks", 0);
        c.sizes = sizes_of(s, "witness");
        c.accept_betti = get<std::vector<std::size_t>>(s, "witness", "accept_betti", {});
        c.max_retries = get<std::size_t>(s, "witness", "max_retries", 1000);
        c.exclude_landmark_witnesses = get<bool>(s, "witness", "exclude_landmark_witnesses", false);
    }
    if (j.contains("pairwise")) {
        const auto& s = j["pairwise"];
        only_keys(s, "pairwise", {"criterion"});
        if (!s.contains("criterion")) fail("pairwise.criterion: missing");
        c.criterion = parse_criterion(s["criterion"]);
    }
    if (j.contains("output")) {
        const auto& s = j["output"];
        only_keys(s, "output", {"json", "svg", "keep_half_integral", "timings"});
        c.out_json = get<std::string>(s, "output", "json", "");
        c.out_svg = get<std::string>(s, "output", "svg", "");
        c.keep_half_integral = get<bool>(s, "output", "keep_half_integral", false);
        c.timings = get<bool>(s, "output", "timings", false);
    }
    return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open config '" + path.string() + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        fail("config '" + path.string() + "' is not valid JSON: " + e.what());
    }
    return parse_config(j, path.parent_path());
}

void ExperimentConfig::validate() const {
    if (input.shape && input.n == 0) fail("input.n: must be >= 1");
    if (input.noise < 0.0) fail("input.noise: must be nonnegative");
    if (max_dim < 0) fail("complex.max_dim: must be nonnegative");
    if (epsilon < 0.0) fail("complex.epsilon: must be nonnegative");
    for (int p : dims)
        if (p < 0 || p > max_dim) fail("complex.dims: dimension " + std::to_string(p) + " outside [0, max_dim]");
    if (max_dim == 0 && dims.empty()) fail("complex.dims: required when max_dim is 0");

    const std::size_t n = input.shape ? input.n : 0;  // file sizes are checked at run time
    auto check_size = [&](std::size_t k, const std::string& key) {
        if (k == 0) fail(key + ": must be >= 1");
        if (n && k > n) fail(key + ": " + std::to_string(k) + " exceeds the " + std::to_string(n) + " input points");
    };

    switch (kind) {
        case PipelineKind::bootstrap:
            if (sizes.empty()) {
                if (samples < 2) fail("bootstrap.samples: need at least 2 samples");
                check_size(sample_size, "bootstrap.sample_size");
            } else {
                if (sizes.size() < 2) fail("bootstrap.sizes: need at least 2 samples");
                for (auto s : sizes) check_size(s, "bootstrap.sizes");
            }
            break;
        case PipelineKind::threshold:
            if (filter != "codensity" && filter != "kde")
                fail("threshold.filter: expected 'codensity' or 'kde'");
            if (parameters.size() < 2) fail("threshold.parameters: need at least 2 parameter values");
            if (!(percent > 0.0 && percent <= 100.0)) fail("threshold.percent: must lie in (0, 100]");
            if (subsample == 0) fail("threshold.subsample: must be >= 1");
            for (double t : parameters) {
                if (filter == "kde" && !(t > 0.0)) fail("threshold.parameters: sigma must be positive");
                if (filter == "codensity" && (t < 1.0 || t != static_cast<double>(static_cast<std::size_t>(t))))
                    fail("threshold.parameters: codensity k must be a positive integer");
            }
            if (filter == "kde" && input.distances)
                fail("threshold.filter: kde needs point coordinates, not a distance matrix");
            break;
        case PipelineKind::witness:
        case PipelineKind::pairwise:
            if (sizes.empty()) {
                if (stages < 2) fail("witness.stages: need at least 2 landmark sets");
                check_size(landmarks, "witness.landmarks");
            } else {
                if (sizes.size() < 2) fail("witness.sizes: need at least 2 landmark sets");
                for (auto s : sizes) check_size(s, "witness.sizes");
            }
            if (!accept_betti.empty() && accept_betti.size() > static_cast<std::size_t>(max_dim))
                fail("witness.accept_betti: entry p needs max_dim > p, so at most max_dim entries");
            if (kind == PipelineKind::pairwise) {
                if (criterion.dims.empty()) fail("pairwise.criterion: at least one dimension required");
                for (int p : criterion.dims)
                    if (p > max_dim) fail("pairwise.criterion: dimension exceeds max_dim");
            }
            break;
    }
}

ordered_json to_json(const ExperimentConfig& c) {
    ordered_json j;
    j["pipeline"] = pipeline_name(c.kind);
    j["seed"] = c.seed;
    ordered_json in;
    if (c.input.shape) {
        in["shape"] = shape_name(*c.input.shape);
        in["n"] = c.input.n;
        in["noise"] = c.input.noise;
    } else {
        in["file"] = c.input.file.string();
        in["format"] = c.input.distances ? "distances" : "points";
    }
    j["input"] = in;

    ordered_json cx;
    cx["epsilon"] = c.epsilon;
    cx["max_dim"] = c.max_dim;
    cx["dims"] = c.dims;
    if (c.sequence != SequenceKind::biwitness) cx["sequence"] = sequence_name(c.sequence);
    j["complex"] = cx;

    switch (c.kind) {
        case PipelineKind::bootstrap: {
            ordered_json s;
            if (c.sizes.empty()) {
                s["samples"] = c.samples;
                s["sample_size"] = c.sample_size;
            } else {
                s["sizes"] = c.sizes;
            }
            j["bootstrap"] = s;
            break;
        }
        case PipelineKind::threshold:
            j["threshold"] = {{"filter", c.filter},
                              {"parameters", c.parameters},
                              {"percent", c.percent},
                              {"subsample", c.subsample}};
            break;
        case PipelineKind::witness:
        case PipelineKind::pairwise: {
            ordered_json s;
            if (c.sizes.empty()) {
                s["stages"] = c.stages;
                s["landmarks"] = c.landmarks;
            } else {
                s["sizes"] = c.sizes;
            }
            if (!c.accept_betti.empty()) s["accept_betti"] = c.accept_betti;
            s["max_retries"] = c.max_retries;
            s["exclude_landmark_witnesses"] = c.exclude_landmark_witnesses;
            j["witness"] = s;
            if (c.kind == PipelineKind::pairwise) {
                ordered_json crit = ordered_json::object();
                for (int p : c.criterion.dims) {
                    ordered_json list = ordered_json::array();
                    const Barcode group = c.criterion.expected.of_dimension(p);
                    for (const auto& i : group.intervals())
                        list.push_back({i.start.value(), i.end.value()});
                    crit[std::to_string(p)] = list;
                }
                j["pairwise"] = {{"criterion", crit}};
            }
            break;
        }
    }
    ordered_json out;
    out["json"] = c.out_json.string();
    out["svg"] = c.out_svg.string();
    out["keep_half_integral"] = c.keep_half_integral;
    out["timings"] = c.timings;
    j["output"] = out;
    return j;
}

}  // namespace zzp
