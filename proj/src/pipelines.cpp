#include "zzp/pipelines.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "zzp/filters.hpp"
#include "zzp/homology.hpp"
#include "zzp/render.hpp"

namespace zzp {

namespace {

class Stopwatch {
public:
    explicit Stopwatch(RunReport& r) : report_(r) {}
    void lap(std::string name) {
        const auto now = std::chrono::steady_clock::now();
        report_.timings.emplace_back(std::move(name), std::chrono::duration<double>(now - last_).count());
        last_ = now;
    }

private:
    RunReport& report_;
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::vector<int> dims_of(const ExperimentConfig& cfg) {
    if (!cfg.dims.empty()) return cfg.dims;
    std::vector<int> d;
    for (int p = 0; p < cfg.max_dim; ++p) d.push_back(p);
    return d;
}

std::vector<std::size_t> stage_sizes(const ExperimentConfig& cfg, std::size_t count, std::size_t size) {
    return cfg.sizes.empty() ? std::vector<std::size_t>(count, size) : cfg.sizes;
}

void check_fits(const std::vector<std::size_t>& sizes, std::size_t n, const char* what) {
    for (auto s : sizes)
        if (s > n)
            throw ConfigError(std::string(what) + ": " + std::to_string(s) + " exceeds the " + std::to_string(n) +
                              " input points");
}

DiagramSpec rips_spec(const ExperimentConfig& cfg, std::vector<IndexSet> stages) {
    if (cfg.sequence == SequenceKind::biwitness)
        throw ConfigError("complex.sequence: expected 'union' or 'intersection'");
    return {cfg.sequence, std::move(stages), cfg.epsilon, cfg.max_dim, {}, {}};
}

void finish(RunReport& r, const ZigzagResult& z, const std::vector<std::size_t>& sizes) {
    r.barcode = r.config.keep_half_integral ? z.barcode : suppress_half_integral(z.barcode);
    r.stages.resize(sizes.size());
    for (std::size_t j = 0; j < sizes.size(); ++j) {
        r.stages[j].size = sizes[j];
        r.stages[j].betti = z.stage_betti[j];
    }
}

WitnessOptions witness_options(const ExperimentConfig& cfg) {
    return WitnessOptions{cfg.exclude_landmark_witnesses};
}

struct LandmarkDraw {
    std::vector<IndexSet> stages;
    std::vector<std::size_t> retries;
};

/// Random landmark sets, each redrawn until its witness complex passes the
/// Betti filter.
LandmarkDraw draw_landmarks(const ExperimentConfig& cfg, const Metric& metric, const IndexSet& witnesses,
                            std::mt19937_64& rng, const std::vector<std::size_t>& sizes) {
    LandmarkDraw out;
    const int top = static_cast<int>(cfg.accept_betti.size()) - 1;
    for (std::size_t j = 0; j < sizes.size(); ++j) {
        std::size_t rejected = 0;
        while (true) {
            IndexSet l = random_subsample(metric.size(), sizes[j], rng());
            if (cfg.accept_betti.empty()) {
                out.stages.push_back(std::move(l));
                break;
            }
            const auto w = weak_witness_complex(metric, witnesses, l, cfg.max_dim, witness_options(cfg));
            auto betti = betti_numbers(w, top);
            if (betti == cfg.accept_betti) {
                out.stages.push_back(std::move(l));
                break;
            }
            if (++rejected >= cfg.max_retries) {
                std::string want;
                for (auto b : cfg.accept_betti) want += (want.empty() ? "" : ",") + std::to_string(b);
                throw PipelineError("witness.accept_betti: no landmark set with Betti (" + want + ") for stage " +
                                    std::to_string(j) + " after " + std::to_string(rejected) + " draws");
            }
        }
        out.retries.push_back(rejected);
    }
    return out;
}

}  // namespace

Metric load_input(const InputSpec& input, std::uint64_t seed) {
    if (input.shape) return Metric(generate(*input.shape, input.n, seed, input.noise));
    if (input.distances) return Metric(read_distance_matrix(input.file));
    return Metric(read_point_cloud(input.file));
}

RunReport run_bootstrap(const ExperimentConfig& cfg) {
    RunReport r{cfg, dims_of(cfg), {}, {}, {}, {}};
    Stopwatch clock(r);
    std::mt19937_64 rng(cfg.seed);
    const Metric metric = load_input(cfg.input, rng());
    clock.lap("input");

    const auto sizes = stage_sizes(cfg, cfg.samples, cfg.sample_size);
    check_fits(sizes, metric.size(), "bootstrap sample size");
    std::vector<IndexSet> stages;
    for (auto s : sizes) stages.push_back(random_subsample(metric.size(), s, rng()));
    clock.lap("sampling");

    const auto z = compute_zigzag(rips_spec(cfg, std::move(stages)), metric, r.dims);
    clock.lap("zigzag");
    finish(r, z, sizes);
    return r;
}

RunReport run_threshold(const ExperimentConfig& cfg) {
    RunReport r{cfg, dims_of(cfg), {}, {}, {}, {}};
    Stopwatch clock(r);
    std::mt19937_64 rng(cfg.seed);
    const Metric metric = load_input(cfg.input, rng());
    clock.lap("input");

    std::vector<IndexSet> stages;
    std::vector<std::size_t> sizes;
    for (double theta : cfg.parameters) {
        FilterValues fv;
        if (cfg.filter == "kde") {
            if (!metric.cloud()) throw ConfigError("threshold.filter: kde needs point coordinates");
            fv = gaussian_kde(*metric.cloud(), theta);
        } else {
            const auto k = static_cast<std::size_t>(theta);
            if (k >= metric.size())
                throw ConfigError("threshold.parameters: codensity k = " + std::to_string(k) +
                                  " needs more than k input points");
            fv = codensity(metric, k);
        }
        const IndexSet level = top_percent(fv, cfg.percent);
        if (cfg.subsample > level.size())
            throw ConfigError("threshold.subsample: " + std::to_string(cfg.subsample) + " exceeds the " +
                              std::to_string(level.size()) + "-point levelset at parameter " +
                              std::to_string(theta));
        const bool asc = fv.order == Order::ascending_is_best;
        Index best = level[0];
        for (Index i : level)
            if (asc ? fv.values[i] < fv.values[best] : fv.values[i] > fv.values[best]) best = i;
        stages.emplace_back(maxmin_landmarks(metric, level, cfg.subsample, best));
        sizes.push_back(cfg.subsample);
    }
    clock.lap("levelsets");

    const auto z = compute_zigzag(rips_spec(cfg, std::move(stages)), metric, r.dims);
    clock.lap("zigzag");
    finish(r, z, sizes);
    for (std::size_t j = 0; j < cfg.parameters.size(); ++j) r.stages[j].parameter = cfg.parameters[j];
    return r;
}

RunReport run_witness(const ExperimentConfig& cfg) {
    RunReport r{cfg, dims_of(cfg), {}, {}, {}, {}};
    Stopwatch clock(r);
    std::mt19937_64 rng(cfg.seed);
    const Metric metric = load_input(cfg.input, rng());
    clock.lap("input");

    const auto sizes = stage_sizes(cfg, cfg.stages, cfg.landmarks);
    check_fits(sizes, metric.size(), "witness landmark count");
    const IndexSet witnesses = IndexSet::range(metric.size());
    auto draw = draw_landmarks(cfg, metric, witnesses, rng, sizes);
    clock.lap("landmarks");

    DiagramSpec spec{SequenceKind::biwitness, std::move(draw.stages), 0.0, cfg.max_dim, witnesses,
                     witness_options(cfg)};
    const auto z = compute_zigzag(spec, metric, r.dims);
    clock.lap("zigzag");
    finish(r, z, sizes);
    for (std::size_t j = 0; j < sizes.size(); ++j) r.stages[j].retries = draw.retries[j];
    return r;
}

RunReport run_pairwise(const ExperimentConfig& cfg) {
    RunReport r{cfg, cfg.criterion.dims, {}, {}, {}, {}};
    Stopwatch clock(r);
    std::mt19937_64 rng(cfg.seed);
    const Metric metric = load_input(cfg.input, rng());
    clock.lap("input");

    const auto sizes = stage_sizes(cfg, cfg.stages, cfg.landmarks);
    check_fits(sizes, metric.size(), "witness landmark count");
    const IndexSet witnesses = IndexSet::range(metric.size());
    auto draw = draw_landmarks(cfg, metric, witnesses, rng, sizes);
    clock.lap("landmarks");

    const int top = *std::max_element(r.dims.begin(), r.dims.end());
    r.stages.resize(sizes.size());
    for (std::size_t j = 0; j < sizes.size(); ++j) {
        const auto w = weak_witness_complex(metric, witnesses, draw.stages[j], cfg.max_dim, witness_options(cfg));
        const auto betti = betti_numbers(w, top);
        r.stages[j].size = sizes[j];
        r.stages[j].retries = draw.retries[j];
        for (int p : r.dims) r.stages[j].betti.push_back(betti[p]);
    }
    r.graph = pairwise_compatibility_graph(draw.stages, witnesses, metric, cfg.max_dim, cfg.criterion,
                                           witness_options(cfg));
    clock.lap("pairs");
    return r;
}

RunReport run_pipeline(const ExperimentConfig& cfg) {
    cfg.validate();
    switch (cfg.kind) {
        case PipelineKind::bootstrap: return run_bootstrap(cfg);
        case PipelineKind::threshold: return run_threshold(cfg);
        case PipelineKind::witness: return run_witness(cfg);
        case PipelineKind::pairwise: return run_pairwise(cfg);
    }
    throw ConfigError("pipeline: unknown kind");
}

std::string render_report(const RunReport& r) {
    if (r.graph) return render_graph(*r.graph);
    BarcodeStyle style;
    style.last_stage = r.stages.empty() ? -1 : static_cast<int>(r.stages.size()) - 1;
    style.dims = r.dims;
    style.title = std::string(pipeline_name(r.config.kind)) + " seed " + std::to_string(r.config.seed);
    return render_barcode(r.barcode, style);
}

}  // namespace zzp
