// zzp: command-line driver for the zigzag pipelines.
#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zzp/pipelines.hpp"
#include "zzp/render.hpp"

namespace {

constexpr int exit_config = 2;
constexpr int exit_runtime = 3;

int report_error(const std::string& what, int code) {
    std::string line = what;
    std::replace(line.begin(), line.end(), '\n', ' ');
    std::cerr << "error: " << line << "\n";
    return code;
}

struct Overrides {
    std::string config;
    std::string input;
    std::optional<std::uint64_t> seed;
    std::optional<double> epsilon;
    std::optional<int> max_dim;
    std::vector<int> dims;
    std::string out_json;
    std::string out_svg;
    bool keep_half_integral = false;
};

void add_common(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--config", o.config, "JSON experiment config")->required();
    cmd->add_option("--input", o.input, "point cloud file replacing the configured input");
    cmd->add_option("--seed", o.seed, "master random seed");
    cmd->add_option("--epsilon", o.epsilon, "Rips scale");
    cmd->add_option("--max-dim", o.max_dim, "largest cell dimension");
    cmd->add_option("--dim", o.dims, "homology dimension (repeatable)");
    cmd->add_option("--out-json", o.out_json, "report path (default: stdout)");
    cmd->add_option("--out-svg", o.out_svg, "SVG path");
    cmd->add_flag("--keep-half-integral", o.keep_half_integral, "report raw intervals, bridge-only ones and half-integral ends included");
}

zzp::ExperimentConfig configure(const Overrides& o, zzp::PipelineKind expected) {
    auto cfg = zzp::load_config(o.config);
    if (cfg.kind != expected)
        throw zzp::ConfigError("pipeline: config is for '" + std::string(zzp::pipeline_name(cfg.kind)) +
                               "', not '" + std::string(zzp::pipeline_name(expected)) + "'");
    if (!o.input.empty()) {
        cfg.input = {};
        cfg.input.file = o.input;
    }
    if (o.seed) cfg.seed = *o.seed;
    if (o.epsilon) cfg.epsilon = *o.epsilon;
    if (o.max_dim) cfg.max_dim = *o.max_dim;
    if (!o.dims.empty()) cfg.dims = o.dims;
    if (!o.out_json.empty()) cfg.out_json = o.out_json;
    if (!o.out_svg.empty()) cfg.out_svg = o.out_svg;
    if (o.keep_half_integral) cfg.keep_half_integral = true;
    return cfg;
}

void run(const Overrides& o, zzp::PipelineKind kind) {
    const auto cfg = configure(o, kind);
    const auto report = zzp::run_pipeline(cfg);
    const auto text = zzp::dump(report);
    if (cfg.out_json.empty())
        std::cout << text;
    else
        zzp::write_text(cfg.out_json, text);
    if (!cfg.out_svg.empty()) zzp::write_text(cfg.out_svg, zzp::render_report(report));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zigzag persistence over Z/2: bootstrapping, thresholding and witness comparison"};
    app.require_subcommand(1);

    struct {
        std::string shape;
        std::size_t n = 0;
        std::uint64_t seed = 0;
        double noise = 0.0;
        std::string out;
    } gen;
    auto* generate = app.add_subcommand("generate", "sample a synthetic point cloud");
    generate->add_option("--shape", gen.shape, "circle, figure8, sphere or torus4d")->required();
    generate->add_option("--n", gen.n, "number of points")->required();
    generate->add_option("--seed", gen.seed, "random seed");
    generate->add_option("--noise", gen.noise, "Gaussian noise standard deviation");
    generate->add_option("--out", gen.out, "output file (default: stdout)");

    Overrides ov;
    const std::pair<const char*, zzp::PipelineKind> pipelines[] = {
        {"bootstrap", zzp::PipelineKind::bootstrap},
        {"threshold", zzp::PipelineKind::threshold},
        {"witness", zzp::PipelineKind::witness},
        {"pairwise", zzp::PipelineKind::pairwise},
    };
    std::vector<std::pair<CLI::App*, zzp::PipelineKind>> commands;
    for (auto [name, kind] : pipelines) {
        auto* cmd = app.add_subcommand(name, std::string("run the ") + name + " pipeline");
        add_common(cmd, ov);
        commands.emplace_back(cmd, kind);
    }

    std::string render_in, render_out;
    auto* render = app.add_subcommand("render", "draw the barcode or graph of a saved report");
    render->add_option("--input", render_in, "report JSON")->required();
    render->add_option("--out-svg", render_out, "SVG path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report_error(e.what(), exit_config);
    }

    try {
        if (*generate) {
            const auto cloud = zzp::generate(zzp::parse_shape(gen.shape), gen.n, gen.seed, gen.noise);
            zzp::write_point_cloud(gen.out.empty() ? "/dev/stdout" : gen.out, cloud);
            return 0;
        }
        for (auto [cmd, kind] : commands)
            if (*cmd) {
                run(ov, kind);
                return 0;
            }
        if (*render) {
            const auto j = nlohmann::json::parse(zzp::read_text(render_in));
            zzp::RunReport r;
            r.config.seed = j.value("seed", std::uint64_t{0});
            r.dims = j.value("dims", std::vector<int>{});
            r.stages.resize(j.value("stages", nlohmann::json::array()).size());
            if (j.contains("graph")) {
                zzp::Graph g{j["graph"].at("vertices").get<std::size_t>(), {}};
                for (const auto& e : j["graph"].at("edges"))
                    g.edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
                r.graph = g;
            }
            r.barcode = zzp::barcode_from_json(j.value("barcodes", nlohmann::json::array()));
            const auto kind = j.value("pipeline", std::string("bootstrap"));
            for (auto [name, k] : pipelines)
                if (kind == name) r.config.kind = k;
            const auto svg = zzp::render_report(r);
            if (render_out.empty())
                std::cout << svg;
            else
                zzp::write_text(render_out, svg);
            return 0;
        }
    } catch (const zzp::ConfigError& e) {
        return report_error(e.what(), exit_config);
    } catch (const std::invalid_argument& e) {
        return report_error(e.what(), exit_config);
    } catch (const std::exception& e) {
        return report_error(e.what(), exit_runtime);
    }
    return exit_config;
}
