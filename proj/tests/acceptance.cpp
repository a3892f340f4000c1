// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "oracles.hpp"
#include "zzp/homology.hpp"
#include "zzp/pipelines.hpp"
#include "zzp/zigzag.hpp"

using namespace zzp;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Settings {
    fs::path cli;
    fs::path configs;
    fs::path work;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string brief(const Barcode& b) {
    const auto s = to_string(b);
    return s.empty() ? "{}" : s;
}

Barcode stages_barcode(std::initializer_list<std::tuple<int, int, int>> spec) {
    Barcode b;
    for (auto [p, s, e] : spec) b.add(Interval::stages(p, s, e));
    return b;
}

// 1 ----------------------------------------------------------------------

Outcome hexagon() {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<double> c;
    auto add = [&](double a) {
        c.push_back(std::cos(a));
        c.push_back(std::sin(a));
    };
    for (int k = 0; k < 6; ++k) add(k * std::numbers::pi / 3);
    const int dense = 600;
    for (int k = 0; k < dense; ++k) add(2 * std::numbers::pi * (k + 0.5) / dense);
    const Metric m(PointCloud(2, c));
    const IndexSet x{0, 2, 4}, y{1, 3, 5};
    const auto all = IndexSet::range(m.size());
    // three landmarks always witness their triangle at max_dim 2, so the
    // loop is only visible with edges alone
    const auto h0 = bicomplex_zigzag({x, y}, all, m, 1, 0);
    const auto h1 = bicomplex_zigzag({x, y}, all, m, 1, 1);
    const double secs = seconds_since(t0);
    const bool ok = h0 == stages_barcode({{0, 0, 1}}) && h1 == stages_barcode({{1, 0, 1}}) && secs < 1.0;
    return {ok, fmt::format("dim0 {} dim1 {} in {:.2f} s", brief(h0), brief(h1), secs)};
}

// 2 ----------------------------------------------------------------------

Outcome figure8_landmarks() {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<double> c = generate(Shape::figure8, 1000, 7).coords();
    auto add = [&](double x, double y) {
        c.push_back(x);
        c.push_back(y);
        return static_cast<Index>(c.size() / 2 - 1);
    };
    // cardinal points of the two loops: exactly on the curve and equidistant
    // from mirror-image landmarks
    for (auto [x, y] : {std::pair{-1.0, 1.0}, {-1.0, -1.0}, {-2.0, 0.0}, {0.0, 0.0}, {1.0, 1.0}, {1.0, -1.0}, {2.0, 0.0}})
        add(x, y);
    const double s = 45.0 / 64;
    std::vector<Index> av, bv;
    for (double sx : {-1.0, 1.0})
        for (double sy : {-1.0, 1.0}) {
            av.push_back(add(-1 + sx * s, sy * s));
            bv.push_back(add(1 + sx * s, sy * s));
        }
    const Metric m(PointCloud(2, c));
    const IndexSet a(av), b(bv), ab = set_union(a, b), all = IndexSet::range(m.size());

    auto run = [&](const IndexSet& l, const IndexSet& r) {
        Barcode out;
        for (int p : {0, 1}) {
            const auto part = bicomplex_zigzag({l, r}, all, m, 2, p);
            for (const auto& i : part.intervals()) out.add(i);
        }
        return out;
    };
    const auto got_ab = run(a, b), got_ac = run(a, ab), got_bc = run(b, ab);
    const double secs = seconds_since(t0);
    const auto want_ab = stages_barcode({{0, 0, 1}, {1, 0, 0}, {1, 1, 1}});
    const auto want_ac = stages_barcode({{0, 0, 1}, {1, 0, 1}, {1, 1, 1}});
    const bool ok = got_ab == want_ab && got_ac == want_ac && got_bc == want_ac && secs < 10.0;
    return {ok, fmt::format("(A,B) {} (A,C) {} (B,C) {} in {:.2f} s", brief(got_ab), brief(got_ac), brief(got_bc), secs)};
}

// 3 ----------------------------------------------------------------------

Outcome bootstrap_threshold(const Settings& st) {
    const auto base = load_config(st.configs / "bootstrap_figure8_incremental.json");
    std::vector<std::string> notes;
    bool ok = true;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto cfg = base;
        cfg.seed = seed;
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = run_pipeline(cfg);
        const double secs = seconds_since(t0);

        int first = -1;
        bool betti_ok = true;
        for (std::size_t j = 0; j < r.stages.size(); ++j)
            if (r.stages[j].size >= 120) {
                if (first < 0) first = static_cast<int>(j);
                betti_ok = betti_ok && r.stages[j].betti == std::vector<std::size_t>{1, 2};
            }
        const int last = static_cast<int>(r.stages.size()) - 1;
        std::size_t through = 0;
        const auto h1 = r.barcode.of_dimension(1);
        for (const auto& i : h1.intervals())
            through += i.start <= ZigzagIndex::stage(first) && i.end == ZigzagIndex::stage(last);
        const bool seed_ok = first >= 0 && betti_ok && through == 2 && secs < 600;
        ok = ok && seed_ok;
        notes.push_back(fmt::format("seed {} {} ({:.1f} s)", seed, seed_ok ? "ok" : "bad", secs));
    }
    std::string d;
    for (const auto& n : notes) d += (d.empty() ? "" : ", ") + n;
    return {ok, d};
}

// 4 ----------------------------------------------------------------------

Outcome sphere(const Settings& st) {
    const auto base = load_config(st.configs / "bootstrap_sphere.json");
    const auto t0 = std::chrono::steady_clock::now();
    int good_seeds = 0;
    std::string d;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto cfg = base;
        cfg.seed = seed;
        const auto r = run_pipeline(cfg);
        const auto k = static_cast<std::size_t>(std::find(r.dims.begin(), r.dims.end(), 2) - r.dims.begin());
        const auto h2 = r.barcode.of_dimension(2);
        std::size_t with_h2 = 0, pairs = 0, matched = 0;
        for (std::size_t j = 0; j < r.stages.size(); ++j) {
            const bool here = r.stages[j].betti.at(k) > 0;
            with_h2 += here;
            if (here && j + 1 < r.stages.size() && r.stages[j + 1].betti.at(k) > 0) {
                ++pairs;
                bool cont = false;
                for (const auto& i : h2.intervals())
                    cont = cont || (i.start <= ZigzagIndex::stage(static_cast<int>(j)) &&
                                    ZigzagIndex::stage(static_cast<int>(j) + 1) <= i.end);
                matched += cont;
            }
        }
        const bool seed_ok = with_h2 >= 7 && matched == pairs;
        good_seeds += seed_ok;
        d += fmt::format("{}seed {}: {}/10 with H2, {}/{} pairs matched", d.empty() ? "" : "; ", seed, with_h2, matched,
                         pairs);
    }
    const double secs = seconds_since(t0);
    return {good_seeds >= 4 && secs < 900, fmt::format("{} ({} of 5 seeds, {:.1f} s)", d, good_seeds, secs)};
}

// CLI runs shared by criteria 5 and 8 ----------------------------------

struct CliRun {
    int status = -1;
    double seconds = 0;
    fs::path json, svg;
};

std::map<std::pair<std::string, std::string>, CliRun> cli_cache;

CliRun cli_run(const Settings& st, const fs::path& config, const std::string& tag) {
    const auto key = std::pair{config.string(), tag};
    if (auto it = cli_cache.find(key); it != cli_cache.end()) return it->second;
    const auto kind = json::parse(read_text(config)).at("pipeline").get<std::string>();
    // every run writes to the same paths, since the report echoes them, and
    // is then moved aside under its tag
    const auto live = st.work / "live", dir = st.work / tag;
    fs::create_directories(live);
    fs::create_directories(dir);
    const auto json_at = live / (config.stem().string() + ".json"), svg_at = live / (config.stem().string() + ".svg");
    const auto cmd = fmt::format("\"{}\" {} --config \"{}\" --out-json \"{}\" --out-svg \"{}\"", st.cli.string(), kind,
                                 config.string(), json_at.string(), svg_at.string());
    CliRun r;
    const auto t0 = std::chrono::steady_clock::now();
    r.status = std::system(cmd.c_str());
    r.seconds = seconds_since(t0);
    r.json = dir / json_at.filename();
    r.svg = dir / svg_at.filename();
    if (r.status == 0) {
        fs::rename(json_at, r.json);
        fs::rename(svg_at, r.svg);
    }
    cli_cache[key] = r;
    return r;
}

// 5 ----------------------------------------------------------------------

Outcome torus(const Settings& st) {
    const auto run = cli_run(st, st.configs / "witness_torus.json", "run1");
    if (run.status != 0) return {false, fmt::format("CLI exited with status {}", run.status)};
    const auto j = json::parse(read_text(run.json));
    const auto& stages = j.at("stages");
    std::size_t exact = 0, retries = 0;
    for (const auto& s : stages) {
        exact += s.at("betti") == json::array({1, 2, 1});
        retries += s.value("retries", std::size_t{0});
    }
    const bool ok = stages.size() == 40 && exact == 40 && run.seconds < 1200;
    return {ok, fmt::format("{}/{} stages with Betti (1,2,1), {} rejected draws, {:.1f} s", exact, stages.size(), retries,
                            run.seconds)};
}

// 6 ----------------------------------------------------------------------

std::vector<std::size_t> rips_betti(const Metric& m, const IndexSet& s, double eps, int max_dim) {
    if (s.empty()) return std::vector<std::size_t>(max_dim, 0);
    return oracle::betti(oracle::as_simplices(oracle::rips(m, s, eps, max_dim)), max_dim - 1);
}

Outcome oracle_suite() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(6);
    std::size_t complexes = 0, complex_fail = 0;
    for (int t = 0; t < 60; ++t) {
        const auto cells = oracle::random_complex(rng, 8 + t % 6, 1 + t % 4, 40 + 2 * t);
        const SimplicialComplex c(cells);
        if (c.size() > 200) continue;
        ++complexes;
        const int top = c.max_dim();
        bool same = betti_numbers(c, top) == oracle::betti(cells, top);
        for (int p = 0; p <= top; ++p) same = same && homology_basis(c, p).rank() == oracle::betti(cells, top)[p];
        complex_fail += !same;
    }

    std::size_t diagrams = 0, diagram_fail = 0;
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 16 + t % 25;  // at most 40 points
        const Metric m(generate(t % 2 ? Shape::figure8 : Shape::circle, n, rng(), 0.05));
        const auto a = random_subsample(n, n / 2 + 1, rng()), b = random_subsample(n, n / 2 + 1, rng());
        const double eps = 0.4 + 0.05 * (t % 7);
        const auto z = compute_zigzag({SequenceKind::unions, {a, b}, eps, 2, {}, {}}, m, {0, 1});
        const auto want0 = rips_betti(m, a, eps, 2), want1 = rips_betti(m, b, eps, 2);
        const auto wantb = rips_betti(m, set_union(a, b), eps, 2);
        bool ok = true;
        for (int p = 0; p <= 1; ++p)
            ok = ok && z.barcode.covering(p, ZigzagIndex::stage(0)) == want0[p] &&
                 z.barcode.covering(p, ZigzagIndex::bridge(0)) == wantb[p] &&
                 z.barcode.covering(p, ZigzagIndex::stage(1)) == want1[p];
        ++diagrams;
        diagram_fail += !ok;
    }
    const double secs = seconds_since(t0);
    const bool ok = complexes >= 50 && diagrams >= 50 && complex_fail == 0 && diagram_fail == 0 && secs < 120;
    return {ok, fmt::format("{} complexes ({} mismatches), {} union diagrams ({} inconsistent), {:.2f} s", complexes,
                            complex_fail, diagrams, diagram_fail, secs)};
}

// 7 ----------------------------------------------------------------------

template <class Cell>
std::size_t dd_failures(const CellComplex<Cell>& c, std::size_t& checked) {
    std::size_t bad = 0;
    for (int p = 0; p <= c.max_dim(); ++p)
        for (const auto& cell : c.cells(p)) {
            ++checked;
            bad += !boundary(boundary(cell)).empty();
        }
    return bad;
}

Outcome algebra_suite() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(7);
    std::size_t cells = 0, dd_bad = 0;

    std::size_t chains = 0, chain_bad = 0;
    const Metric circle(generate(Shape::circle, 150, 3, 0.02));
    const auto all = IndexSet::range(150);
    for (int round = 0; round < 12; ++round) {
        const auto l = random_subsample(150, 6, rng()), r = random_subsample(150, 6, rng());
        const auto bc = biwitness_complex(circle, all, l, r, 3);
        dd_bad += dd_failures(bc, cells);
        dd_bad += dd_failures(weak_witness_complex(circle, all, l, 3), cells);
        for (int p = 1; p <= bc.max_dim(); ++p) {
            if (bc.cells(p).empty()) continue;
            for (int t = 0; t < 50; ++t) {
                std::vector<Bisimplex> pick;
                for (const auto& cell : bc.cells(p))
                    if (rng() % 3 == 0) pick.push_back(cell);
                const BisimplexChain chain(pick);
                for (Side side : {Side::left, Side::right}) {
                    ++chains;
                    chain_bad += project_chain(boundary(chain), side, p - 1) != boundary(project_chain(chain, side, p));
                }
            }
        }
    }

    std::size_t pairs = 0, vr_bad = 0;
    for (int t = 0; t < 120; ++t) {
        const Metric m(generate(Shape::sphere, 30, rng(), 0.05));
        const auto b = random_subsample(30, 20, rng());
        std::vector<Index> v(b.begin(), b.end());
        std::shuffle(v.begin(), v.end(), rng);
        const IndexSet a(std::vector<Index>(v.begin(), v.begin() + 10));
        const double eps = 0.5 + 0.1 * (t % 8);
        const auto va = vietoris_rips(m, a, eps, 3), vb = vietoris_rips(m, b, eps, 3);
        dd_bad += dd_failures(vb, cells);
        ++pairs;
        vr_bad += !vb.includes(va);
    }

    // L ⊂ L' on the line {0, 5, 10}: [0,10] is vacuously witnessed for
    // L = {0, 10} but has no witness once 5 is a landmark
    const Metric line(PointCloud{{0}, {5}, {10}});
    const auto w_small = weak_witness_complex(line, IndexSet::range(3), IndexSet{0, 2}, 1);
    const auto w_large = weak_witness_complex(line, IndexSet::range(3), IndexSet{0, 1, 2}, 1);
    const bool non_functorial = !w_large.includes(w_small);

    const double secs = seconds_since(t0);
    const bool ok = dd_bad == 0 && chains >= 1000 && chain_bad == 0 && pairs >= 100 && vr_bad == 0 && non_functorial &&
                    secs < 120;
    return {ok, fmt::format("dd=0 on {} cells ({} bad), {} chain-map checks ({} bad), {} VR pairs ({} bad), "
                            "non-functoriality fixture {}, {:.2f} s",
                            cells, dd_bad, chains, chain_bad, pairs, vr_bad, non_functorial ? "shown" : "missing", secs)};
}

// 8 ----------------------------------------------------------------------

Outcome determinism(const Settings& st) {
    std::vector<fs::path> configs;
    for (const auto& e : fs::directory_iterator(st.configs))
        if (e.path().extension() == ".json") configs.push_back(e.path());
    std::sort(configs.begin(), configs.end());
    std::size_t same = 0;
    std::string bad;
    for (const auto& c : configs) {
        const auto a = cli_run(st, c, "run1"), b = cli_run(st, c, "run2");
        const bool ok = a.status == 0 && b.status == 0 && read_text(a.json) == read_text(b.json) &&
                        read_text(a.svg) == read_text(b.svg);
        same += ok;
        if (!ok) bad += " " + c.filename().string();
    }
    return {same == configs.size() && !configs.empty(),
            fmt::format("{}/{} configs byte-identical across reruns{}", same, configs.size(),
                        bad.empty() ? "" : "; differing:" + bad)};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    Settings st;
    std::vector<int> only;
    app.add_option("--cli", st.cli, "zzp executable")->required();
    app.add_option("--configs", st.configs, "directory of shipped configs")->required();
    app.add_option("--work", st.work, "scratch directory for CLI outputs")->required();
    app.add_option("--only", only, "run only these criteria");
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"hexagon bicomplex", hexagon},
        {"figure-8 landmark pairs", figure8_landmarks},
        {"bootstrap sample-size threshold", [&] { return bootstrap_threshold(st); }},
        {"sphere bootstrap", [&] { return sphere(st); }},
        {"torus witness comparison", [&] { return torus(st); }},
        {"oracle equivalence suite", oracle_suite},
        {"algebraic property suite", algebra_suite},
        {"determinism of shipped configs", [&] { return determinism(st); }},
    };
    bool all_pass = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int number = static_cast<int>(i) + 1;
        if (!only.empty() && std::find(only.begin(), only.end(), number) == only.end()) continue;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all_pass = all_pass && o.pass;
        std::cout << fmt::format("criterion {} [PRIMARY] {}: {} | {}", number, criteria[i].first,
                                 o.pass ? "PASS" : "FAIL", o.detail)
                  << std::endl;
    }
    return all_pass ? 0 : 1;
}
