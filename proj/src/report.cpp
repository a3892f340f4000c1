#include "zzp/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace zzp {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json index_json(ZigzagIndex i) {
    if (i.half_integral()) return i.value();
    return i.doubled / 2;
}

ZigzagIndex index_from_json(const json& j) {
    if (!j.is_number()) throw std::runtime_error("barcode: interval endpoint is not a number");
    const double twice = j.get<double>() * 2.0;
    const int d = static_cast<int>(twice);
    if (d != twice) throw std::runtime_error("barcode: endpoint must be an integer or a half");
    return ZigzagIndex{d};
}

}  // namespace

ordered_json barcode_to_json(const Barcode& b, const std::vector<int>& dims) {
    ordered_json out = ordered_json::array();
    for (int p : dims) {
        ordered_json list = ordered_json::array();
        const Barcode group = b.of_dimension(p);
        for (const auto& i : group.intervals())
            list.push_back({{"start", index_json(i.start)}, {"end", index_json(i.end)}, {"half_open", false}});
        out.push_back({{"dimension", p}, {"intervals", list}});
    }
    return out;
}

Barcode barcode_from_json(const json& j) {
    Barcode b;
    auto one = [&](const json& obj) {
        if (!obj.is_object() || !obj.contains("dimension") || !obj.contains("intervals"))
            throw std::runtime_error("barcode: expected {\"dimension\", \"intervals\"}");
        const int p = obj["dimension"].get<int>();
        for (const auto& iv : obj["intervals"]) {
            if (iv.value("half_open", false))
                throw std::runtime_error("barcode: half-open intervals are not supported");
            b.add({p, index_from_json(iv.at("start")), index_from_json(iv.at("end"))});
        }
    };
    if (j.is_array())
        for (const auto& obj : j) one(obj);
    else
        one(j);
    return b;
}

ordered_json to_json(const RunReport& r) {
    ordered_json j;
    j["pipeline"] = pipeline_name(r.config.kind);
    j["seed"] = r.config.seed;
    j["config"] = to_json(r.config);

    ordered_json stages = ordered_json::array();
    for (std::size_t s = 0; s < r.stages.size(); ++s) {
        const auto& st = r.stages[s];
        ordered_json o;
        o["index"] = s;
        o["size"] = st.size;
        o["betti"] = st.betti;
        if (st.parameter) o["parameter"] = *st.parameter;
        if (st.retries) o["retries"] = *st.retries;
        stages.push_back(o);
    }
    j["dims"] = r.dims;
    j["stages"] = stages;
    j["barcodes"] = barcode_to_json(r.barcode, r.dims);
    if (r.graph) {
        ordered_json edges = ordered_json::array();
        for (auto [a, b] : r.graph->edges) edges.push_back({a, b});
        j["graph"] = {{"vertices", r.graph->vertices}, {"edges", edges}};
    }
    if (r.config.timings) {
        ordered_json t;
        for (const auto& [name, secs] : r.timings) t[name] = secs;
        j["timings"] = t;
    }
    return j;
}

std::string dump(const RunReport& r) { return to_json(r).dump(2) + "\n"; }

void write_text(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace zzp
