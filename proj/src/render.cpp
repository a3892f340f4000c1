#include "zzp/render.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace zzp {

namespace {

constexpr int left_margin = 56;
constexpr int right_margin = 24;
constexpr int top_margin = 32;
constexpr int axis_space = 36;

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_barcode(const Barcode& b, const BarcodeStyle& style) {
    std::vector<int> dims = style.dims.empty() ? b.dimensions() : style.dims;
    int last = style.last_stage;
    if (last < 0) {
        last = 0;
        for (const auto& i : b.intervals()) last = std::max(last, (i.end.doubled + 1) / 2);
    }
    const int span = std::max(last, 1);
    const double plot_w = style.width - left_margin - right_margin;
    auto x_of = [&](ZigzagIndex i) { return left_margin + plot_w * i.value() / span; };

    int body = 0;
    for (int p : dims) body += style.group_gap + style.bar_spacing * static_cast<int>(std::max<std::size_t>(b.of_dimension(p).size(), 1));
    const int axis_y = top_margin + body + 8;
    const int height = axis_y + axis_space;

    std::string out;
    out += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
        style.width, height, style.width, height);
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!style.title.empty())
        out += fmt::format("<text x=\"{}\" y=\"20\" font-family=\"sans-serif\" font-size=\"13\">{}</text>\n",
                           left_margin, escape(style.title));

    out += fmt::format("<g class=\"axis\" stroke=\"black\" stroke-width=\"1\">\n"
                       "<line x1=\"{}\" y1=\"{}\" x2=\"{:.2f}\" y2=\"{}\"/>\n",
                       left_margin, axis_y, left_margin + plot_w, axis_y);
    const int step = std::max(1, static_cast<int>(std::ceil(span / 20.0)));
    std::string labels;
    for (int t = 0; t <= span; t += step) {
        const double x = x_of(ZigzagIndex::stage(t));
        out += fmt::format("<line class=\"tick\" x1=\"{:.2f}\" y1=\"{}\" x2=\"{:.2f}\" y2=\"{}\" data-stage=\"{}\"/>\n",
                           x, axis_y, x, axis_y + 5, t);
        labels += fmt::format(
            "<text x=\"{:.2f}\" y=\"{}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">{}</text>\n",
            x, axis_y + 17, t);
    }
    out += "</g>\n" + labels;

    int y = top_margin;
    for (int p : dims) {
        y += style.group_gap;
        const auto group = b.of_dimension(p);
        out += fmt::format("<g class=\"dimension\" data-dimension=\"{}\">\n", p);
        out += fmt::format(
            "<text x=\"8\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\">H{}</text>\n", y - 8, p);
        int row = 0;
        for (const auto& i : group.intervals()) {
            const int yy = y + row * style.bar_spacing;
            out += fmt::format(
                "<line class=\"bar\" x1=\"{:.2f}\" y1=\"{}\" x2=\"{:.2f}\" y2=\"{}\" stroke=\"#1f4e8c\" "
                "stroke-width=\"4\" stroke-linecap=\"round\"/>\n",
                x_of(i.start), yy, x_of(i.end), yy);
            ++row;
        }
        out += "</g>\n";
        y += style.bar_spacing * static_cast<int>(std::max<std::size_t>(group.size(), 1));
    }
    out += "</svg>\n";
    return out;
}

std::string render_graph(const Graph& g, int size) {
    const double c = size / 2.0;
    const double r = size / 2.0 - 32;
    auto pos = [&](std::size_t v) {
        const double a = g.vertices ? 2.0 * std::numbers::pi * static_cast<double>(v) / g.vertices : 0.0;
        return std::pair{c + r * std::cos(a), c - r * std::sin(a)};
    };
    std::string out = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n"
        "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
        size);
    out += "<g class=\"edges\" stroke=\"#555\" stroke-width=\"1\">\n";
    for (auto [a, b] : g.edges) {
        auto [x1, y1] = pos(a);
        auto [x2, y2] = pos(b);
        out += fmt::format("<line class=\"edge\" x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n", x1, y1,
                           x2, y2);
    }
    out += "</g>\n<g class=\"vertices\" font-family=\"sans-serif\" font-size=\"9\">\n";
    for (std::size_t v = 0; v < g.vertices; ++v) {
        auto [x, y] = pos(v);
        out += fmt::format("<circle class=\"vertex\" cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"6\" fill=\"#c0392b\"/>\n", x, y);
        out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n", x, y - 9, v);
    }
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace zzp
