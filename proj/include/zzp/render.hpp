#pragma once

#include <string>
#include <vector>

#include "zzp/zigzag.hpp"

namespace zzp {

struct BarcodeStyle {
    int width = 640;
    int bar_spacing = 12;
    int group_gap = 24;
    /// Largest stage index on the axis; -1 derives it from the intervals.
    int last_stage = -1;
    std::vector<int> dims;  // groups to draw; empty means the barcode's own
    std::string title;
};

/// Barcode plot: one horizontal `class="bar"` line per interval, grouped by
/// dimension, with ticks at integer stage indices.
std::string render_barcode(const Barcode& b, const BarcodeStyle& style = {});

/// Vertices on a circle, edges as straight lines.
std::string render_graph(const Graph& g, int size = 480);

}  // namespace zzp
