#pragma once

#include "gitseq/path_analysis.hpp"
#include "gitseq/strata.hpp"

#include <string>

namespace gitseq {

// Rank-layered Hasse diagram (dim as rank), edges lower -> upper.
std::string to_dot(const StratumPoset& poset);

struct DiagramOptions {
    int k_max      = 0;    // 0: only the +-1 lines; else the full pencil up to k_max
    double x_range = 3.4;  // half-width of the plotted window
    int width      = 720;
    int height     = 560;
};

// The n=2 stability diagram: the double-root parabola y = x^2/4, the lines of
// slope cos(2 pi l/k) tangent to it at (2a, a^2), region labels, and an
// optional trace polyline with event markers. Byte-identical for identical
// inputs.
std::string broucke_svg(const DiagramOptions& options,
                        const std::vector<TracePoint>* trace_points = nullptr,
                        const std::vector<Event>* events = nullptr);

}  // namespace gitseq
