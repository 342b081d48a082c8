#pragma once

#include <span>
#include <vector>

namespace trimode {

struct Extremum {
    double position = 0.0;
    double value = 0.0;
};

/// Interior extrema of a sampled curve after prominence filtering. Maxima and
/// minima strictly interleave along the axis (within each contiguous run of
/// finite samples). Curve endpoints are never reported.
struct ExtremaReport {
    std::vector<Extremum> maxima;
    std::vector<Extremum> minima;
    double prominence_threshold = 0.0;  // absolute, in curve units
};

/// Discrete local extrema by 3-point comparison with plateaus resolved to
/// their leftmost point, then simplified by cancelling adjacent max/min pairs
/// whose value difference is below prominence * (global max - global min).
/// Non-finite samples split the curve into independent runs; a curve with no
/// finite samples raises EmptyCurve.
ExtremaReport find_extrema(std::span<const double> grid, std::span<const double> values,
                           double prominence);

/// Transparency-window classification of an extrema report.
struct WindowReport {
    int window_count = 0;
    std::vector<double> dip_positions;
    std::vector<double> dip_depths;  // 1 - dip / mean(flanking peaks)
};

/// A window is an interior minimum flanked by a reported maximum on each
/// side; endpoint extrema never qualify as flanking peaks.
WindowReport classify_window(const ExtremaReport& report);

}  // namespace trimode
