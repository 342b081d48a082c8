#include "trimode/extrema.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "trimode/errors.hpp"

namespace trimode {

namespace {

struct Node {
    std::size_t idx;
    double value;
    bool is_max;
    bool endpoint;
};

// Alternating extremum sequence of one finite run, endpoints included as
// anchors. Plateaus are compressed and resolved to their leftmost point.
std::vector<Node> alternating_sequence(std::span<const double> values, std::size_t begin,
                                       std::size_t end) {
    std::vector<std::pair<std::size_t, double>> plateaus;
    for (std::size_t i = begin; i < end; ++i) {
        if (plateaus.empty() || values[i] != plateaus.back().second) {
            plateaus.emplace_back(i, values[i]);
        }
    }
    std::vector<Node> seq;
    const std::size_t m = plateaus.size();
    if (m < 2) return seq;  // constant run

    seq.push_back({plateaus[0].first, plateaus[0].second,
                   plateaus[0].second > plateaus[1].second, true});
    for (std::size_t p = 1; p + 1 < m; ++p) {
        const double prev = plateaus[p - 1].second;
        const double cur = plateaus[p].second;
        const double next = plateaus[p + 1].second;
        if (cur > prev && cur > next) {
            seq.push_back({plateaus[p].first, cur, true, false});
        } else if (cur < prev && cur < next) {
            seq.push_back({plateaus[p].first, cur, false, false});
        }
    }
    seq.push_back({plateaus[m - 1].first, plateaus[m - 1].second,
                   plateaus[m - 1].second > plateaus[m - 2].second, true});
    return seq;
}

// Persistence-style simplification: repeatedly cancel the adjacent pair with
// the smallest value difference until every transition is >= threshold. Keeps
// the sequence strictly alternating, so every surviving extremum rises or
// falls by at least the threshold on both sides.
void cancel_pairs(std::vector<Node>& seq, double threshold) {
    while (seq.size() >= 2) {
        std::size_t best = seq.size();
        double best_diff = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            const double diff = std::abs(seq[i].value - seq[i + 1].value);
            if (diff < best_diff) {
                best_diff = diff;
                best = i;
            }
        }
        if (!(best_diff < threshold)) break;

        seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(best),
                  seq.begin() + static_cast<std::ptrdiff_t>(best) + 2);
        if (best > 0 && best < seq.size() && seq[best - 1].is_max == seq[best].is_max) {
            // merge: keep the more extreme value, leftmost on ties
            const bool keep_right = seq[best].is_max ? (seq[best].value > seq[best - 1].value)
                                                     : (seq[best].value < seq[best - 1].value);
            seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(keep_right ? best - 1 : best));
        }
    }
}

}  // namespace

ExtremaReport find_extrema(std::span<const double> grid, std::span<const double> values,
                           double prominence) {
    if (grid.size() != values.size()) {
        throw InvalidParameter("find_extrema: grid and values differ in length");
    }
    if (grid.size() < 3) throw InvalidParameter("find_extrema: curve needs at least 3 points");
    if (!(std::isfinite(prominence) && prominence >= 0.0)) {
        throw InvalidParameter("find_extrema: prominence must be >= 0");
    }

    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    std::size_t finite_count = 0;
    for (double v : values) {
        if (std::isfinite(v)) {
            ++finite_count;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (finite_count == 0) throw EmptyCurve("find_extrema: no finite samples in curve");

    ExtremaReport report;
    report.prominence_threshold = prominence * (hi - lo);

    std::size_t i = 0;
    const std::size_t n = values.size();
    while (i < n) {
        while (i < n && !std::isfinite(values[i])) ++i;
        std::size_t run_end = i;
        while (run_end < n && std::isfinite(values[run_end])) ++run_end;
        if (run_end - i >= 3) {
            std::vector<Node> seq = alternating_sequence(values, i, run_end);
            cancel_pairs(seq, report.prominence_threshold);
            for (const Node& node : seq) {
                if (node.endpoint) continue;
                Extremum e{grid[node.idx], node.value};
                (node.is_max ? report.maxima : report.minima).push_back(e);
            }
        }
        i = run_end;
    }
    return report;
}

WindowReport classify_window(const ExtremaReport& report) {
    struct Entry {
        double position;
        double value;
        bool is_max;
    };
    std::vector<Entry> entries;
    entries.reserve(report.maxima.size() + report.minima.size());
    for (const Extremum& e : report.maxima) entries.push_back({e.position, e.value, true});
    for (const Extremum& e : report.minima) entries.push_back({e.position, e.value, false});
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.position < b.position; });

    WindowReport windows;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (entries[k].is_max) continue;
        if (k == 0 || k + 1 == entries.size()) continue;
        if (!entries[k - 1].is_max || !entries[k + 1].is_max) continue;
        const double peak_mean = 0.5 * (entries[k - 1].value + entries[k + 1].value);
        windows.window_count += 1;
        windows.dip_positions.push_back(entries[k].position);
        windows.dip_depths.push_back(peak_mean > 0.0 ? 1.0 - entries[k].value / peak_mean : 0.0);
    }
    return windows;
}

}  // namespace trimode
