#include "output.hpp"

#include <charconv>
#include <fstream>

#include "trimode/version.hpp"

namespace trimode::cli {

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string format_double17(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::span<const double>>& columns) {
    std::string out;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (c) out += ',';
        out += header[c];
    }
    out += '\n';
    const std::size_t rows = columns.empty() ? 0 : columns[0].size();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (c) out += ',';
            out += format_double17(columns[c][r]);
        }
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json json_table(const std::vector<std::string>& header,
                                  const std::vector<std::span<const double>>& columns) {
    nlohmann::ordered_json doc;
    for (std::size_t c = 0; c < header.size(); ++c) {
        doc[header[c]] = std::vector<double>(columns[c].begin(), columns[c].end());
    }
    return doc;
}

nlohmann::ordered_json sidecar_json(const RunConfig& config) {
    nlohmann::ordered_json doc;
    doc["tool"] = "trimode";
    doc["version"] = kVersion;
    doc["command"] = config.command;
    doc["out"] = config.out;
    doc["format"] = config.format;

    const SystemParams& p = config.params;
    doc["Delta_c"] = p.detuning_c;
    doc["Delta_a"] = p.detuning_a;
    doc["Delta_b"] = p.detuning_b;
    doc["G_A"] = p.coupling_a;
    doc["G_B"] = p.coupling_b;
    doc["chi"] = p.drive;
    doc["kappa"] = p.cavity_decay;
    doc["gamma_A"] = p.decay_a;
    doc["gamma_B"] = p.decay_b;
    doc["N_c"] = p.thermal_c;
    doc["N_a"] = p.thermal_a;
    doc["N_b"] = p.thermal_b;
    if (p.atoms_a) doc["atoms_a"] = *p.atoms_a;
    if (p.atoms_b) doc["atoms_b"] = *p.atoms_b;
    doc["warn_fraction"] = p.excitation_warn_fraction;
    doc["degenerate"] = config.degenerate;

    if (config.grid) {
        doc["grid_start"] = config.grid->start;
        doc["grid_stop"] = config.grid->stop;
        doc["grid_count"] = config.grid->count;
    }
    if (config.command == "stochastic") {
        const SimulationConfig& sim = config.sim;
        doc["time_step"] = sim.time_step;
        doc["duration"] = sim.duration;
        doc["burn_in"] = sim.burn_in;
        doc["trajectories"] = sim.trajectory_count;
        doc["seed"] = sim.seed;
        doc["record_stride"] = sim.record_stride;
        doc["smoothing"] = sim.smoothing_halfwidth;
        doc["hann"] = sim.hann_taper;
        doc["noise_scale"] = sim.noise_scale;
        doc["threads"] = sim.threads;
    }
    if (config.command == "detect") {
        doc["source"] = config.source;
        doc["prominence"] = config.prominence;
    }
    return doc;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw IoError("failed while writing '" + path + "'");
}

}  // namespace trimode::cli
