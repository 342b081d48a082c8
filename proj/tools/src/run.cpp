#include "run.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "output.hpp"
#include "presets.hpp"
#include "trimode/extrema.hpp"
#include "trimode/spectra.hpp"
#include "trimode/steady_state.hpp"
#include "trimode/stochastic.hpp"
#include "trimode/version.hpp"

namespace trimode::cli {

namespace {

void emit_warnings(const std::vector<std::string>& warnings) {
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
}

nlohmann::ordered_json complex_pair(const Complex& z) {
    return nlohmann::ordered_json::array({z.real(), z.imag()});
}

void write_table(const RunConfig& config, const std::vector<std::string>& header,
                 const std::vector<std::span<const double>>& columns) {
    if (config.format == "csv") {
        write_file(config.out, csv_table(header, columns));
    } else {
        write_file(config.out, json_table(header, columns).dump(2) + "\n");
    }
}

double max_finite(std::span<const double> values) {
    double best = 0.0;
    for (double v : values) {
        if (std::isfinite(v)) best = std::max(best, v);
    }
    return best;
}

nlohmann::ordered_json window_json(const WindowReport& report) {
    nlohmann::ordered_json doc;
    doc["window_count"] = report.window_count;
    doc["dip_positions"] = report.dip_positions;
    doc["dip_depths"] = report.dip_depths;
    return doc;
}

void run_steady(const RunConfig& config) {
    const SteadyState s = steady_state_analytic(config.params);
    emit_warnings(
        low_excitation_warnings(config.params, std::norm(s.amp_a), std::norm(s.amp_b)));
    nlohmann::ordered_json doc;
    doc["amp_c"] = complex_pair(s.amp_c);
    doc["amp_a"] = complex_pair(s.amp_a);
    doc["amp_b"] = complex_pair(s.amp_b);
    write_file(config.out, doc.dump(2) + "\n");
}

void run_response(const RunConfig& config) {
    const std::vector<double> grid =
        linspace(config.grid->start, config.grid->stop, static_cast<std::size_t>(config.grid->count));
    const ResponseCurve curve = response_sweep(config.params, grid, config.degenerate);
    emit_warnings(low_excitation_warnings(config.params, max_finite(curve.intensity_a),
                                          max_finite(curve.intensity_b)));
    write_table(config, {"delta", "intensity_a", "intensity_b", "intensity_c"},
                {curve.grid, curve.intensity_a, curve.intensity_b, curve.intensity_c});
}

void run_flucspec(const RunConfig& config) {
    const std::vector<double> grid =
        linspace(config.grid->start, config.grid->stop, static_cast<std::size_t>(config.grid->count));
    const SpectrumCurve curve = spectrum_sweep(config.params, grid);
    write_table(config, {"omega", "s_c", "s_a", "s_b"},
                {curve.grid, curve.s_c, curve.s_a, curve.s_b});
}

void run_stochastic(const RunConfig& config) {
    const std::vector<double> grid =
        linspace(config.grid->start, config.grid->stop, static_cast<std::size_t>(config.grid->count));
    const SpectrumCurve curve = estimate_spectrum(config.params, config.sim, grid);
    emit_warnings(curve.warnings);
    write_table(config, {"omega", "s_c", "s_a", "s_b"},
                {curve.grid, curve.s_c, curve.s_a, curve.s_b});
}

void run_detect(const RunConfig& config) {
    const std::vector<double> grid =
        linspace(config.grid->start, config.grid->stop, static_cast<std::size_t>(config.grid->count));
    nlohmann::ordered_json doc;
    if (config.source == "response") {
        const ResponseCurve curve = response_sweep(config.params, grid, config.degenerate);
        emit_warnings(low_excitation_warnings(config.params, max_finite(curve.intensity_a),
                                              max_finite(curve.intensity_b)));
        const std::pair<const char*, const std::vector<double>*> channels[] = {
            {"intensity_a", &curve.intensity_a},
            {"intensity_b", &curve.intensity_b},
            {"intensity_c", &curve.intensity_c}};
        for (const auto& [name, values] : channels) {
            doc[name] = window_json(
                classify_window(find_extrema(curve.grid, *values, config.prominence)));
        }
    } else {
        const SpectrumCurve curve = spectrum_sweep(config.params, grid);
        const std::pair<const char*, const std::vector<double>*> channels[] = {
            {"s_c", &curve.s_c}, {"s_a", &curve.s_a}, {"s_b", &curve.s_b}};
        for (const auto& [name, values] : channels) {
            doc[name] = window_json(
                classify_window(find_extrema(curve.grid, *values, config.prominence)));
        }
    }
    write_file(config.out, doc.dump(2) + "\n");
}

}  // namespace

int run(const RunConfig& config) {
    if (config.command == "steady") {
        run_steady(config);
    } else if (config.command == "response") {
        run_response(config);
    } else if (config.command == "flucspec") {
        run_flucspec(config);
    } else if (config.command == "stochastic") {
        run_stochastic(config);
    } else if (config.command == "detect") {
        run_detect(config);
    } else {
        throw ConfigError("unknown command '" + config.command + "'");
    }
    write_file(config.out + ".meta.json", sidecar_json(config).dump(2) + "\n");
    return kExitOk;
}

namespace {

const char kUsage[] =
    "usage: trimode <command> [--config FILE] [--preset NAME] [--out PATH]\n"
    "                [--format csv|json] [--seed U64] [key=value ...]\n"
    "\n"
    "commands:\n"
    "  steady      driven steady-state amplitudes (JSON record)\n"
    "  response    response intensities vs detuning (CSV/JSON table)\n"
    "  flucspec    closed-form fluctuation spectra vs frequency\n"
    "  stochastic  trajectory-ensemble spectrum estimate\n"
    "  detect      transparency-window classification (JSON)\n"
    "\n"
    "Values come from the preset, then the config file, then key=value\n"
    "arguments, then dedicated flags. TRIMODE_THREADS caps worker threads\n"
    "(0 = auto). Run `trimode presets` to list built-in presets.\n";

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void apply_thread_cap(RunConfig& config) {
    const char* env = std::getenv("TRIMODE_THREADS");
    if (env == nullptr || config.command != "stochastic") return;
    int cap = 0;
    const std::string text(env);
    const auto res = std::from_chars(text.data(), text.data() + text.size(), cap);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || cap < 0) {
        throw ConfigError("TRIMODE_THREADS must be a non-negative integer");
    }
    if (cap == 0) return;  // auto
    config.sim.threads = config.sim.threads == 0 ? cap : std::min(config.sim.threads, cap);
}

}  // namespace

int dispatch(int argc, const char* const* argv) {
    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
            std::cout << kUsage;
            return args.empty() ? kExitConfig : kExitOk;
        }
        if (args[0] == "--version" || args[0] == "version") {
            std::cout << "trimode " << kVersion << "\n";
            return kExitOk;
        }
        if (args[0] == "presets") {
            for (const std::string& name : preset_names()) std::cout << name << "\n";
            return kExitOk;
        }

        std::vector<Entry> entries;
        std::vector<Entry> overrides;
        auto flag_value = [&](std::size_t& i, const std::string& flag) -> std::string {
            if (i + 1 >= args.size()) throw ConfigError(flag + " requires a value");
            return args[++i];
        };

        entries.push_back({"command", args[0], 0});
        for (std::size_t i = 1; i < args.size(); ++i) {
            const std::string& arg = args[i];
            if (arg == "--preset") {
                for (Entry& e : preset_entries(flag_value(i, arg))) entries.push_back(std::move(e));
            } else if (arg == "--config") {
                for (Entry& e : entries_from_text(read_text_file(flag_value(i, arg)))) {
                    entries.push_back(std::move(e));
                }
            } else if (arg == "--out") {
                overrides.push_back({"out", flag_value(i, arg), 0});
            } else if (arg == "--format") {
                overrides.push_back({"format", flag_value(i, arg), 0});
            } else if (arg == "--seed") {
                overrides.push_back({"seed", flag_value(i, arg), 0});
            } else if (arg.rfind("--", 0) == 0) {
                throw ConfigError("unknown flag '" + arg + "'");
            } else if (arg.find('=') != std::string::npos) {
                const std::size_t eq = arg.find('=');
                overrides.push_back({arg.substr(0, eq), arg.substr(eq + 1), 0});
            } else {
                throw ConfigError("unexpected argument '" + arg + "'");
            }
        }
        for (Entry& e : overrides) entries.push_back(std::move(e));

        RunConfig config = build_config(entries);
        apply_thread_cap(config);
        return run(config);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const InvalidParameter& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const SingularParameters& e) {
        std::cerr << "singular parameters: " << e.what() << "\n";
        return kExitSingular;
    } catch (const IntegrationDiverged& e) {
        std::cerr << "integration diverged: " << e.what() << "\n";
        return kExitDiverged;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace trimode::cli
