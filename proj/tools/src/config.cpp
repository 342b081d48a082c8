#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include <json.hpp>

namespace trimode::cli {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string where(const Entry& entry) {
    if (entry.line > 0) return "line " + std::to_string(entry.line) + ": ";
    return "";
}

[[noreturn]] void fail(const Entry& entry, const std::string& message) {
    throw ConfigError(where(entry) + "key '" + entry.key + "': " + message);
}

double parse_double(const Entry& entry) {
    const std::string v = trim(entry.value);
    double out = 0.0;
    const auto* first = v.data();
    const auto* last = v.data() + v.size();
    const auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc{} || res.ptr != last || v.empty()) {
        fail(entry, "expected a number, got '" + entry.value + "'");
    }
    return out;
}

long parse_long(const Entry& entry) {
    const std::string v = trim(entry.value);
    long out = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size() || v.empty()) {
        fail(entry, "expected an integer, got '" + entry.value + "'");
    }
    return out;
}

std::uint64_t parse_u64(const Entry& entry) {
    const std::string v = trim(entry.value);
    std::uint64_t out = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size() || v.empty()) {
        fail(entry, "expected an unsigned 64-bit integer, got '" + entry.value + "'");
    }
    return out;
}

bool parse_bool(const Entry& entry) {
    const std::string v = trim(entry.value);
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    fail(entry, "expected true/false, got '" + entry.value + "'");
}

std::vector<Entry> entries_from_json(const std::string& text) {
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("invalid JSON config: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("JSON config must be a flat object");

    std::vector<Entry> entries;
    char buf[64];
    for (const auto& [key, value] : doc.items()) {
        Entry entry{key, "", 0};
        if (value.is_string()) {
            entry.value = value.get<std::string>();
        } else if (value.is_boolean()) {
            entry.value = value.get<bool>() ? "true" : "false";
        } else if (value.is_number_float()) {
            const auto res = std::to_chars(buf, buf + sizeof(buf), value.get<double>());
            entry.value.assign(buf, res.ptr);
        } else if (value.is_number_unsigned()) {
            const auto res = std::to_chars(buf, buf + sizeof(buf), value.get<std::uint64_t>());
            entry.value.assign(buf, res.ptr);
        } else if (value.is_number_integer()) {
            const auto res = std::to_chars(buf, buf + sizeof(buf), value.get<std::int64_t>());
            entry.value.assign(buf, res.ptr);
        } else {
            throw ConfigError("key '" + key + "': unsupported JSON value type");
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

// A '#' at the line start or after whitespace begins a comment.
std::string strip_comment(const std::string& line) {
    for (std::size_t pos = 0; pos < line.size(); ++pos) {
        if (line[pos] == '#' &&
            (pos == 0 || std::isspace(static_cast<unsigned char>(line[pos - 1])))) {
            return line.substr(0, pos);
        }
    }
    return line;
}

const std::vector<std::string> kCommands = {"steady", "response", "flucspec", "stochastic",
                                            "detect"};

bool is_sweep_command(const std::string& command) { return command != "steady"; }

}  // namespace

std::vector<Entry> entries_from_text(const std::string& text) {
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return entries_from_json(text);

    std::vector<Entry> entries;
    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        const std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected key=value, got '" +
                              line + "'");
        }
        Entry entry{trim(line.substr(0, eq)), trim(line.substr(eq + 1)), line_no};
        if (entry.key.empty()) {
            throw ConfigError("line " + std::to_string(line_no) + ": empty key");
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

RunConfig build_config(const std::vector<Entry>& entries) {
    static const std::vector<std::string> known = {
        // meta
        "tool", "version",
        // dispatch and output
        "command", "out", "format",
        // effective model
        "Delta_c", "Delta_a", "Delta_b", "G_A", "G_B", "chi", "kappa", "gamma_A", "gamma_B",
        "N_c", "N_a", "N_b", "atoms_a", "atoms_b", "warn_fraction",
        // microscopic input
        "from_micro", "g_a", "g_b", "Omega",
        // sweeps
        "degenerate", "grid_start", "grid_stop", "grid_count",
        // stochastic estimator
        "time_step", "duration", "burn_in", "trajectories", "seed", "record_stride",
        "smoothing", "hann", "noise_scale", "threads",
        // window detection
        "source", "prominence"};

    // Last occurrence wins; overrides are appended after file entries.
    std::map<std::string, Entry> by_key;
    for (const Entry& entry : entries) {
        if (std::find(known.begin(), known.end(), entry.key) == known.end()) {
            throw ConfigError(where(entry) + "unknown key '" + entry.key + "'");
        }
        by_key[entry.key] = entry;
    }

    auto has = [&](const char* key) { return by_key.count(key) != 0; };
    auto get = [&](const char* key) -> const Entry& { return by_key.at(key); };
    auto number = [&](const char* key, double fallback) {
        return has(key) ? parse_double(get(key)) : fallback;
    };

    if (has("tool") && trim(get("tool").value) != "trimode") {
        fail(get("tool"), "config was written by a different tool");
    }

    // Required keys are collected first so an empty config reports all of
    // them at once.
    std::vector<std::string> missing;
    auto need = [&](const char* key) {
        if (!has(key)) missing.push_back(key);
    };
    need("command");
    need("out");
    const bool from_micro = has("from_micro") && parse_bool(get("from_micro"));
    if (from_micro) {
        need("atoms_a");
        need("g_a");
        need("atoms_b");
        need("g_b");
        need("Omega");
    } else {
        need("G_A");
        need("G_B");
        need("gamma_A");
        need("gamma_B");
    }
    const std::string command = has("command") ? trim(get("command").value) : "";
    if (!command.empty() && is_sweep_command(command)) {
        need("grid_start");
        need("grid_stop");
        need("grid_count");
    }
    if (command == "stochastic") {
        need("duration");
        need("trajectories");
    }
    if (!missing.empty()) {
        std::string list;
        for (std::size_t i = 0; i < missing.size(); ++i) {
            list += (i ? ", " : "") + missing[i];
        }
        throw ConfigError("missing required keys: " + list);
    }

    RunConfig cfg;
    cfg.command = command;
    if (std::find(kCommands.begin(), kCommands.end(), cfg.command) == kCommands.end()) {
        fail(get("command"), "must be one of steady, response, flucspec, stochastic, detect");
    }
    cfg.out = trim(get("out").value);
    if (cfg.out.empty()) fail(get("out"), "output path must not be empty");

    SystemParams& p = cfg.params;
    p.detuning_c = number("Delta_c", 0.0);
    p.detuning_a = number("Delta_a", 0.0);
    p.detuning_b = number("Delta_b", 0.0);
    p.cavity_decay = number("kappa", 1.0);
    if (!(p.cavity_decay > 0.0)) fail(get("kappa"), "must be > 0");
    p.thermal_c = number("N_c", 0.0);
    p.thermal_a = number("N_a", 0.0);
    p.thermal_b = number("N_b", 0.0);
    for (const char* key : {"N_c", "N_a", "N_b"}) {
        if (has(key) && parse_double(get(key)) < 0.0) fail(get(key), "must be >= 0");
    }

    if (from_micro) {
        for (const char* key : {"G_A", "G_B", "chi"}) {
            if (has(key)) fail(get(key), "conflicts with from_micro=true");
        }
        const double na = parse_double(get("atoms_a"));
        const double nb = parse_double(get("atoms_b"));
        if (!(na >= 1.0)) fail(get("atoms_a"), "must be >= 1");
        if (!(nb >= 1.0)) fail(get("atoms_b"), "must be >= 1");
        MicroscopicParams micro;
        micro.atom_count_a = static_cast<std::int64_t>(na);
        micro.atom_count_b = static_cast<std::int64_t>(nb);
        micro.single_atom_coupling_a = parse_double(get("g_a"));
        micro.single_atom_coupling_b = parse_double(get("g_b"));
        micro.drive_per_atom = parse_double(get("Omega"));
        const EffectiveCouplings eff = effective_from_microscopic(micro);
        p.coupling_a = eff.coupling_a;
        p.coupling_b = eff.coupling_b;
        p.drive = eff.drive;
        p.atoms_a = na;
        p.atoms_b = nb;
    } else {
        p.coupling_a = parse_double(get("G_A"));
        p.coupling_b = parse_double(get("G_B"));
        if (!(p.coupling_a >= 0.0)) fail(get("G_A"), "must be >= 0");
        if (!(p.coupling_b >= 0.0)) fail(get("G_B"), "must be >= 0");
        p.drive = number("chi", 1.0);
        if (!(p.drive >= 0.0)) fail(get("chi"), "must be >= 0");
        if (has("atoms_a")) {
            p.atoms_a = parse_double(get("atoms_a"));
            if (!(*p.atoms_a > 0.0)) fail(get("atoms_a"), "must be > 0");
        }
        if (has("atoms_b")) {
            p.atoms_b = parse_double(get("atoms_b"));
            if (!(*p.atoms_b > 0.0)) fail(get("atoms_b"), "must be > 0");
        }
    }
    p.decay_a = parse_double(get("gamma_A"));
    p.decay_b = parse_double(get("gamma_B"));
    if (!(p.decay_a >= 0.0)) fail(get("gamma_A"), "must be >= 0");
    if (!(p.decay_b >= 0.0)) fail(get("gamma_B"), "must be >= 0");
    p.excitation_warn_fraction = number("warn_fraction", 0.1);
    if (!(p.excitation_warn_fraction > 0.0)) fail(get("warn_fraction"), "must be > 0");

    cfg.degenerate = has("degenerate") ? parse_bool(get("degenerate")) : true;

    if (is_sweep_command(cfg.command)) {
        GridSpec grid;
        grid.start = parse_double(get("grid_start"));
        grid.stop = parse_double(get("grid_stop"));
        grid.count = parse_long(get("grid_count"));
        if (!(grid.start < grid.stop)) fail(get("grid_start"), "grid_start must be < grid_stop");
        if (grid.count < 2) fail(get("grid_count"), "must be >= 2 for sweeps");
        cfg.grid = grid;
    }

    cfg.format = has("format") ? trim(get("format").value) : "";
    if (cfg.format.empty()) {
        cfg.format = (cfg.command == "steady" || cfg.command == "detect") ? "json" : "csv";
    }
    if (cfg.format != "csv" && cfg.format != "json") {
        fail(get("format"), "must be csv or json");
    }
    if ((cfg.command == "steady" || cfg.command == "detect") && cfg.format != "json") {
        fail(get("format"), cfg.command + " output is a JSON record; format must be json");
    }

    if (cfg.command == "stochastic") {
        if (!(p.decay_a > 0.0)) fail(get("gamma_A"), "stochastic runs require gamma_A > 0");
        if (!(p.decay_b > 0.0)) fail(get("gamma_B"), "stochastic runs require gamma_B > 0");
        SimulationConfig& sim = cfg.sim;
        const double max_rate = std::max({p.cavity_decay, p.decay_a, p.decay_b});
        const double tau_slow = 2.0 / std::min({p.cavity_decay, p.decay_a, p.decay_b});
        sim.time_step = number("time_step", 0.05 / max_rate);
        if (!(sim.time_step > 0.0)) fail(get("time_step"), "must be > 0");
        sim.duration = parse_double(get("duration"));
        if (!(sim.duration > 0.0)) fail(get("duration"), "must be > 0");
        sim.burn_in = number("burn_in", 10.0 * tau_slow);
        if (!(sim.burn_in >= 0.0)) fail(get("burn_in"), "must be >= 0");
        sim.trajectory_count = static_cast<int>(parse_long(get("trajectories")));
        if (sim.trajectory_count < 1) fail(get("trajectories"), "must be >= 1");
        sim.seed = has("seed") ? parse_u64(get("seed")) : 0;
        sim.record_stride = has("record_stride")
                                ? static_cast<int>(parse_long(get("record_stride")))
                                : 0;
        if (sim.record_stride < 0) fail(get("record_stride"), "must be >= 0");
        sim.smoothing_halfwidth = number("smoothing", 0.1);
        if (!(sim.smoothing_halfwidth >= 0.0)) fail(get("smoothing"), "must be >= 0");
        sim.hann_taper = has("hann") && parse_bool(get("hann"));
        sim.noise_scale = number("noise_scale", 1.0);
        if (!(sim.noise_scale >= 0.0)) fail(get("noise_scale"), "must be >= 0");
        sim.threads = has("threads") ? static_cast<int>(parse_long(get("threads"))) : 0;
        if (sim.threads < 0) fail(get("threads"), "must be >= 0");
    } else {
        for (const char* key : {"time_step", "duration", "burn_in", "trajectories", "seed",
                                "record_stride", "smoothing", "hann", "noise_scale", "threads"}) {
            if (has(key)) {
                fail(get(key), "only valid for the stochastic command");
            }
        }
    }

    if (cfg.command == "detect") {
        cfg.source = has("source") ? trim(get("source").value) : "response";
        if (cfg.source != "response" && cfg.source != "flucspec") {
            fail(get("source"), "must be response or flucspec");
        }
        cfg.prominence = number("prominence", 0.02);
        if (!(cfg.prominence >= 0.0)) fail(get("prominence"), "must be >= 0");
    } else {
        for (const char* key : {"source", "prominence"}) {
            if (has(key)) fail(get(key), "only valid for the detect command");
        }
    }

    cfg.params.validate();
    return cfg;
}

RunConfig parse_config(const std::string& text) { return build_config(entries_from_text(text)); }

}  // namespace trimode::cli
