#include "presets.hpp"

#include <map>

namespace trimode::cli {

namespace {

std::vector<Entry> make(std::initializer_list<std::pair<const char*, const char*>> pairs) {
    std::vector<Entry> entries;
    for (const auto& [k, v] : pairs) entries.push_back({k, v, 0});
    return entries;
}

// Response-sweep regimes share the wide detuning grid; the noise-spectrum
// regimes use the narrower frequency grid at zero detuning.
const std::map<std::string, std::vector<Entry>>& table() {
    static const std::map<std::string, std::vector<Entry>> presets = {
        {"fig2a", make({{"G_A", "10"}, {"G_B", "1"}, {"gamma_A", "90"}, {"gamma_B", "9"},
                        {"kappa", "1"}, {"chi", "1"}, {"N_c", "0"}, {"N_a", "0"}, {"N_b", "0"},
                        {"degenerate", "true"}, {"grid_start", "-100"}, {"grid_stop", "100"},
                        {"grid_count", "2001"}})},
        {"fig2b", make({{"G_A", "1"}, {"G_B", "10"}, {"gamma_A", "9"}, {"gamma_B", "90"},
                        {"kappa", "1"}, {"chi", "1"}, {"N_c", "0"}, {"N_a", "0"}, {"N_b", "0"},
                        {"degenerate", "true"}, {"grid_start", "-100"}, {"grid_stop", "100"},
                        {"grid_count", "2001"}})},
        {"fig3a", make({{"G_A", "10"}, {"G_B", "10"}, {"gamma_A", "5"}, {"gamma_B", "5"},
                        {"kappa", "1"}, {"chi", "1"}, {"N_c", "0"}, {"N_a", "0"}, {"N_b", "0"},
                        {"degenerate", "true"}, {"grid_start", "-100"}, {"grid_stop", "100"},
                        {"grid_count", "2001"}})},
        {"fig3b", make({{"G_A", "10"}, {"G_B", "10"}, {"gamma_A", "50"}, {"gamma_B", "50"},
                        {"kappa", "1"}, {"chi", "1"}, {"N_c", "0"}, {"N_a", "0"}, {"N_b", "0"},
                        {"degenerate", "true"}, {"grid_start", "-100"}, {"grid_stop", "100"},
                        {"grid_count", "2001"}})},
        {"fig3c", make({{"G_A", "10"}, {"G_B", "10"}, {"gamma_A", "50"}, {"gamma_B", "5"},
                        {"kappa", "1"}, {"chi", "1"}, {"N_c", "0"}, {"N_a", "0"}, {"N_b", "0"},
                        {"degenerate", "true"}, {"grid_start", "-100"}, {"grid_stop", "100"},
                        {"grid_count", "2001"}})},
        {"fig3d", make({{"G_A", "10"}, {"G_B", "10"}, {"gamma_A", "5"}, {"gamma_B", "50"},
                        {"kappa", "1"}, {"chi", "1"}, {"N_c", "0"}, {"N_a", "0"}, {"N_b", "0"},
                        {"degenerate", "true"}, {"grid_start", "-100"}, {"grid_stop", "100"},
                        {"grid_count", "2001"}})},
        {"fig4a", make({{"G_A", "10"}, {"G_B", "1"}, {"gamma_A", "90"}, {"gamma_B", "9"},
                        {"kappa", "1"}, {"chi", "1"}, {"Delta_c", "0"}, {"Delta_a", "0"},
                        {"Delta_b", "0"}, {"N_c", "0"}, {"N_a", "0"}, {"N_b", "0"},
                        {"grid_start", "-30"}, {"grid_stop", "30"}, {"grid_count", "1201"}})},
        {"fig4b", make({{"G_A", "1"}, {"G_B", "10"}, {"gamma_A", "9"}, {"gamma_B", "90"},
                        {"kappa", "1"}, {"chi", "1"}, {"Delta_c", "0"}, {"Delta_a", "0"},
                        {"Delta_b", "0"}, {"N_c", "0"}, {"N_a", "0"}, {"N_b", "0"},
                        {"grid_start", "-30"}, {"grid_stop", "30"}, {"grid_count", "1201"}})},
    };
    return presets;
}

}  // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, entries] : table()) out.push_back(name);
        return out;
    }();
    return names;
}

std::vector<Entry> preset_entries(const std::string& name) {
    const auto it = table().find(name);
    if (it == table().end()) {
        std::string list;
        for (const std::string& n : preset_names()) list += (list.empty() ? "" : ", ") + n;
        throw ConfigError("unknown preset '" + name + "' (available: " + list + ")");
    }
    return it->second;
}

}  // namespace trimode::cli
