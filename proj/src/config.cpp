#include "config.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

namespace nvmem {

double parse_si_number(const std::string& text) {
    static const struct { const char* suffix; double mult; } table[] = {
        {"kHz", 1e3}, {"MHz", 1e6}, {"GHz", 1e9}, {"Hz", 1.0},
        {"ms", 1e-3}, {"us", 1e-6}, {"ns", 1e-9},
        {"mW", 1.0},  {"V/um", 1.0}, {"G", 1.0}, {"s", 1.0},
    };
    std::string body = text;
    double mult = 1.0;
    for (const auto& e : table) {
        const size_t n = std::strlen(e.suffix);
        if (body.size() > n && body.compare(body.size() - n, n, e.suffix) == 0) {
            body = body.substr(0, body.size() - n);
            mult = e.mult;
            break;
        }
    }
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(body.c_str(), &end);
    if (end == body.c_str() || *end != '\0' || errno == ERANGE)
        throw std::invalid_argument("not a number: '" + text + "'");
    return v * mult;
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    return (a == std::string::npos) ? std::string() : s.substr(a, b - a + 1);
}

struct KeyEntry {
    const char* name;
    enum Kind { number, integer, boolean, convention } kind;
    std::function<void(RunConfig&, const std::string&)> set;
    std::function<std::string(const RunConfig&)> get;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool parse_bool(const std::string& v) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw std::invalid_argument("not a bool: '" + v + "'");
}

#define NUM_KEY(field)                                                            \
    KeyEntry{#field, KeyEntry::number,                                            \
             [](RunConfig& c, const std::string& v) { c.field = parse_si_number(v); }, \
             [](const RunConfig& c) { return fmt(c.field); }}

const std::vector<KeyEntry>& registry() {
    static const std::vector<KeyEntry> keys = {
        NUM_KEY(vacuum_permittivity),
        NUM_KEY(reduced_planck),
        NUM_KEY(speed_of_light),
        NUM_KEY(diamond_refractive_index),
        NUM_KEY(zpl_wavelength),
        NUM_KEY(radiative_decay_gamma),
        NUM_KEY(zpl_branching),
        NUM_KEY(ex_es),
        NUM_KEY(ey_es),
        NUM_KEY(bz_es),
        NUM_KEY(ex_gs),
        NUM_KEY(ey_gs),
        NUM_KEY(bz_gs),
        NUM_KEY(quality_factor),
        NUM_KEY(mode_volume),
        NUM_KEY(ensemble_size),
        NUM_KEY(permittivity_relative),
        NUM_KEY(rabi_per_sqrt_mw),
        NUM_KEY(power_storage_mw),
        NUM_KEY(power_retrieval_mw),
        NUM_KEY(detuning),
        NUM_KEY(gamma_e),
        NUM_KEY(gamma_s),
        NUM_KEY(pulse_width),
        NUM_KEY(storage_delay),
        NUM_KEY(t_start),
        NUM_KEY(t_end),
        NUM_KEY(dt),
        NUM_KEY(two_photon_offset),
        NUM_KEY(storage_time_limit),
        KeyEntry{"output_samples", KeyEntry::integer,
                 [](RunConfig& c, const std::string& v) { c.output_samples = std::stoi(v); },
                 [](const RunConfig& c) { return std::to_string(c.output_samples); }},
        KeyEntry{"rate_convention", KeyEntry::convention,
                 [](RunConfig& c, const std::string& v) {
                     if (v == "two_pi") c.rate_convention = RateConvention::two_pi;
                     else if (v == "bare") c.rate_convention = RateConvention::bare;
                     else throw std::invalid_argument("rate_convention must be two_pi or bare");
                 },
                 [](const RunConfig& c) {
                     return std::string(c.rate_convention == RateConvention::two_pi ? "two_pi" : "bare");
                 }},
        KeyEntry{"include_lower_branch", KeyEntry::boolean,
                 [](RunConfig& c, const std::string& v) { c.include_lower_branch = parse_bool(v); },
                 [](const RunConfig& c) { return std::string(c.include_lower_branch ? "true" : "false"); }},
        KeyEntry{"include_control_noise_drive", KeyEntry::boolean,
                 [](RunConfig& c, const std::string& v) { c.include_control_noise_drive = parse_bool(v); },
                 [](const RunConfig& c) { return std::string(c.include_control_noise_drive ? "true" : "false"); }},
        KeyEntry{"include_spectator_coherences", KeyEntry::boolean,
                 [](RunConfig& c, const std::string& v) { c.include_spectator_coherences = parse_bool(v); },
                 [](const RunConfig& c) { return std::string(c.include_spectator_coherences ? "true" : "false"); }},
    };
    return keys;
}

#undef NUM_KEY

const KeyEntry* find_key(const std::string& name) {
    for (const auto& k : registry())
        if (name == k.name) return &k;
    return nullptr;
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigParseError("expected 'key = value'", lineno, 1);
        const std::string key = trim(stripped.substr(0, eq));
        const std::string val = trim(stripped.substr(eq + 1));
        const KeyEntry* entry = find_key(key);
        if (!entry)
            throw ConfigParseError("unknown key '" + key + "'", lineno, 1);
        if (val.empty())
            throw ConfigParseError("empty value for '" + key + "'", lineno, static_cast<int>(eq + 2));
        try {
            entry->set(cfg, val);
        } catch (const std::exception& e) {
            throw ConfigParseError(e.what(), lineno, static_cast<int>(eq + 2));
        }
    }
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config_text(ss.str());
}

RunConfig resolve_config(const std::string& explicit_path) {
    if (!explicit_path.empty()) return load_config_file(explicit_path);
    if (const char* env = std::getenv("NVMEM_CONFIG")) return load_config_file(env);
    return RunConfig{};
}

std::string config_echo_text(const RunConfig& c) {
    std::string out;
    for (const auto& k : registry()) {
        out += k.name;
        out += " = ";
        out += k.get(c);
        out += '\n';
    }
    return out;
}

void set_numeric_key(RunConfig& c, const std::string& key, double value) {
    const KeyEntry* entry = find_key(key);
    if (!entry || entry->kind != KeyEntry::number)
        throw std::out_of_range("not a numeric config key: '" + key + "'");
    entry->set(c, fmt(value));
}

double get_numeric_key(const RunConfig& c, const std::string& key) {
    const KeyEntry* entry = find_key(key);
    if (!entry || entry->kind != KeyEntry::number)
        throw std::out_of_range("not a numeric config key: '" + key + "'");
    return parse_si_number(entry->get(c));
}

}  // namespace nvmem
