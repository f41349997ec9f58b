#include "hyperent/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace hyperent::cli {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

double parse_double(const std::string& key, const std::string& text) {
    double value = 0.0;
    const std::string t = trim(text);
    const auto* begin = t.data();
    const auto* end = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (t.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
        throw ConfigError("key '" + key + "': expected a number, got '" + text + "'");
    }
    return value;
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
    std::vector<double> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        out.push_back(parse_double(key, item));
    }
    if (out.empty()) {
        throw ConfigError("key '" + key + "': grid must not be empty");
    }
    return out;
}

std::uint64_t parse_count(const std::string& key, const std::string& text) {
    std::uint64_t value = 0;
    const std::string t = trim(text);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
        throw ConfigError("key '" + key + "': expected a nonnegative integer, got '" + text + "'");
    }
    return value;
}

int parse_int(const std::string& key, const std::string& text, int min_value) {
    const std::uint64_t v = parse_count(key, text);
    if (v > 1000000 || static_cast<int>(v) < min_value) {
        throw ConfigError("key '" + key + "': value out of range");
    }
    return static_cast<int>(v);
}

void require_probability(const std::string& key, double v) {
    if (v < 0.0 || v > 1.0) {
        throw ConfigError("key '" + key + "': must lie in [0, 1]");
    }
}

void require_nonnegative(const std::string& key, double v) {
    if (v < 0.0) {
        throw ConfigError("key '" + key + "': rates must be nonnegative");
    }
}

std::vector<KeySpec> common_keys() {
    return {
        {"out", "", "output file (default: stdout, or $HYPERENT_OUTPUT_DIR/<command>.<format>)"},
        {"format", "csv", "csv | json"},
        {"shots", "0", "Monte Carlo shots; 0 = exact enumeration only"},
        {"seed", "", "generator seed, required when shots > 0"},
    };
}

std::vector<KeySpec> cavity_keys() {
    return {
        {"gamma", "0.015", "NV decay rate [2pi GHz]"},
        {"eta", "10", "cavity decay rate into the waveguide [2pi GHz]"},
        {"kappa", "1", "cavity side-leakage rate [2pi GHz]"},
        {"omega_c", "0", "cavity frequency [2pi GHz]"},
        {"omega_e", "0", "NV transition frequency [2pi GHz]"},
    };
}

std::vector<KeySpec> with(std::vector<KeySpec> a, const std::vector<KeySpec>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

KeyValues parse_key_values(std::string_view text) {
    KeyValues out;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const std::string body = trim(line);
        if (body.empty()) {
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        std::string key = trim(std::string_view(body).substr(0, eq));
        std::string value = trim(std::string_view(body).substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
        }
        out[std::move(key)] = std::move(value);
    }
    return out;
}

KeyValues load_key_values(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_key_values(buffer.str());
}

std::string to_string(Command command) {
    switch (command) {
    case Command::Epp:
        return "epp";
    case Command::Ecp:
        return "ecp";
    case Command::QndFidelity:
        return "qnd-fidelity";
    case Command::ReflectionSweep:
        return "reflection-sweep";
    }
    return "?";
}

std::optional<Command> parse_command(std::string_view name) {
    for (Command c : {Command::Epp, Command::Ecp, Command::QndFidelity, Command::ReflectionSweep}) {
        if (to_string(c) == name) {
            return c;
        }
    }
    return std::nullopt;
}

const std::vector<KeySpec>& command_keys(Command command) {
    static const std::vector<KeySpec> epp = with(
        {
            {"f1", "0.6,0.7,0.8,0.9", "initial polarization fidelities F1 (comma-separated)"},
            {"f2", "", "initial spatial fidelities F2; empty = same as f1, one value = broadcast"},
            {"rounds", "5", "purification rounds N (rows n = 0..N)"},
        },
        common_keys());
    static const std::vector<KeySpec> ecp = with(
        {
            {"two_alpha_sq", "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1", "grid of 2|alpha|^2 in (0, 1], |alpha| = |gamma|"},
            {"rounds", "5", "concentration rounds N (rows n = 1..N)"},
        },
        common_keys());
    static const std::vector<KeySpec> qnd = with(with(
        {
            {"g", "1", "coupling strength grid [2pi GHz]"},
            {"detuning", "0", "probe detuning omega - omega_c [2pi GHz]"},
        },
        cavity_keys()), common_keys());
    static const std::vector<KeySpec> sweep = with(with(
        {
            {"g", "1", "coupling strength [2pi GHz]"},
            {"detuning_min", "-50", "first probe detuning [2pi GHz]"},
            {"detuning_max", "50", "last probe detuning [2pi GHz]"},
            {"detuning_steps", "201", "number of grid points"},
        },
        cavity_keys()), common_keys());
    switch (command) {
    case Command::Epp:
        return epp;
    case Command::Ecp:
        return ecp;
    case Command::QndFidelity:
        return qnd;
    case Command::ReflectionSweep:
        return sweep;
    }
    return epp;
}

RunConfig build_run_config(Command command, const KeyValues& values) {
    const auto& specs = command_keys(command);
    KeyValues kv;
    for (const auto& spec : specs) {
        kv[spec.key] = spec.default_value;
    }
    for (const auto& [key, value] : values) {
        if (!kv.contains(key)) {
            throw ConfigError("unknown key '" + key + "' for command " + to_string(command));
        }
        kv[key] = value;
    }

    RunConfig cfg;
    cfg.command = command;

    const std::string& format = kv["format"];
    if (format == "csv") {
        cfg.format = OutputFormat::Csv;
    } else if (format == "json") {
        cfg.format = OutputFormat::Json;
    } else {
        throw ConfigError("key 'format': expected csv or json, got '" + format + "'");
    }
    if (!kv["out"].empty()) {
        cfg.out_path = kv["out"];
    }
    cfg.shots = parse_count("shots", kv["shots"]);
    if (!kv["seed"].empty()) {
        cfg.seed = parse_count("seed", kv["seed"]);
    }
    if (cfg.shots > 0 && !cfg.seed) {
        throw ConfigError("a seed is required when shots > 0");
    }
    if (cfg.shots > 0 && command != Command::Epp && command != Command::Ecp) {
        throw ConfigError("shots apply to the epp and ecp commands only");
    }

    if (kv.contains("gamma")) {
        cfg.cavity.gamma = parse_double("gamma", kv["gamma"]);
        cfg.cavity.eta = parse_double("eta", kv["eta"]);
        cfg.cavity.kappa = parse_double("kappa", kv["kappa"]);
        cfg.cavity.omega_c = parse_double("omega_c", kv["omega_c"]);
        cfg.cavity.omega_e = parse_double("omega_e", kv["omega_e"]);
        for (const char* key : {"gamma", "eta", "kappa"}) {
            require_nonnegative(key, parse_double(key, kv[key]));
        }
    }

    switch (command) {
    case Command::Epp: {
        const auto f1 = parse_list("f1", kv["f1"]);
        auto f2 = kv["f2"].empty() ? f1 : parse_list("f2", kv["f2"]);
        if (f2.size() == 1 && f1.size() > 1) {
            f2.assign(f1.size(), f2.front());
        }
        if (f2.size() != f1.size()) {
            throw ConfigError("keys 'f1' and 'f2': grids must have equal length");
        }
        for (std::size_t i = 0; i < f1.size(); ++i) {
            require_probability("f1", f1[i]);
            require_probability("f2", f2[i]);
            cfg.fidelity_pairs.emplace_back(f1[i], f2[i]);
        }
        cfg.rounds = parse_int("rounds", kv["rounds"], 0);
        break;
    }
    case Command::Ecp: {
        cfg.two_alpha_sq = parse_list("two_alpha_sq", kv["two_alpha_sq"]);
        for (double x : cfg.two_alpha_sq) {
            if (!(x > 0.0 && x <= 1.0)) {
                throw ConfigError("key 'two_alpha_sq': values must lie in (0, 1]");
            }
        }
        cfg.rounds = parse_int("rounds", kv["rounds"], 1);
        break;
    }
    case Command::QndFidelity: {
        cfg.g_values = parse_list("g", kv["g"]);
        for (double g : cfg.g_values) {
            require_nonnegative("g", g);
        }
        cfg.detuning = parse_double("detuning", kv["detuning"]);
        break;
    }
    case Command::ReflectionSweep: {
        cfg.g_values = {parse_double("g", kv["g"])};
        require_nonnegative("g", cfg.g_values.front());
        cfg.detuning_min = parse_double("detuning_min", kv["detuning_min"]);
        cfg.detuning_max = parse_double("detuning_max", kv["detuning_max"]);
        cfg.detuning_steps = parse_int("detuning_steps", kv["detuning_steps"], 1);
        if (cfg.detuning_max < cfg.detuning_min) {
            throw ConfigError("detuning_max must not be below detuning_min");
        }
        break;
    }
    }
    return cfg;
}

}  // namespace hyperent::cli
