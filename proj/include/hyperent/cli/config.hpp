#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperent/cavity.hpp"

namespace hyperent::cli {

//! Invalid configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

using KeyValues = std::map<std::string, std::string>;

//! Flat `key = value` lines; `#` starts a comment; blank lines ignored.
KeyValues parse_key_values(std::string_view text);
KeyValues load_key_values(const std::filesystem::path& path);

enum class Command { Epp, Ecp, QndFidelity, ReflectionSweep };
enum class OutputFormat { Csv, Json };

std::string to_string(Command command);
std::optional<Command> parse_command(std::string_view name);

struct KeySpec {
    std::string key;
    std::string default_value;
    std::string help;
};

//! Keys accepted by a command, including the common output and sampling keys.
const std::vector<KeySpec>& command_keys(Command command);

struct RunConfig {
    Command command = Command::Epp;

    // epp: (F1, F2) starting points; rounds = N for n = 0..N.
    std::vector<std::pair<double, double>> fidelity_pairs;
    int rounds = 5;

    // ecp: 2|alpha|^2 grid with |alpha| = |gamma|.
    std::vector<double> two_alpha_sq;

    // qnd-fidelity and reflection-sweep; rates in 2*pi*GHz.
    CavityParams cavity = CavityParams::nv_photonic_crystal();
    std::vector<double> g_values;
    double detuning = 0.0;
    double detuning_min = 0.0;
    double detuning_max = 0.0;
    int detuning_steps = 1;

    std::uint64_t shots = 0;
    std::optional<std::uint64_t> seed;

    std::optional<std::string> out_path;
    OutputFormat format = OutputFormat::Csv;
};

//! Applies command defaults, then `values`. Throws ConfigError on unknown
//! keys, unparsable numbers, or out-of-range parameters.
RunConfig build_run_config(Command command, const KeyValues& values);

}  // namespace hyperent::cli
