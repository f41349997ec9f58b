#include "hyperent/cli/app.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "hyperent/cli/commands.hpp"

namespace hyperent::cli {

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

constexpr const char* kUnitsNote =
    "All rates and frequencies (g, gamma, eta, kappa, omega_c, omega_e, detunings) "
    "are in units of 2*pi*GHz.\nKeys may also come from --config FILE (key = value "
    "lines, # comments); flags override the file.";

struct Subcommand {
    Command command;
    CLI::App* app = nullptr;
    std::map<std::string, std::optional<std::string>> flags;
    std::optional<std::string> config_path;
};

std::string dashed(std::string key) {
    for (char& c : key) {
        if (c == '_') {
            c = '-';
        }
    }
    return key;
}

std::string subcommand_help(Command command) {
    switch (command) {
    case Command::Epp:
        return "purification fidelity F' and cumulative yield versus round n";
    case Command::Ecp:
        return "concentration success probability versus round n";
    case Command::QndFidelity:
        return "closed-form parity-check fidelities F_P, F_S from the cavity reflection";
    case Command::ReflectionSweep:
        return "complex reflection coefficient over a detuning grid";
    }
    return {};
}

std::filesystem::path output_path(const RunConfig& config) {
    if (config.out_path) {
        return *config.out_path;
    }
    const char* dir = std::getenv("HYPERENT_OUTPUT_DIR");
    if (dir == nullptr || *dir == '\0') {
        return {};
    }
    return std::filesystem::path(dir) /
           (to_string(config.command) + (config.format == OutputFormat::Csv ? ".csv" : ".json"));
}

void emit(const RunConfig& config, const Table& table, std::ostream& out) {
    std::ostringstream buffer;
    if (config.format == OutputFormat::Csv) {
        write_csv(table, buffer);
    } else {
        write_json(table, buffer);
    }
    const auto path = output_path(config);
    if (path.empty()) {
        out << buffer.str();
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw ConfigError("cannot open output file " + path.string());
    }
    file << buffer.str();
    if (!file) {
        throw ConfigError("failed writing output file " + path.string());
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hyperentanglement purification and concentration with cavity-NV parity checks"};
    app.footer(kUnitsNote);
    app.require_subcommand(1);

    std::vector<Subcommand> subs;
    subs.reserve(4);
    for (Command c : {Command::Epp, Command::Ecp, Command::QndFidelity, Command::ReflectionSweep}) {
        subs.emplace_back().command = c;
    }
    for (auto& sub : subs) {
        sub.app = app.add_subcommand(to_string(sub.command), subcommand_help(sub.command));
        sub.app->footer(kUnitsNote);
        sub.app->add_option("--config", sub.config_path, "key = value configuration file");
        for (const auto& spec : command_keys(sub.command)) {
            std::string names = "--" + spec.key;
            if (spec.key.find('_') != std::string::npos) {
                names += ",--" + dashed(spec.key);
            }
            std::string help = spec.help;
            if (!spec.default_value.empty()) {
                help += " [default: " + spec.default_value + "]";
            }
            sub.app->add_option(names, sub.flags[spec.key], help);
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        for (const auto& sub : subs) {
            if (!sub.app->parsed()) {
                continue;
            }
            KeyValues values;
            if (sub.config_path) {
                values = load_key_values(*sub.config_path);
            }
            for (const auto& [key, value] : sub.flags) {
                if (value) {
                    values[key] = *value;
                }
            }
            const RunConfig config = build_run_config(sub.command, values);
            emit(config, run_command(config), out);
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return 0;
}

}  // namespace hyperent::cli
