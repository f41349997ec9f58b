#include "hyperent/cli/commands.hpp"

#include <cmath>
#include <stdexcept>

#include "hyperent/cavity.hpp"
#include "hyperent/ecp.hpp"
#include "hyperent/epp.hpp"
#include "hyperent/sampling.hpp"

namespace hyperent::cli {

namespace {

std::int64_t as_int(int v) { return static_cast<std::int64_t>(v); }

}  // namespace

std::uint64_t task_seed(std::uint64_t seed, std::uint64_t task) {
    // splitmix64 finalizer over (seed, task)
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (task + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Table run_epp(const RunConfig& config) {
    Table table;
    table.columns = {"n", "F1", "F2", "F_prime", "cumulative_yield"};
    const bool mc = config.shots > 0;
    if (mc) {
        table.columns.insert(table.columns.end(), {"mc_yield", "mc_yield_se", "mc_F_prime", "mc_F_prime_se"});
    }
    std::uint64_t task = 0;
    for (const auto& [f1, f2] : config.fidelity_pairs) {
        for (const auto& step : epp_iterate(f1, f2, config.rounds)) {
            std::vector<Cell> row{as_int(step.round), f1, f2, step.fidelity, step.cumulative_yield};
            if (mc) {
                const SampleReport r = sample_protocol(EppRun{EppEnsemble::from_fidelities(f1, f2), step.round},
                                                       config.shots, task_seed(*config.seed, task++));
                row.insert(row.end(), {r.success.mean, r.success.standard_error, r.fidelity->mean,
                                       r.fidelity->standard_error});
            }
            table.add_row(std::move(row));
        }
    }
    return table;
}

Table run_ecp(const RunConfig& config) {
    Table table;
    table.columns = {"two_alpha_sq", "n", "p_n", "P_cumulative"};
    const bool mc = config.shots > 0;
    if (mc) {
        table.columns.insert(table.columns.end(), {"mc_P", "mc_P_se"});
    }
    std::uint64_t task = 0;
    for (double x : config.two_alpha_sq) {
        const double alpha = std::sqrt(x / 2.0);
        const EcpSuccess success = ecp_success_probability(alpha, alpha, config.rounds);
        for (int n = 1; n <= config.rounds; ++n) {
            const auto k = static_cast<std::size_t>(n - 1);
            std::vector<Cell> row{x, as_int(n), success.per_round[k], success.cumulative[k]};
            if (mc) {
                const SampleReport r =
                    sample_protocol(EcpRun{alpha, alpha, n}, config.shots, task_seed(*config.seed, task++));
                row.insert(row.end(), {r.success.mean, r.success.standard_error});
            }
            table.add_row(std::move(row));
        }
    }
    return table;
}

Table run_qnd_fidelity(const RunConfig& config) {
    Table table;
    table.columns = {"g", "kappa", "eta", "gamma", "abs_r0", "abs_r", "F_P", "F_S"};
    for (double g : config.g_values) {
        CavityParams params = config.cavity;
        params.g = g;
        const ReflectionPair rp = reflection_pair(params, params.omega_c + config.detuning);
        const double abs_r0 = std::abs(rp.r0);
        const double abs_r = std::abs(rp.r);
        if (abs_r0 > 1.0 || abs_r > 1.0) {
            throw std::domain_error("reflection magnitude exceeds 1; parameters are unphysical");
        }
        table.add_row({g, params.kappa, params.eta, params.gamma, abs_r0, abs_r,
                       fidelity_closed_form_p(abs_r0, abs_r), fidelity_closed_form_s(abs_r0, abs_r)});
    }
    return table;
}

Table run_reflection_sweep(const RunConfig& config) {
    Table table;
    table.columns = {"omega_detuning", "re_r", "im_r", "abs_r"};
    CavityParams params = config.cavity;
    params.g = config.g_values.front();
    const int steps = config.detuning_steps;
    for (int i = 0; i < steps; ++i) {
        const double detuning =
            steps == 1 ? config.detuning_min
                       : config.detuning_min + (config.detuning_max - config.detuning_min) * i / (steps - 1);
        const Complex r = reflection_coefficient(params, params.omega_c + detuning);
        table.add_row({detuning, r.real(), r.imag(), std::abs(r)});
    }
    return table;
}

Table run_command(const RunConfig& config) {
    switch (config.command) {
    case Command::Epp:
        return run_epp(config);
    case Command::Ecp:
        return run_ecp(config);
    case Command::QndFidelity:
        return run_qnd_fidelity(config);
    case Command::ReflectionSweep:
        return run_reflection_sweep(config);
    }
    throw std::logic_error("unhandled command");
}

}  // namespace hyperent::cli
