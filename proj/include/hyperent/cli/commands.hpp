#pragma once

#include "hyperent/cli/config.hpp"
#include "hyperent/cli/table.hpp"

namespace hyperent::cli {

//! Columns: n, F1, F2, F_prime, cumulative_yield (+ mc_* columns when shots > 0).
//! F1 and F2 identify the starting point of each curve.
Table run_epp(const RunConfig& config);
//! Columns: two_alpha_sq, n, p_n, P_cumulative (+ mc_* columns when shots > 0).
Table run_ecp(const RunConfig& config);
//! Columns: g, kappa, eta, gamma, abs_r0, abs_r, F_P, F_S.
Table run_qnd_fidelity(const RunConfig& config);
//! Columns: omega_detuning, re_r, im_r, abs_r.
Table run_reflection_sweep(const RunConfig& config);

Table run_command(const RunConfig& config);

//! Independent per-task seed derived from the user seed and a task index.
std::uint64_t task_seed(std::uint64_t seed, std::uint64_t task);

}  // namespace hyperent::cli
