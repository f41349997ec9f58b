#pragma once

// Monte Carlo front end over the exact branch distributions. Every call owns
// its generator, seeded explicitly, so equal inputs give equal outputs.

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "hyperent/ecp.hpp"
#include "hyperent/epp.hpp"

namespace hyperent {

struct EppRun {
    EppEnsemble ensemble;
    int rounds = 1;
};

struct EcpRun {
    double alpha = kInvSqrt2;
    double gamma = kInvSqrt2;
    int rounds = 1;
};

using ProtocolRun = std::variant<EppRun, EcpRun>;

struct Estimate {
    double mean = 0.0;
    double standard_error = 0.0;
};

struct SampleReport {
    std::uint64_t shots = 0;
    std::uint64_t successes = 0;
    //! EPP: all rounds kept. ECP: both DOFs concentrated within the round budget.
    Estimate success;
    double exact_success = 0.0;
    //! EPP only: fraction of surviving pairs in (phi+, phi+).
    std::optional<Estimate> fidelity;
    std::optional<double> exact_fidelity;
    //! ECP only: histogram of the round of first success, index k-1 for round k.
    std::vector<std::uint64_t> first_success_round;
};

//! Throws std::invalid_argument when shots == 0 or rounds < 0.
SampleReport sample_protocol(const ProtocolRun& run, std::uint64_t shots, std::uint64_t seed);

}  // namespace hyperent
