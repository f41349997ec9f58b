#pragma once

// Hyperentanglement purification on two identical photon pairs AB and CD.
//
// Mixed inputs are classical ensembles over the 16 hyper-Bell states. One
// round compares the AC and BD parities in both DOFs with QND gadgets, keeps
// the pairs only when both DOFs agree, then measures C and D after Hadamards
// and fixes B with phase flips. The kept AB ensemble follows
//   F' = F^2 / (F^2 + (1 - F)^2)
// per DOF, and a pair survives with probability
//   [F1^2 + (1 - F1)^2] [F2^2 + (1 - F2)^2].

#include <array>
#include <vector>

#include "hyperent/optics.hpp"

namespace hyperent {

class EppEnsemble {
  public:
    //! Throws std::invalid_argument unless weights are >= 0 and sum to 1.
    explicit EppEnsemble(const std::array<double, kHyperBellCount>& weights);

    //! Bit-flip mixture: F1 on phi+ (else psi+) in polarization, F2 likewise spatially.
    static EppEnsemble from_fidelities(double f1, double f2);
    static EppEnsemble pure(HyperBellLabel label);

    double weight(HyperBellLabel label) const noexcept { return weights_[static_cast<std::size_t>(label.index())]; }
    const std::array<double, kHyperBellCount>& weights() const noexcept { return weights_; }

    //! Marginal probability of phi+ in polarization / spatial mode.
    double f1() const noexcept;
    double f2() const noexcept;
    double fidelity() const noexcept { return weight({bell::phi_plus, bell::phi_plus}); }
    HyperBellLabel dominant() const noexcept;

  private:
    std::array<double, kHyperBellCount> weights_{};
};

struct EppRecurrence {
    double f1_prime = 0.0;
    double f2_prime = 0.0;
    double yield_prob = 0.0;
};

//! Throws std::invalid_argument for fidelities outside [0, 1].
EppRecurrence epp_recurrence(double f1, double f2);

struct EppStep {
    int round = 0;
    double f1 = 0.0;
    double f2 = 0.0;
    double fidelity = 0.0;  // f1 * f2
    //! Probability that every round so far passed post-selection.
    double cumulative_yield = 1.0;
};

//! Rounds 0..n of the recurrence; entry 0 is the input.
std::vector<EppStep> epp_iterate(double f1, double f2, int rounds);

//! Kept-output distribution of one simulated round for a fixed pair of
//! components. `kept` sums the survival mass; `output` is conditioned on nothing
//! (weights are joint probabilities of survival and label).
struct EppPairTransition {
    double kept = 0.0;
    double discarded = 0.0;
    std::array<double, kHyperBellCount> output{};
};

//! Exhaustive branch enumeration of one round through the ideal QND gadgets
//! for AB in `ab` and CD in `cd`.
EppPairTransition epp_pair_transition(HyperBellLabel ab, HyperBellLabel cd);

struct EppRoundResult {
    EppEnsemble kept_ensemble;
    double yield_prob = 0.0;
    double discarded_prob = 0.0;
    double f1_prime = 0.0;
    double f2_prime = 0.0;
};

//! Throws std::domain_error if nothing survives.
EppRoundResult epp_round_simulated(const EppEnsemble& ensemble);

}  // namespace hyperent
