#pragma once

// Hyperentanglement concentration of partially hyperentangled pure pairs
//   (alpha|RR> + beta|LL>) (x) (gamma|a1 b1> + delta|a2 b2>)
// with unknown real amplitudes. Each round pairs the state with an identical
// copy, reads the polarization parity of AC with a P-QND and the spatial
// parity of BD with an S-QND, and keeps the AB pair in every class: odd
// outcomes make that DOF maximal, even outcomes leave a residual with squared
// amplitudes that feeds the next round.

#include <array>
#include <vector>

#include "hyperent/optics.hpp"

namespace hyperent {

//! Per-DOF concentration status.
class EcpDofState {
  public:
    //! Maximal.
    EcpDofState() = default;

    static EcpDofState maximal() noexcept { return EcpDofState(); }
    //! Requires a, b > 0 and a^2 + b^2 = 1 within 1e-12.
    static EcpDofState residual(double a, double b);
    //! Renormalizes (a, b); a zero amplitude is allowed (product state).
    static EcpDofState residual_unnormalized(double a, double b);

    bool is_maximal() const noexcept { return maximal_; }
    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }

    friend bool operator==(const EcpDofState&, const EcpDofState&) = default;

  private:
    EcpDofState(double a, double b) : maximal_(false), a_(a), b_(b) {}

    bool maximal_ = true;
    double a_ = kInvSqrt2;
    double b_ = kInvSqrt2;
};

struct EcpDofBranch {
    Parity outcome = Parity::Odd;
    double probability = 0.0;
    EcpDofState next;
};

//! Odd branch first. Residual(a,b): odd 2a^2b^2 -> maximal, even a^4+b^4 ->
//! residual(a^2, b^2). A maximal DOF stays maximal on either parity.
std::vector<EcpDofBranch> ecp_dof_step(const EcpDofState& state);

struct EcpNode {
    EcpDofState pol;
    EcpDofState spat;
    double reach_prob = 1.0;
};

struct EcpSuccess {
    //! p(k) for k = 1..n: probability of first success in round k.
    std::vector<double> per_round;
    //! Cumulative totals P(k) = p(1) + ... + p(k).
    std::vector<double> cumulative;
    double total = 0.0;
    //! Source pairs consumed along the longest success path (2^n).
    double worst_case_source_pairs = 1.0;
};

//! Round-tree expansion from (residual(alpha, beta), residual(gamma, delta)),
//! beta and delta implied by normalization. Requires alpha, gamma in (0, 1), n >= 0.
EcpSuccess ecp_success_probability(double alpha, double gamma, int rounds);

//! Live (not yet successful) nodes after each round, merged by state.
std::vector<std::vector<EcpNode>> ecp_round_tree(double alpha, double gamma, int rounds);

struct EcpAmplitudes {
    double alpha = kInvSqrt2;
    double beta = kInvSqrt2;
    double gamma = kInvSqrt2;
    double delta = kInvSqrt2;

    void validate() const;
};

struct EcpRoundFormulas {
    double p1 = 0.0;             // odd-odd
    double p1_even_even = 0.0;   // residual in both DOFs
    double p1_mixed_pol = 0.0;   // polarization maximal, spatial residual
    double p1_mixed_spat = 0.0;  // spatial maximal, polarization residual
    double p2_1 = 0.0;
    double p2_2 = 0.0;
    double p2_3 = 0.0;
};

EcpRoundFormulas ecp_round_formulas(const EcpAmplitudes& amplitudes);

//! AB pair (alpha|RR> + beta|LL>)(gamma|a1b1> + delta|a2b2>) on `pair`.
PureState ecp_pair_state(const PhotonPair& pair, const EcpAmplitudes& amplitudes);

//! Recovers per-DOF amplitudes of a product state on `pair` supported on
//! {RR, LL} x {11, 22}. Throws std::invalid_argument for other states.
EcpAmplitudes ecp_amplitudes_of(const PureState& state, const PhotonPair& pair);

struct EcpClassResult {
    Parity pol = Parity::Odd;
    Parity spat = Parity::Odd;
    double probability = 0.0;
    //! Normalized AB state after detection of C, D and phase corrections on B.
    PureState ab_state;
    //! Smallest fidelity between detector branches' AB states and ab_state.
    double branch_agreement = 1.0;
};

struct EcpRoundSimulation {
    //! Order: (odd,odd), (even,even), (odd,even), (even,odd) as (pol, spat).
    std::vector<EcpClassResult> classes;
    double total_probability = 0.0;

    const EcpClassResult& find(Parity pol, Parity spat) const;
};

//! One concentration round simulated through the ideal QND gadgets on AB and
//! an identical CD copy.
EcpRoundSimulation ecp_round_simulated(const EcpAmplitudes& amplitudes);

//! Success masses of the first two rounds obtained purely from circuit
//! simulation: round-1 classes are re-simulated against fresh copies of their
//! own AB state. A DOF counts as concentrated once it has shown odd parity.
struct EcpTwoRoundOracle {
    double p1 = 0.0;
    double p2_1 = 0.0;  // from the even-even residual
    double p2_2 = 0.0;  // from the polarization-maximal residual
    double p2_3 = 0.0;  // from the spatial-maximal residual
    double p2() const noexcept { return p2_1 + p2_2 + p2_3; }
};

EcpTwoRoundOracle ecp_two_rounds_simulated(const EcpAmplitudes& amplitudes);

}  // namespace hyperent
