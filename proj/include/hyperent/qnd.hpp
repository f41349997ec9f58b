#pragma once

// Parity-check quantum nondemolition gadgets built from an NV spin ancilla.
//
// P-QND: each photon's R component meets the cavity (L bypasses through the
// circular-polarization beam splitters), so the net interaction per photon is
// the reflection rule restricted to R. S-QND: the path-2 component of each
// photon meets the cavity and then a sigma_z half wave plate, which makes the
// ideal interaction polarization independent. Both start from a fresh spin in
// |+> = (|-1> + |+1>)/sqrt2 and end with a Hadamard on the spin followed by
// auxiliary-photon readout.

#include <optional>
#include <string>
#include <vector>

#include "hyperent/cavity.hpp"
#include "hyperent/hilbert.hpp"
#include "hyperent/optics.hpp"

namespace hyperent {

enum class QndKind { Polarization, Spatial };
enum class SpinValue { MinusOne, PlusOne };

std::string to_string(QndKind kind);

struct QndMode {
    //! Empty for ideal reflection (r = 1, r0 = -1).
    std::optional<ReflectionPair> reflection;

    static QndMode ideal() { return {}; }
    static QndMode lossy(ReflectionPair rp) { return {rp}; }
    ReflectionPair pair() const noexcept { return reflection.value_or(ReflectionPair::ideal()); }
};

struct ParityOutcome {
    Parity parity = Parity::Even;
    //! Spin value seen by the readout after the Hadamard: |+> -> |-1>, |-> -> |+1>.
    SpinValue nv_post = SpinValue::MinusOne;
    PureState photon_post;
};

struct QndBranch {
    ParityOutcome outcome;
    double probability = 0.0;
    //! Squared norm left after the (possibly lossy) interaction, before renormalization.
    double survival = 1.0;
};

struct ReadoutBranch {
    SpinValue spin = SpinValue::MinusOne;
    double probability = 0.0;
    //! Remaining register with the spin and auxiliary photon removed.
    PureState post_state;
};

//! Spin ket |+-> = (|-1> +- |+1>)/sqrt2 on a single NV.
PureState nv_plus_state(const std::string& nv);
PureState nv_minus_state(const std::string& nv);

//! Photon-NV interaction units; the returned squared norm tracks cavity loss.
DiagonalResult p_qnd_unit(const PureState& state, const std::string& photon, const QubitLabel& nv,
                          const ReflectionPair& rp);
DiagonalResult s_qnd_unit(const PureState& state, const std::string& photon, const QubitLabel& nv,
                          const ReflectionPair& rp);

//! Both parity branches, even first. Probabilities are conditioned on survival.
std::vector<QndBranch> p_qnd(const PureState& state, const PhotonPair& photons, const QndMode& mode);
std::vector<QndBranch> s_qnd(const PureState& state, const PhotonPair& photons, const QndMode& mode);
std::vector<QndBranch> run_qnd(QndKind kind, const PureState& state, const PhotonPair& photons,
                               const QndMode& mode);

//! Reads out `nv` inside `state` with an auxiliary photon prepared in
//! (|R> + |L>)/sqrt2 and measured in the linear basis. Outcome (|R>+|L>)/sqrt2
//! means |-1>, (|R>-|L>)/sqrt2 means |+1>. Both branches returned, |-1> first.
std::vector<ReadoutBranch> readout_spin(const PureState& state, const QubitLabel& nv);
//! Readout of a state whose register is a single NV spin.
std::vector<ReadoutBranch> nv_readout(const PureState& spin_state);

//! Outcome-averaged fidelity of the lossy gadget against the ideal one on an
//! even-parity input. Outcomes the ideal gadget never produces contribute 0.
double qnd_process_fidelity(QndKind kind, const ReflectionPair& rp, const PureState& input,
                            const PhotonPair& photons);

}  // namespace hyperent
