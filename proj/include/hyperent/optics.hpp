#pragma once

// Linear-optical elements on photon qubits and Bell-state constructors.
//
// Each photon carries two qubits: pol(photon) and spatial(photon). The half
// wave plate R45 is the polarization Hadamard, the 50:50 beam splitter the
// spatial one.

#include <array>
#include <optional>
#include <string>

#include "hyperent/hilbert.hpp"

namespace hyperent {

enum class Parity { Even, Odd };
enum class Phase { Plus, Minus };

std::string to_string(Parity parity);

struct BellLabel {
    Parity parity = Parity::Even;
    Phase phase = Phase::Plus;

    friend bool operator==(const BellLabel&, const BellLabel&) = default;

    //! 0..3 in the order phi+, phi-, psi+, psi-.
    int index() const noexcept;
    static BellLabel from_index(int index);
};

namespace bell {
inline constexpr BellLabel phi_plus{Parity::Even, Phase::Plus};
inline constexpr BellLabel phi_minus{Parity::Even, Phase::Minus};
inline constexpr BellLabel psi_plus{Parity::Odd, Phase::Plus};
inline constexpr BellLabel psi_minus{Parity::Odd, Phase::Minus};
inline constexpr std::array<BellLabel, 4> all{phi_plus, phi_minus, psi_plus, psi_minus};
}  // namespace bell

std::string to_string(const BellLabel& label);

struct HyperBellLabel {
    BellLabel pol;
    BellLabel spat;

    friend bool operator==(const HyperBellLabel&, const HyperBellLabel&) = default;

    //! 0..15, polarization label major.
    int index() const noexcept { return 4 * pol.index() + spat.index(); }
    static HyperBellLabel from_index(int index);
};

std::string to_string(const HyperBellLabel& label);

inline constexpr std::size_t kHyperBellCount = 16;
std::array<HyperBellLabel, kHyperBellCount> all_hyper_bell_labels();

struct PhotonPair {
    std::string first;
    std::string second;
};

//! Two-qubit Bell state on the chosen DOF, register (first, second).
PureState bell_state(const PhotonPair& pair, Dof dof, BellLabel label);

//! Register order: pol(first), pol(second), spatial(first), spatial(second).
PureState hyper_bell_state(const PhotonPair& pair, HyperBellLabel label);
std::vector<QubitLabel> hyper_bell_register(const PhotonPair& pair);

PureState hadamard_pol(const PureState& state, const std::string& photon);
PureState hadamard_spatial(const PureState& state, const std::string& photon);
PureState sigma_z_pol(const PureState& state, const std::string& photon);
PureState sigma_x_pol(const PureState& state, const std::string& photon);
PureState sigma_z_spatial(const PureState& state, const std::string& photon);
PureState sigma_x_spatial(const PureState& state, const std::string& photon);

//! Hadamards in both DOFs of one photon; maps phase-flip errors to bit-flip errors.
PureState phase_to_bit_frame(const PureState& state, const std::string& photon);

struct HyperBellMatch {
    HyperBellLabel label;
    double fidelity = 0.0;
};

//! Identifies the hyper-Bell state of `pair` in a state holding exactly the
//! pair's four qubits (any order). Global phase is ignored. Returns nullopt
//! when no label reaches fidelity 1 - tol.
std::optional<HyperBellMatch> classify_hyper_bell(const PureState& state, const PhotonPair& pair,
                                                  double tol = kChainedTol);

}  // namespace hyperent
