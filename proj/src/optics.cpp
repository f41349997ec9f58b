#include "hyperent/optics.hpp"

#include <stdexcept>

namespace hyperent {

std::string to_string(Parity parity) { return parity == Parity::Even ? "even" : "odd"; }

int BellLabel::index() const noexcept {
    return (parity == Parity::Odd ? 2 : 0) + (phase == Phase::Minus ? 1 : 0);
}

BellLabel BellLabel::from_index(int index) {
    if (index < 0 || index > 3) {
        throw std::invalid_argument("Bell label index out of range");
    }
    return {index >= 2 ? Parity::Odd : Parity::Even, (index % 2) ? Phase::Minus : Phase::Plus};
}

std::string to_string(const BellLabel& label) {
    std::string s = label.parity == Parity::Even ? "phi" : "psi";
    s += label.phase == Phase::Plus ? "+" : "-";
    return s;
}

HyperBellLabel HyperBellLabel::from_index(int index) {
    if (index < 0 || index >= static_cast<int>(kHyperBellCount)) {
        throw std::invalid_argument("hyper-Bell label index out of range");
    }
    return {BellLabel::from_index(index / 4), BellLabel::from_index(index % 4)};
}

std::string to_string(const HyperBellLabel& label) {
    return "(" + to_string(label.pol) + "," + to_string(label.spat) + ")";
}

std::array<HyperBellLabel, kHyperBellCount> all_hyper_bell_labels() {
    std::array<HyperBellLabel, kHyperBellCount> out;
    for (int i = 0; i < static_cast<int>(kHyperBellCount); ++i) {
        out[static_cast<std::size_t>(i)] = HyperBellLabel::from_index(i);
    }
    return out;
}

PureState bell_state(const PhotonPair& pair, Dof dof, BellLabel label) {
    if (pair.first == pair.second) {
        throw std::invalid_argument("bell_state: photons must be distinct");
    }
    if (dof == Dof::Spin) {
        throw std::invalid_argument("bell_state: photons carry polarization and spatial qubits only");
    }
    std::vector<QubitLabel> reg{{pair.first, dof}, {pair.second, dof}};
    // phi: |00> +- |11>, psi: |01> +- |10>
    const int flip = label.parity == Parity::Odd ? 1 : 0;
    const double sign = label.phase == Phase::Plus ? 1.0 : -1.0;
    return superpose({{kInvSqrt2, basis_ket(reg, {0, flip})}, {sign * kInvSqrt2, basis_ket(reg, {1, 1 - flip})}});
}

std::vector<QubitLabel> hyper_bell_register(const PhotonPair& pair) {
    return {pol(pair.first), pol(pair.second), spatial(pair.first), spatial(pair.second)};
}

PureState hyper_bell_state(const PhotonPair& pair, HyperBellLabel label) {
    return tensor(bell_state(pair, Dof::Polarization, label.pol), bell_state(pair, Dof::Spatial, label.spat));
}

PureState hadamard_pol(const PureState& state, const std::string& photon) {
    return apply_local_unitary(state, pol(photon), gates::hadamard);
}

PureState hadamard_spatial(const PureState& state, const std::string& photon) {
    return apply_local_unitary(state, spatial(photon), gates::hadamard);
}

PureState sigma_z_pol(const PureState& state, const std::string& photon) {
    return apply_local_unitary(state, pol(photon), gates::pauli_z);
}

PureState sigma_x_pol(const PureState& state, const std::string& photon) {
    return apply_local_unitary(state, pol(photon), gates::pauli_x);
}

PureState sigma_z_spatial(const PureState& state, const std::string& photon) {
    return apply_local_unitary(state, spatial(photon), gates::pauli_z);
}

PureState sigma_x_spatial(const PureState& state, const std::string& photon) {
    return apply_local_unitary(state, spatial(photon), gates::pauli_x);
}

PureState phase_to_bit_frame(const PureState& state, const std::string& photon) {
    return hadamard_pol(hadamard_spatial(state, photon), photon);
}

std::optional<HyperBellMatch> classify_hyper_bell(const PureState& state, const PhotonPair& pair,
                                                  double tol) {
    const PureState ordered = reorder(state, hyper_bell_register(pair));
    std::optional<HyperBellMatch> best;
    for (const auto& label : all_hyper_bell_labels()) {
        const double f = fidelity(ordered, hyper_bell_state(pair, label));
        if (!best || f > best->fidelity) {
            best = HyperBellMatch{label, f};
        }
    }
    if (best && best->fidelity < 1.0 - tol) {
        return std::nullopt;
    }
    return best;
}

}  // namespace hyperent
