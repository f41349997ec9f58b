#include "hyperent/qnd.hpp"

#include <stdexcept>

namespace hyperent {

namespace {

std::string fresh_owner(const PureState& state, std::string base) {
    auto taken = [&](const std::string& owner) {
        for (const auto& label : state.labels()) {
            if (label.owner == owner) {
                return true;
            }
        }
        return false;
    };
    while (taken(base)) {
        base += "'";
    }
    return base;
}

void require_photon_pair(const PureState& state, const PhotonPair& photons, Dof dof) {
    if (photons.first == photons.second) {
        throw std::invalid_argument("QND: photons must be distinct");
    }
    for (const auto& photon : {photons.first, photons.second}) {
        if (!state.contains({photon, dof})) {
            throw std::invalid_argument("QND: photon " + photon + " has no " + to_string(dof) + " qubit");
        }
    }
    if (!state.is_normalized()) {
        throw std::invalid_argument("QND: unnormalized input state");
    }
}

template <typename Unit>
std::vector<QndBranch> run_parity_check(const PureState& state, const PhotonPair& photons, const QndMode& mode,
                                        const char* nv_base, Unit unit) {
    const QubitLabel nv = spin(fresh_owner(state, nv_base));
    const ReflectionPair rp = mode.pair();

    PureState joint = tensor(state, nv_plus_state(nv.owner));
    joint = unit(joint, photons.first, nv, rp).state;
    DiagonalResult after = unit(joint, photons.second, nv, rp);
    if (after.squared_norm <= 0.0) {
        throw std::domain_error("QND: no amplitude survives the cavity interaction");
    }
    PureState normalized = after.state.normalized();
    normalized = apply_local_unitary(normalized, nv, gates::hadamard);

    std::vector<QndBranch> out;
    for (auto& rb : readout_spin(normalized, nv)) {
        QndBranch branch;
        branch.outcome.parity = rb.spin == SpinValue::MinusOne ? Parity::Even : Parity::Odd;
        branch.outcome.nv_post = rb.spin;
        branch.outcome.photon_post = std::move(rb.post_state);
        branch.probability = rb.probability;
        branch.survival = after.squared_norm;
        out.push_back(std::move(branch));
    }
    return out;
}

}  // namespace

std::string to_string(QndKind kind) { return kind == QndKind::Polarization ? "P-QND" : "S-QND"; }

PureState nv_plus_state(const std::string& nv) {
    return superpose({{kInvSqrt2, basis_ket({spin(nv)}, {basis::SpinMinus})},
                      {kInvSqrt2, basis_ket({spin(nv)}, {basis::SpinPlus})}});
}

PureState nv_minus_state(const std::string& nv) {
    return superpose({{kInvSqrt2, basis_ket({spin(nv)}, {basis::SpinMinus})},
                      {-kInvSqrt2, basis_ket({spin(nv)}, {basis::SpinPlus})}});
}

DiagonalResult p_qnd_unit(const PureState& state, const std::string& photon, const QubitLabel& nv,
                          const ReflectionPair& rp) {
    const ReflectionRule rule = lossy_reflection_rule(rp);
    return apply_diagonal_map(state, {pol(photon), nv}, [&](std::size_t joint) -> Complex {
        const int polarization = static_cast<int>(joint >> 1);
        const int spin_index = static_cast<int>(joint & 1U);
        if (polarization == basis::L) {
            return 1.0;
        }
        return rule_factor(rule, basis::R, spin_index);
    });
}

DiagonalResult s_qnd_unit(const PureState& state, const std::string& photon, const QubitLabel& nv,
                          const ReflectionPair& rp) {
    const ReflectionRule rule = lossy_reflection_rule(rp);
    return apply_diagonal_map(state, {spatial(photon), pol(photon), nv}, [&](std::size_t joint) -> Complex {
        const int path = static_cast<int>(joint >> 2);
        const int polarization = static_cast<int>((joint >> 1) & 1U);
        const int spin_index = static_cast<int>(joint & 1U);
        if (path == basis::Path1) {
            return 1.0;
        }
        const double hwp = polarization == basis::L ? -1.0 : 1.0;
        return hwp * rule_factor(rule, polarization, spin_index);
    });
}

std::vector<QndBranch> p_qnd(const PureState& state, const PhotonPair& photons, const QndMode& mode) {
    require_photon_pair(state, photons, Dof::Polarization);
    return run_parity_check(state, photons, mode, "e1", p_qnd_unit);
}

std::vector<QndBranch> s_qnd(const PureState& state, const PhotonPair& photons, const QndMode& mode) {
    require_photon_pair(state, photons, Dof::Spatial);
    for (const auto& photon : {photons.first, photons.second}) {
        if (!state.contains(pol(photon))) {
            throw std::invalid_argument("S-QND: photon " + photon + " has no polarization qubit");
        }
    }
    return run_parity_check(state, photons, mode, "e2", s_qnd_unit);
}

std::vector<QndBranch> run_qnd(QndKind kind, const PureState& state, const PhotonPair& photons,
                               const QndMode& mode) {
    return kind == QndKind::Polarization ? p_qnd(state, photons, mode) : s_qnd(state, photons, mode);
}

std::vector<ReadoutBranch> readout_spin(const PureState& state, const QubitLabel& nv) {
    if (nv.kind != Dof::Spin || !state.contains(nv)) {
        throw std::invalid_argument("readout: register has no spin " + to_string(nv));
    }
    const std::string aux = fresh_owner(state, "p");
    const PureState probe = superpose({{kInvSqrt2, basis_ket({pol(aux)}, {basis::R})},
                                       {kInvSqrt2, basis_ket({pol(aux)}, {basis::L})}});
    const PureState joint = p_qnd_unit(tensor(state, probe), aux, nv, ReflectionPair::ideal()).state;

    const std::vector<QubitLabel> labels{pol(aux), nv};
    const std::vector<Matrix2> bases{gates::hadamard, gates::identity};
    const auto branches = measure(joint, labels, bases);

    // Photon outcome 0 = (|R>+|L>)/sqrt2 pairs with |-1>, outcome 1 with |+1>.
    std::vector<ReadoutBranch> out;
    for (int photon_outcome = 0; photon_outcome < 2; ++photon_outcome) {
        const int expected_spin = photon_outcome == 0 ? basis::SpinMinus : basis::SpinPlus;
        const MeasurementBranch* consistent = nullptr;
        for (const auto& b : branches) {
            if (b.index_of(pol(aux)) != photon_outcome) {
                continue;
            }
            if (b.index_of(nv) == expected_spin) {
                consistent = &b;
            } else if (b.probability > kAlgebraicTol) {
                throw std::logic_error("readout: photon outcome does not determine the spin");
            }
        }
        out.push_back({photon_outcome == 0 ? SpinValue::MinusOne : SpinValue::PlusOne, consistent->probability,
                       consistent->post_state});
    }
    return out;
}

std::vector<ReadoutBranch> nv_readout(const PureState& spin_state) {
    if (spin_state.num_qubits() != 1 || spin_state.labels().front().kind != Dof::Spin) {
        throw std::invalid_argument("nv_readout: expected a single NV spin register");
    }
    return readout_spin(spin_state, spin_state.labels().front());
}

double qnd_process_fidelity(QndKind kind, const ReflectionPair& rp, const PureState& input,
                            const PhotonPair& photons) {
    const auto ideal = run_qnd(kind, input, photons, QndMode::ideal());
    if (ideal.front().outcome.parity != Parity::Even || ideal.front().probability < 1.0 - kChainedTol) {
        throw std::invalid_argument("qnd_process_fidelity: input is not an even-parity state");
    }
    const auto lossy = run_qnd(kind, input, photons, QndMode::lossy(rp));
    double total = 0.0;
    for (std::size_t k = 0; k < lossy.size(); ++k) {
        if (lossy[k].probability <= 0.0 || ideal[k].probability <= 0.0) {
            continue;
        }
        total += lossy[k].probability * fidelity(lossy[k].outcome.photon_post, ideal[k].outcome.photon_post);
    }
    return total;
}

}  // namespace hyperent
