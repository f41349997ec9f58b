#include "hyperent/epp.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hyperent/qnd.hpp"

namespace hyperent {

namespace {

const PhotonPair kPairAB{"A", "B"};
const PhotonPair kPairCD{"C", "D"};
const PhotonPair kPairAC{"A", "C"};
const PhotonPair kPairBD{"B", "D"};

// Branches below this mass carry only rounding noise.
constexpr double kNegligibleMass = 1e-14;

void check_fidelity(double f, const char* name) {
    if (!(f >= 0.0 && f <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
    }
}

double pass_probability(double f) { return f * f + (1.0 - f) * (1.0 - f); }

struct ParityPath {
    PureState state;
    double probability = 1.0;
    std::array<Parity, 4> parities{};  // pol AC, pol BD, spatial AC, spatial BD
};

std::vector<ParityPath> branch_through(const std::vector<ParityPath>& paths, QndKind kind,
                                       const PhotonPair& photons, std::size_t slot) {
    std::vector<ParityPath> out;
    for (const auto& path : paths) {
        for (auto& branch : run_qnd(kind, path.state, photons, QndMode::ideal())) {
            const double p = path.probability * branch.probability;
            if (p < kNegligibleMass) {
                continue;
            }
            ParityPath next{std::move(branch.outcome.photon_post), p, path.parities};
            next.parities[slot] = branch.outcome.parity;
            out.push_back(std::move(next));
        }
    }
    return out;
}

}  // namespace

EppEnsemble::EppEnsemble(const std::array<double, kHyperBellCount>& weights) : weights_(weights) {
    double sum = 0.0;
    for (double w : weights_) {
        if (!(w >= 0.0)) {
            throw std::invalid_argument("ensemble weights must be nonnegative");
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > kAlgebraicTol) {
        throw std::invalid_argument("ensemble weights must sum to 1");
    }
}

EppEnsemble EppEnsemble::from_fidelities(double f1, double f2) {
    check_fidelity(f1, "F1");
    check_fidelity(f2, "F2");
    std::array<double, kHyperBellCount> w{};
    w[static_cast<std::size_t>(HyperBellLabel{bell::phi_plus, bell::phi_plus}.index())] = f1 * f2;
    w[static_cast<std::size_t>(HyperBellLabel{bell::phi_plus, bell::psi_plus}.index())] = f1 * (1.0 - f2);
    w[static_cast<std::size_t>(HyperBellLabel{bell::psi_plus, bell::phi_plus}.index())] = (1.0 - f1) * f2;
    w[static_cast<std::size_t>(HyperBellLabel{bell::psi_plus, bell::psi_plus}.index())] = (1.0 - f1) * (1.0 - f2);
    return EppEnsemble(w);
}

EppEnsemble EppEnsemble::pure(HyperBellLabel label) {
    std::array<double, kHyperBellCount> w{};
    w[static_cast<std::size_t>(label.index())] = 1.0;
    return EppEnsemble(w);
}

double EppEnsemble::f1() const noexcept {
    double sum = 0.0;
    for (const auto& label : all_hyper_bell_labels()) {
        if (label.pol == bell::phi_plus) {
            sum += weight(label);
        }
    }
    return sum;
}

double EppEnsemble::f2() const noexcept {
    double sum = 0.0;
    for (const auto& label : all_hyper_bell_labels()) {
        if (label.spat == bell::phi_plus) {
            sum += weight(label);
        }
    }
    return sum;
}

HyperBellLabel EppEnsemble::dominant() const noexcept {
    std::size_t best = 0;
    for (std::size_t i = 1; i < kHyperBellCount; ++i) {
        if (weights_[i] > weights_[best]) {
            best = i;
        }
    }
    return HyperBellLabel::from_index(static_cast<int>(best));
}

EppRecurrence epp_recurrence(double f1, double f2) {
    check_fidelity(f1, "F1");
    check_fidelity(f2, "F2");
    const double pass1 = pass_probability(f1);
    const double pass2 = pass_probability(f2);
    return {f1 * f1 / pass1, f2 * f2 / pass2, pass1 * pass2};
}

std::vector<EppStep> epp_iterate(double f1, double f2, int rounds) {
    if (rounds < 0) {
        throw std::invalid_argument("round count must be nonnegative");
    }
    check_fidelity(f1, "F1");
    check_fidelity(f2, "F2");
    std::vector<EppStep> steps;
    steps.push_back({0, f1, f2, f1 * f2, 1.0});
    for (int n = 1; n <= rounds; ++n) {
        const EppStep& prev = steps.back();
        const EppRecurrence next = epp_recurrence(prev.f1, prev.f2);
        steps.push_back({n, next.f1_prime, next.f2_prime, next.f1_prime * next.f2_prime,
                         prev.cumulative_yield * next.yield_prob});
    }
    return steps;
}

EppPairTransition epp_pair_transition(HyperBellLabel ab, HyperBellLabel cd) {
    std::vector<ParityPath> paths{{tensor(hyper_bell_state(kPairAB, ab), hyper_bell_state(kPairCD, cd)), 1.0, {}}};
    paths = branch_through(paths, QndKind::Polarization, kPairAC, 0);
    paths = branch_through(paths, QndKind::Polarization, kPairBD, 1);
    paths = branch_through(paths, QndKind::Spatial, kPairAC, 2);
    paths = branch_through(paths, QndKind::Spatial, kPairBD, 3);

    EppPairTransition result;
    const std::vector<QubitLabel> detectors{pol("C"), pol("D"), spatial("C"), spatial("D")};
    for (auto& path : paths) {
        const bool pol_match = path.parities[0] == path.parities[1];
        const bool spat_match = path.parities[2] == path.parities[3];
        if (!pol_match || !spat_match) {
            result.discarded += path.probability;
            continue;
        }
        result.kept += path.probability;

        PureState s = std::move(path.state);
        if (path.parities[0] == Parity::Odd) {
            s = sigma_x_pol(sigma_x_pol(s, "C"), "D");
        }
        if (path.parities[2] == Parity::Odd) {
            s = sigma_x_spatial(sigma_x_spatial(s, "C"), "D");
        }
        for (const char* photon : {"C", "D"}) {
            s = phase_to_bit_frame(s, photon);
        }
        for (auto& click : measure(s, detectors)) {
            const double p = path.probability * click.probability;
            if (p < kNegligibleMass) {
                continue;
            }
            PureState ab_state = std::move(click.post_state);
            if (click.index_of(pol("C")) != click.index_of(pol("D"))) {
                ab_state = sigma_z_pol(ab_state, "B");
            }
            if (click.index_of(spatial("C")) != click.index_of(spatial("D"))) {
                ab_state = sigma_z_spatial(ab_state, "B");
            }
            const auto match = classify_hyper_bell(ab_state, kPairAB);
            if (!match) {
                throw std::logic_error("purification left AB outside the hyper-Bell basis");
            }
            result.output[static_cast<std::size_t>(match->label.index())] += p;
        }
    }
    return result;
}

EppRoundResult epp_round_simulated(const EppEnsemble& ensemble) {
    std::array<double, kHyperBellCount> kept{};
    double yield = 0.0;
    double discarded = 0.0;
    for (const auto& ab : all_hyper_bell_labels()) {
        const double wab = ensemble.weight(ab);
        if (wab == 0.0) {
            continue;
        }
        for (const auto& cd : all_hyper_bell_labels()) {
            const double w = wab * ensemble.weight(cd);
            if (w == 0.0) {
                continue;
            }
            const EppPairTransition t = epp_pair_transition(ab, cd);
            yield += w * t.kept;
            discarded += w * t.discarded;
            for (std::size_t i = 0; i < kHyperBellCount; ++i) {
                kept[i] += w * t.output[i];
            }
        }
    }
    if (yield <= 0.0) {
        throw std::domain_error("purification round discards every pair");
    }
    const double mass = std::accumulate(kept.begin(), kept.end(), 0.0);
    for (double& k : kept) {
        k /= mass;
    }
    EppEnsemble out(kept);
    return {out, yield, discarded, out.f1(), out.f2()};
}

}  // namespace hyperent
