#include "hyperent/ecp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "hyperent/qnd.hpp"

namespace hyperent {

namespace {

const PhotonPair kPairAB{"A", "B"};
const PhotonPair kPairCD{"C", "D"};

constexpr double kNegligibleMass = 1e-14;

double sq(double x) { return x * x; }

void check_open_unit(double x, const char* name) {
    if (!(x > 0.0 && x < 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in (0, 1)");
    }
}

}  // namespace

EcpDofState EcpDofState::residual(double a, double b) {
    if (!(a > 0.0 && b > 0.0)) {
        throw std::invalid_argument("residual amplitudes must be positive");
    }
    if (std::abs(a * a + b * b - 1.0) > kAlgebraicTol) {
        throw std::invalid_argument("residual amplitudes must satisfy a^2 + b^2 = 1");
    }
    return EcpDofState(a, b);
}

EcpDofState EcpDofState::residual_unnormalized(double a, double b) {
    const double norm = std::hypot(a, b);
    if (!(a >= 0.0 && b >= 0.0 && norm > 0.0)) {
        throw std::invalid_argument("residual amplitudes must be nonnegative and not both zero");
    }
    // Repeated squaring can underflow one amplitude to zero: a product state
    // that never again yields an odd outcome.
    return EcpDofState(a / norm, b / norm);
}

std::vector<EcpDofBranch> ecp_dof_step(const EcpDofState& state) {
    if (state.is_maximal()) {
        return {{Parity::Odd, 0.5, EcpDofState::maximal()}, {Parity::Even, 0.5, EcpDofState::maximal()}};
    }
    const double a2 = sq(state.a());
    const double b2 = sq(state.b());
    const double odd = 2.0 * a2 * b2;
    const double even = a2 * a2 + b2 * b2;
    return {{Parity::Odd, odd, EcpDofState::maximal()},
            {Parity::Even, even, EcpDofState::residual_unnormalized(a2, b2)}};
}

namespace {

// One round on every live node; successful children are absorbed into `success`.
std::vector<EcpNode> expand(const std::vector<EcpNode>& live, double& success) {
    std::vector<EcpNode> next;
    success = 0.0;
    for (const auto& node : live) {
        for (const auto& pb : ecp_dof_step(node.pol)) {
            for (const auto& sb : ecp_dof_step(node.spat)) {
                EcpNode child{pb.next, sb.next, node.reach_prob * pb.probability * sb.probability};
                if (child.reach_prob == 0.0) {
                    continue;
                }
                if (child.pol.is_maximal() && child.spat.is_maximal()) {
                    success += child.reach_prob;
                    continue;
                }
                auto same = std::find_if(next.begin(), next.end(), [&](const EcpNode& n) {
                    return n.pol == child.pol && n.spat == child.spat;
                });
                if (same != next.end()) {
                    same->reach_prob += child.reach_prob;
                } else {
                    next.push_back(child);
                }
            }
        }
    }
    return next;
}

std::vector<EcpNode> root(double alpha, double gamma, int rounds) {
    check_open_unit(alpha, "alpha");
    check_open_unit(gamma, "gamma");
    if (rounds < 0) {
        throw std::invalid_argument("round count must be nonnegative");
    }
    return {{EcpDofState::residual(alpha, std::sqrt(1.0 - alpha * alpha)),
             EcpDofState::residual(gamma, std::sqrt(1.0 - gamma * gamma)), 1.0}};
}

}  // namespace

std::vector<std::vector<EcpNode>> ecp_round_tree(double alpha, double gamma, int rounds) {
    std::vector<std::vector<EcpNode>> levels{root(alpha, gamma, rounds)};
    double success = 0.0;
    for (int k = 1; k <= rounds; ++k) {
        levels.push_back(expand(levels.back(), success));
    }
    return levels;
}

EcpSuccess ecp_success_probability(double alpha, double gamma, int rounds) {
    std::vector<EcpNode> live = root(alpha, gamma, rounds);
    EcpSuccess out;
    for (int k = 1; k <= rounds; ++k) {
        double success = 0.0;
        live = expand(live, success);
        out.per_round.push_back(success);
        out.total += success;
        out.cumulative.push_back(out.total);
    }
    out.worst_case_source_pairs = std::ldexp(1.0, rounds);
    return out;
}

void EcpAmplitudes::validate() const {
    if (std::abs(sq(alpha) + sq(beta) - 1.0) > kAlgebraicTol ||
        std::abs(sq(gamma) + sq(delta) - 1.0) > kAlgebraicTol) {
        throw std::invalid_argument("concentration amplitudes must be normalized per DOF");
    }
}

EcpRoundFormulas ecp_round_formulas(const EcpAmplitudes& amp) {
    amp.validate();
    const double ab2 = sq(amp.alpha * amp.beta);
    const double gd2 = sq(amp.gamma * amp.delta);
    const double pol4 = std::pow(amp.alpha, 4) + std::pow(amp.beta, 4);
    const double spat4 = std::pow(amp.gamma, 4) + std::pow(amp.delta, 4);
    EcpRoundFormulas f;
    f.p1 = 4.0 * ab2 * gd2;
    f.p1_even_even = pol4 * spat4;
    f.p1_mixed_pol = 2.0 * ab2 * spat4;
    f.p1_mixed_spat = 2.0 * gd2 * pol4;
    f.p2_1 = 4.0 * sq(ab2 * gd2) / (pol4 * spat4);
    f.p2_2 = 4.0 * sq(gd2) * ab2 / spat4;
    f.p2_3 = 4.0 * sq(ab2) * gd2 / pol4;
    return f;
}

PureState ecp_pair_state(const PhotonPair& pair, const EcpAmplitudes& amp) {
    amp.validate();
    const std::vector<QubitLabel> pol_reg{pol(pair.first), pol(pair.second)};
    const std::vector<QubitLabel> spat_reg{spatial(pair.first), spatial(pair.second)};
    const PureState polarization = superpose({{amp.alpha, basis_ket(pol_reg, {basis::R, basis::R})},
                                              {amp.beta, basis_ket(pol_reg, {basis::L, basis::L})}});
    const PureState spatial_mode = superpose({{amp.gamma, basis_ket(spat_reg, {basis::Path1, basis::Path1})},
                                              {amp.delta, basis_ket(spat_reg, {basis::Path2, basis::Path2})}});
    return tensor(polarization, spatial_mode);
}

EcpAmplitudes ecp_amplitudes_of(const PureState& state, const PhotonPair& pair) {
    const PureState ordered = reorder(state, hyper_bell_register(pair)).normalized();
    // Index layout: pol(first) pol(second) spatial(first) spatial(second).
    const auto& amps = ordered.amplitudes();
    const Complex rr11 = amps[0b0000];
    const Complex rr22 = amps[0b0011];
    const Complex ll11 = amps[0b1100];
    const Complex ll22 = amps[0b1111];
    EcpAmplitudes out;
    out.alpha = std::sqrt(std::norm(rr11) + std::norm(rr22));
    out.beta = std::sqrt(std::norm(ll11) + std::norm(ll22));
    out.gamma = std::sqrt(std::norm(rr11) + std::norm(ll11));
    out.delta = std::sqrt(std::norm(rr22) + std::norm(ll22));
    const double n_pol = std::hypot(out.alpha, out.beta);
    const double n_spat = std::hypot(out.gamma, out.delta);
    if (n_pol <= 0.0 || n_spat <= 0.0) {
        throw std::invalid_argument("state has no support on {RR, LL} x {11, 22}");
    }
    out.alpha /= n_pol;
    out.beta /= n_pol;
    out.gamma /= n_spat;
    out.delta /= n_spat;
    const PureState rebuilt = ecp_pair_state(pair, out);
    if (fidelity(rebuilt, ordered) < 1.0 - kChainedTol) {
        throw std::invalid_argument("state is not a positive-amplitude partially hyperentangled product");
    }
    return out;
}

const EcpClassResult& EcpRoundSimulation::find(Parity pol_parity, Parity spat_parity) const {
    for (const auto& c : classes) {
        if (c.pol == pol_parity && c.spat == spat_parity) {
            return c;
        }
    }
    throw std::invalid_argument("no such parity class");
}

EcpRoundSimulation ecp_round_simulated(const EcpAmplitudes& amplitudes) {
    const PureState start = tensor(ecp_pair_state(kPairAB, amplitudes), ecp_pair_state(kPairCD, amplitudes));
    const std::vector<QubitLabel> detectors{pol("C"), pol("D"), spatial("C"), spatial("D")};

    EcpRoundSimulation sim;
    const std::pair<Parity, Parity> order[] = {{Parity::Odd, Parity::Odd},
                                               {Parity::Even, Parity::Even},
                                               {Parity::Odd, Parity::Even},
                                               {Parity::Even, Parity::Odd}};
    for (const auto& [pol_class, spat_class] : order) {
        sim.classes.push_back({pol_class, spat_class, 0.0, PureState{}, 1.0});
    }

    for (auto& alice : p_qnd(start, {"A", "C"}, QndMode::ideal())) {
        if (alice.probability < kNegligibleMass) {
            continue;
        }
        for (auto& bob : s_qnd(alice.outcome.photon_post, {"B", "D"}, QndMode::ideal())) {
            const double p = alice.probability * bob.probability;
            if (p < kNegligibleMass) {
                continue;
            }
            EcpClassResult* cls = nullptr;
            for (auto& c : sim.classes) {
                if (c.pol == alice.outcome.parity && c.spat == bob.outcome.parity) {
                    cls = &c;
                }
            }
            cls->probability = p;
            sim.total_probability += p;

            PureState s = phase_to_bit_frame(phase_to_bit_frame(bob.outcome.photon_post, "C"), "D");
            bool first = true;
            for (auto& click : measure(s, detectors)) {
                if (click.probability < kNegligibleMass) {
                    continue;
                }
                PureState ab = std::move(click.post_state);
                if (click.index_of(pol("C")) != click.index_of(pol("D"))) {
                    ab = sigma_z_pol(ab, "B");
                }
                if (click.index_of(spatial("C")) != click.index_of(spatial("D"))) {
                    ab = sigma_z_spatial(ab, "B");
                }
                if (first) {
                    cls->ab_state = std::move(ab);
                    first = false;
                } else {
                    cls->branch_agreement = std::min(cls->branch_agreement, fidelity(ab, cls->ab_state));
                }
            }
        }
    }
    return sim;
}

EcpTwoRoundOracle ecp_two_rounds_simulated(const EcpAmplitudes& amplitudes) {
    const EcpRoundSimulation first = ecp_round_simulated(amplitudes);
    EcpTwoRoundOracle out;
    for (const auto& cls : first.classes) {
        if (cls.probability < kNegligibleMass) {
            continue;
        }
        const bool pol_done = cls.pol == Parity::Odd;
        const bool spat_done = cls.spat == Parity::Odd;
        if (pol_done && spat_done) {
            out.p1 += cls.probability;
            continue;
        }
        const EcpRoundSimulation second = ecp_round_simulated(ecp_amplitudes_of(cls.ab_state, kPairAB));
        double success = 0.0;
        for (const auto& next : second.classes) {
            if ((pol_done || next.pol == Parity::Odd) && (spat_done || next.spat == Parity::Odd)) {
                success += next.probability;
            }
        }
        const double mass = cls.probability * success;
        if (!pol_done && !spat_done) {
            out.p2_1 += mass;
        } else if (pol_done) {
            out.p2_2 += mass;
        } else {
            out.p2_3 += mass;
        }
    }
    return out;
}

}  // namespace hyperent
