#include "hyperent/sampling.hpp"

#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace hyperent {

namespace {

class Uniform01 {
  public:
    explicit Uniform01(std::uint64_t seed) : engine_(seed) {}

    // 53 random mantissa bits, identical on every platform for a given seed.
    double operator()() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  private:
    std::mt19937_64 engine_;
};

template <typename Weights>
std::size_t draw_index(const Weights& weights, double total, double u) {
    double target = u * total;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0.0) {
            continue;
        }
        last_positive = i;
        if (target < weights[i]) {
            return i;
        }
        target -= weights[i];
    }
    return last_positive;
}

Estimate bernoulli_estimate(std::uint64_t hits, std::uint64_t trials) {
    if (trials == 0) {
        return {};
    }
    const double p = static_cast<double>(hits) / static_cast<double>(trials);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(trials))};
}

SampleReport sample_epp(const EppRun& run, std::uint64_t shots, std::uint64_t seed) {
    // Ensemble entering each round, from the simulated rounds themselves.
    std::vector<EppEnsemble> ensembles{run.ensemble};
    double exact_success = 1.0;
    for (int k = 0; k < run.rounds; ++k) {
        const EppRoundResult round = epp_round_simulated(ensembles.back());
        exact_success *= round.yield_prob;
        ensembles.push_back(round.kept_ensemble);
    }

    std::map<std::pair<int, int>, EppPairTransition> transitions;
    auto transition = [&](int ab, int cd) -> const EppPairTransition& {
        auto it = transitions.find({ab, cd});
        if (it == transitions.end()) {
            it = transitions
                     .emplace(std::make_pair(ab, cd),
                              epp_pair_transition(HyperBellLabel::from_index(ab), HyperBellLabel::from_index(cd)))
                     .first;
        }
        return it->second;
    };

    Uniform01 uniform(seed);
    const HyperBellLabel target{bell::phi_plus, bell::phi_plus};
    std::uint64_t survivors = 0;
    std::uint64_t on_target = 0;
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        int label = static_cast<int>(draw_index(ensembles.front().weights(), 1.0, uniform()));
        bool alive = true;
        for (int k = 0; k < run.rounds && alive; ++k) {
            const int partner =
                static_cast<int>(draw_index(ensembles[static_cast<std::size_t>(k)].weights(), 1.0, uniform()));
            const EppPairTransition& t = transition(label, partner);
            const double total = t.kept + t.discarded;
            if (uniform() * total >= t.kept) {
                alive = false;
                break;
            }
            label = static_cast<int>(draw_index(t.output, t.kept, uniform()));
        }
        if (alive) {
            ++survivors;
            if (label == target.index()) {
                ++on_target;
            }
        }
    }

    SampleReport report;
    report.shots = shots;
    report.successes = survivors;
    report.success = bernoulli_estimate(survivors, shots);
    report.exact_success = exact_success;
    report.fidelity = bernoulli_estimate(on_target, survivors);
    report.exact_fidelity = ensembles.back().fidelity();
    return report;
}

SampleReport sample_ecp(const EcpRun& run, std::uint64_t shots, std::uint64_t seed) {
    const EcpSuccess exact = ecp_success_probability(run.alpha, run.gamma, run.rounds);
    const EcpDofState pol_root = EcpDofState::residual(run.alpha, std::sqrt(1.0 - run.alpha * run.alpha));
    const EcpDofState spat_root = EcpDofState::residual(run.gamma, std::sqrt(1.0 - run.gamma * run.gamma));

    Uniform01 uniform(seed);
    SampleReport report;
    report.shots = shots;
    report.first_success_round.assign(static_cast<std::size_t>(run.rounds), 0);
    auto step = [&](const EcpDofState& s) {
        const auto branches = ecp_dof_step(s);
        const double u = uniform();
        return u < branches[0].probability ? branches[0].next : branches[1].next;
    };
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        EcpDofState pol_state = pol_root;
        EcpDofState spat_state = spat_root;
        for (int k = 0; k < run.rounds; ++k) {
            pol_state = step(pol_state);
            spat_state = step(spat_state);
            if (pol_state.is_maximal() && spat_state.is_maximal()) {
                ++report.successes;
                ++report.first_success_round[static_cast<std::size_t>(k)];
                break;
            }
        }
    }
    report.success = bernoulli_estimate(report.successes, shots);
    report.exact_success = exact.total;
    return report;
}

}  // namespace

SampleReport sample_protocol(const ProtocolRun& run, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("Monte Carlo needs at least one shot");
    }
    return std::visit(
        [&](const auto& r) -> SampleReport {
            if (r.rounds < 0) {
                throw std::invalid_argument("round count must be nonnegative");
            }
            if constexpr (std::is_same_v<std::decay_t<decltype(r)>, EppRun>) {
                return sample_epp(r, shots, seed);
            } else {
                return sample_ecp(r, shots, seed);
            }
        },
        run);
}

}  // namespace hyperent
