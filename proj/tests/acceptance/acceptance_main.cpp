// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperent/cavity.hpp"
#include "hyperent/cli/app.hpp"
#include "hyperent/ecp.hpp"
#include "hyperent/epp.hpp"
#include "hyperent/qnd.hpp"
#include "hyperent/sampling.hpp"

using namespace hyperent;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;
    std::string failures;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            failures += " [failed: " + what + "]";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Check qnd_fidelities() {
    Check c;
    const ReflectionPair rp = reflection_pair(CavityParams::nv_photonic_crystal());
    const double fp = fidelity_closed_form_p(std::abs(rp.r0), std::abs(rp.r));
    const double fs = fidelity_closed_form_s(std::abs(rp.r0), std::abs(rp.r));
    c.detail << "F_P=" << fp << " F_S=" << fs;
    c.require(std::abs(fp - 0.971) <= 1e-3, "F_P within 0.971 +- 0.001");
    c.require(std::abs(fs - 0.986) <= 1e-3, "F_S within 0.986 +- 0.001");
    return c;
}

Check ideal_limits() {
    Check c;
    CavityParams bare;
    bare.gamma = 0.015;
    bare.eta = 10.0;
    const Complex r0 = reflection_coefficient(bare, 0.0);
    c.detail << "r0=" << r0.real() << "+" << r0.imag() << "i F_P(1,1)=" << fidelity_closed_form_p(1, 1)
             << " F_S(1,1)=" << fidelity_closed_form_s(1, 1);
    c.require(std::abs(r0 + 1.0) <= 1e-12, "bare reflection -1");
    c.require(std::abs(fidelity_closed_form_p(1, 1) - 1.0) <= 1e-12, "F_P(1,1) = 1");
    c.require(std::abs(fidelity_closed_form_s(1, 1) - 1.0) <= 1e-12, "F_S(1,1) = 1");
    return c;
}

Check epp_recurrence_and_oracle() {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            const double f1 = 0.5 + 0.125 * i;
            const double f2 = 0.5 + 0.125 * j;
            const double g1 = f1 * f1 + (1 - f1) * (1 - f1);
            const double g2 = f2 * f2 + (1 - f2) * (1 - f2);
            const EppRoundResult r = epp_round_simulated(EppEnsemble::from_fidelities(f1, f2));
            worst = std::max({worst, std::abs(r.f1_prime - f1 * f1 / g1), std::abs(r.f2_prime - f2 * f2 / g2),
                              std::abs(r.yield_prob - g1 * g2)});
        }
    }
    c.require(worst <= 1e-9, "simulation matches recurrence within 1e-9");

    bool trend = true;
    std::vector<std::vector<double>> curves;
    for (double f : {0.6, 0.7, 0.8, 0.9}) {
        std::vector<double> curve;
        for (const auto& s : epp_iterate(f, f, 5)) {
            curve.push_back(s.fidelity);
        }
        for (std::size_t n = 1; n < curve.size(); ++n) {
            // Strict until the curve saturates at 1 in double precision.
            trend = trend && (curve[n] > curve[n - 1] || curve[n - 1] == 1.0);
        }
        curves.push_back(curve);
    }
    for (std::size_t k = 1; k < curves.size(); ++k) {
        for (std::size_t n = 0; n < curves[k].size(); ++n) {
            trend = trend && (curves[k][n] > curves[k - 1][n] || curves[k - 1][n] == 1.0);
        }
    }
    c.require(trend, "F' increasing in n and ordered by F1");
    const double elapsed = seconds_since(start);
    c.require(elapsed < 30.0, "runtime under 30 s");
    c.detail << "grid max deviation=" << worst << " runtime=" << elapsed << "s";
    return c;
}

Check ecp_probabilities() {
    Check c;
    const double a = std::sqrt(0.45);
    const EcpSuccess s5 = ecp_success_probability(a, a, 5);
    const EcpSuccess s20 = ecp_success_probability(a, a, 20);
    c.detail << "p(1)=" << s5.per_round[0] << " P(5)=" << s5.total << " P(20)=" << s20.total;
    c.require(std::abs(s5.per_round[0] - 0.2450) <= 1e-4, "p(1) = 0.2450 +- 1e-4");
    c.require(std::abs(s5.total - 0.808) <= 2e-3, "P(5) = 0.808 +- 0.002");
    c.require(std::abs(s20.total - 4 * std::pow(a, 4)) <= 1e-3, "P(20) within 1e-3 of 4 alpha^4");

    double worst = 0.0;
    for (double alpha : {0.3, a, 0.8}) {
        for (double gamma : {0.35, a, 0.6}) {
            const double beta = std::sqrt(1 - alpha * alpha);
            const double delta = std::sqrt(1 - gamma * gamma);
            const double ab = alpha * beta;
            const double gd = gamma * delta;
            const double p4 = std::pow(alpha, 4) + std::pow(beta, 4);
            const double s4 = std::pow(gamma, 4) + std::pow(delta, 4);
            const double p21 = 4 * std::pow(ab * gd, 4) / (p4 * s4);
            const double p22 = 4 * std::pow(gd, 4) * ab * ab / s4;
            const double p23 = 4 * std::pow(ab, 4) * gd * gd / p4;
            const EcpSuccess tree = ecp_success_probability(alpha, gamma, 2);
            const EcpTwoRoundOracle circuit = ecp_two_rounds_simulated({alpha, beta, gamma, delta});
            worst = std::max({worst, std::abs(tree.per_round[1] - (p21 + p22 + p23)), std::abs(circuit.p2_1 - p21),
                              std::abs(circuit.p2_2 - p22), std::abs(circuit.p2_3 - p23)});
        }
    }
    c.detail << " round-2 max deviation=" << worst;
    c.require(worst <= 1e-12, "round-2 masses match closed forms within 1e-12");
    return c;
}

Check qnd_parity_table() {
    Check c;
    const PhotonPair ac{"A", "C"};
    int passed = 0;
    for (QndKind kind : {QndKind::Polarization, QndKind::Spatial}) {
        for (const auto& label : all_hyper_bell_labels()) {
            const PureState in = hyper_bell_state(ac, label);
            const Parity expected = kind == QndKind::Polarization ? label.pol.parity : label.spat.parity;
            for (const auto& b : run_qnd(kind, in, ac, QndMode::ideal())) {
                if (b.outcome.parity == expected && std::abs(b.probability - 1.0) <= 1e-12 &&
                    std::abs(fidelity(b.outcome.photon_post, in) - 1.0) <= 1e-12) {
                    ++passed;
                }
            }
        }
    }
    c.detail << passed << "/32 cases";
    c.require(passed == 32, "all 32 cases deterministic and nondemolition");
    return c;
}

Check probability_conservation() {
    Check c;
    double worst = 0.0;
    int cases = 0;
    for (const auto& ab : all_hyper_bell_labels()) {
        for (const auto& cd : all_hyper_bell_labels()) {
            const EppPairTransition t = epp_pair_transition(ab, cd);
            worst = std::max(worst, std::abs(t.kept + t.discarded - 1.0));
            ++cases;
        }
    }
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            const EppRoundResult r =
                epp_round_simulated(EppEnsemble::from_fidelities(0.5 + 0.125 * i, 0.5 + 0.125 * j));
            worst = std::max(worst, std::abs(r.yield_prob + r.discarded_prob - 1.0));
            ++cases;
        }
    }
    for (double alpha : {0.2, 0.4, std::sqrt(0.45), 0.75, 0.9}) {
        for (double gamma : {0.2, 0.4, std::sqrt(0.45), 0.75, 0.9}) {
            const EcpRoundSimulation sim = ecp_round_simulated(
                {alpha, std::sqrt(1 - alpha * alpha), gamma, std::sqrt(1 - gamma * gamma)});
            worst = std::max(worst, std::abs(sim.total_probability - 1.0));
            ++cases;
        }
    }
    const PhotonPair ac{"A", "C"};
    const ReflectionPair lossy = reflection_pair(CavityParams::nv_photonic_crystal());
    for (const auto& label : all_hyper_bell_labels()) {
        for (QndKind kind : {QndKind::Polarization, QndKind::Spatial}) {
            for (const QndMode& mode : {QndMode::ideal(), QndMode::lossy(lossy)}) {
                double total = 0.0;
                for (const auto& b : run_qnd(kind, hyper_bell_state(ac, label), ac, mode)) {
                    total += b.probability;
                }
                worst = std::max(worst, std::abs(total - 1.0));
                ++cases;
            }
        }
    }
    c.detail << cases << " inputs, max deviation=" << worst;
    c.require(worst <= 1e-12, "branch probabilities sum to 1 within 1e-12");
    return c;
}

Check monte_carlo() {
    Check c;
    constexpr std::uint64_t shots = 100000;
    const SampleReport epp = sample_protocol(EppRun{EppEnsemble::from_fidelities(0.8, 0.8), 1}, shots, 20240601);
    const double a = std::sqrt(0.45);
    const SampleReport ecp = sample_protocol(EcpRun{a, a, 5}, shots, 20240602);
    const double epp_z = std::abs(epp.success.mean - epp.exact_success) / epp.success.standard_error;
    const double ecp_z = std::abs(ecp.success.mean - ecp.exact_success) / ecp.success.standard_error;
    c.detail << "EPP yield " << epp.success.mean << " vs " << epp.exact_success << " (" << epp_z << " SE), ECP P "
             << ecp.success.mean << " vs " << ecp.exact_success << " (" << ecp_z << " SE)";
    c.require(epp_z <= 3.0, "EPP yield within 3 SE");
    c.require(ecp_z <= 3.0, "ECP success within 3 SE");
    const SampleReport epp2 = sample_protocol(EppRun{EppEnsemble::from_fidelities(0.8, 0.8), 1}, shots, 20240601);
    const SampleReport ecp2 = sample_protocol(EcpRun{a, a, 5}, shots, 20240602);
    c.require(epp2.successes == epp.successes && epp2.fidelity->mean == epp.fidelity->mean &&
                  ecp2.first_success_round == ecp.first_success_round,
              "same seed reruns bit-identical");
    return c;
}

std::string run_in_process(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"hyperent"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    if (hyperent::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err) != 0) {
        return "<error: " + err.str() + ">";
    }
    return out.str();
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Check cli_determinism() {
    Check c;
    const std::vector<std::vector<std::string>> configs{
        {"epp"}, {"ecp"}, {"qnd-fidelity", "--g", "0,0.5,1,2,4"}};
    for (const auto& args : configs) {
        const std::string first = run_in_process(args);
        c.require(first.rfind("<error", 0) != 0, args[0] + " runs");
        c.require(first == run_in_process(args), args[0] + " in-process output identical");
    }
#ifdef HYPERENT_CLI_PATH
    const auto dir = std::filesystem::temp_directory_path() / "hyperent_acceptance";
    std::filesystem::create_directories(dir);
    int compared = 0;
    for (const auto& args : configs) {
        std::string joined;
        for (const auto& a : args) {
            joined += " " + a;
        }
        std::vector<std::string> outputs;
        for (int k = 0; k < 2; ++k) {
            const auto file = dir / (args[0] + "_" + std::to_string(k) + ".csv");
            const std::string cmd =
                std::string("\"") + HYPERENT_CLI_PATH + "\"" + joined + " --out \"" + file.string() + "\"";
            c.require(std::system(cmd.c_str()) == 0, "binary " + args[0] + " exits 0");
            outputs.push_back(slurp(file));
        }
        c.require(!outputs[0].empty() && outputs[0] == outputs[1], "binary " + args[0] + " files identical");
        c.require(outputs[0] == run_in_process(args), "binary and in-process " + args[0] + " identical");
        ++compared;
    }
    std::filesystem::remove_all(dir);
    c.detail << "epp, ecp, qnd-fidelity identical in-process and across " << compared << " binary rerun pairs";
#else
    c.detail << "epp, ecp, qnd-fidelity identical in-process";
#endif
    return c;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
        {"QND fidelities at the photonic-crystal point", qnd_fidelities},
        {"ideal reflection and fidelity limits", ideal_limits},
        {"EPP recurrence, circuit oracle and trend", epp_recurrence_and_oracle},
        {"ECP success probabilities and round-2 masses", ecp_probabilities},
        {"QND parity table", qnd_parity_table},
        {"probability conservation", probability_conservation},
        {"Monte Carlo consistency", monte_carlo},
        {"CLI artifact determinism", cli_determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            c = criteria[i].second();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail << "exception: " << e.what();
        }
        std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " -- "
                  << c.detail.str() << c.failures << std::endl;
        failures += c.ok ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
