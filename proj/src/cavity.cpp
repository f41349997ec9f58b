#include "hyperent/cavity.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperent {

namespace {

void check_unit_interval(double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
    }
}

}  // namespace

void CavityParams::validate() const {
    for (double rate : {g, gamma, eta, kappa}) {
        if (!std::isfinite(rate) || rate < 0.0) {
            throw std::invalid_argument("cavity rates must be finite and nonnegative");
        }
    }
    if (!std::isfinite(omega_c) || !std::isfinite(omega_e)) {
        throw std::invalid_argument("cavity frequencies must be finite");
    }
}

CavityParams CavityParams::uncoupled() const noexcept {
    CavityParams p = *this;
    p.g = 0.0;
    return p;
}

CavityParams CavityParams::nv_photonic_crystal() {
    CavityParams p;
    p.gamma = 0.015;
    p.eta = 10.0;
    p.kappa = p.eta / 10.0;
    p.g = 0.1 * p.eta;
    return p;
}

Complex reflection_coefficient(const CavityParams& params, double omega) {
    params.validate();
    const Complex i{0.0, 1.0};
    const Complex nv = i * (params.omega_e - omega) + params.gamma / 2.0;
    const Complex detune_c = i * (params.omega_c - omega);
    const double g2 = params.g * params.g;
    const Complex numerator = nv * (detune_c - params.eta / 2.0 + params.kappa / 2.0) + g2;
    const Complex denominator = nv * (detune_c + params.eta / 2.0 + params.kappa / 2.0) + g2;
    if (std::abs(denominator) <= 1e-300) {
        throw std::domain_error("reflection coefficient: degenerate denominator");
    }
    return numerator / denominator;
}

ReflectionPair reflection_pair(const CavityParams& params, double omega) {
    return {reflection_coefficient(params, omega), reflection_coefficient(params.uncoupled(), omega)};
}

ReflectionPair reflection_pair(const CavityParams& params) { return reflection_pair(params, params.omega_c); }

ReflectionRule ideal_reflection_rule() noexcept { return lossy_reflection_rule(ReflectionPair::ideal()); }

ReflectionRule lossy_reflection_rule(const ReflectionPair& rp) noexcept {
    // R couples to the |-1> transition, L to |+1>.
    return {rp.r, rp.r0, rp.r0, rp.r};
}

double fidelity_closed_form_p(double abs_r0, double abs_r) {
    check_unit_interval(abs_r0, "|r0|");
    check_unit_interval(abs_r, "|r|");
    const double s1 = abs_r0 + abs_r + 2.0;
    const double s2 = abs_r0 * abs_r0 + abs_r * abs_r + 2.0;
    const double s4 = std::pow(abs_r0, 4) + std::pow(abs_r, 4) + 2.0;
    return (s2 * s2) * (s1 * s1) / (16.0 * s4 * s2);
}

double fidelity_closed_form_s(double abs_r0, double abs_r) {
    check_unit_interval(abs_r0, "|r0|");
    check_unit_interval(abs_r, "|r|");
    const double q2 = abs_r0 * abs_r0 + abs_r * abs_r;
    const double q4 = std::pow(abs_r0, 4) + std::pow(abs_r, 4);
    if (q4 == 0.0) {
        throw std::domain_error("F_S undefined at |r0| = |r| = 0");
    }
    const double s1 = abs_r0 + abs_r + 2.0;
    return (0.5 + q2 * q2 / (4.0 * q4)) * (s1 * s1) / (4.0 * (q2 + 2.0));
}

}  // namespace hyperent
