#pragma once

// One-side cavity with an embedded NV center: steady-state reflection in the
// weak-excitation limit, the spin-selective reflection rules built on it, and
// closed-form fidelities of the two parity-check gadgets.
//
// All rates and frequencies are plain numbers in units of 2*pi*GHz; e.g. an
// NV decay rate of 2*pi*15 MHz is gamma = 0.015.

#include <array>
#include <complex>

#include "hyperent/hilbert.hpp"

namespace hyperent {

struct CavityParams {
    double g = 0.0;        // cavity-NV coupling
    double gamma = 0.0;    // NV decay rate
    double eta = 0.0;      // cavity field decay into the waveguide
    double kappa = 0.0;    // side leakage
    double omega_c = 0.0;  // cavity frequency
    double omega_e = 0.0;  // NV transition frequency

    //! Throws std::invalid_argument on a negative or non-finite rate.
    void validate() const;
    bool is_resonant() const noexcept { return omega_c == omega_e; }
    CavityParams uncoupled() const noexcept;

    //! gamma = 2pi*15 MHz, eta = 2pi*10 GHz, 10*kappa = eta, g = 0.1*eta, resonant.
    static CavityParams nv_photonic_crystal();
};

struct ReflectionPair {
    Complex r{1.0, 0.0};    // NV coupled
    Complex r0{-1.0, 0.0};  // g = 0

    static ReflectionPair ideal() noexcept { return {}; }
};

//! Reflection amplitude a_out/a_in at probe frequency `omega`.
//! Throws std::domain_error if the denominator vanishes.
Complex reflection_coefficient(const CavityParams& params, double omega);

//! Coupled and uncoupled reflection at the probe frequency.
ReflectionPair reflection_pair(const CavityParams& params, double omega);
//! Same, probing at the cavity resonance.
ReflectionPair reflection_pair(const CavityParams& params);

//! Diagonal factor on (photon polarization, NV spin), indexed pol*2 + spin
//! with R=0, L=1, |-1>=0, |+1>=1.
using ReflectionRule = std::array<Complex, 4>;

ReflectionRule ideal_reflection_rule() noexcept;
ReflectionRule lossy_reflection_rule(const ReflectionPair& rp) noexcept;

inline Complex rule_factor(const ReflectionRule& rule, int polarization, int spin_index) {
    return rule[static_cast<std::size_t>(2 * polarization + spin_index)];
}

//! Polarization parity-check fidelity from |r0| and |r|, both in [0, 1].
double fidelity_closed_form_p(double abs_r0, double abs_r);
//! Spatial parity-check fidelity. Throws std::domain_error at (0, 0).
double fidelity_closed_form_s(double abs_r0, double abs_r);

}  // namespace hyperent
