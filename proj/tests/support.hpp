#pragma once

// Independent reference computations and seeded generators shared by the
// unit tests. Nothing here calls into the library's physics.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "hyperent/hilbert.hpp"

namespace oracle {

using cd = std::complex<double>;

// Reflection amplitude of a one-side cavity with an embedded two-level emitter,
// written out term by term from the input-output steady state.
inline cd reflection(double omega, double omega_c, double omega_e, double g, double gamma, double eta,
                     double kappa) {
    const cd i{0.0, 1.0};
    const cd emitter = i * (omega_e - omega) + gamma / 2.0;
    const cd num = emitter * (i * (omega_c - omega) - eta / 2.0 + kappa / 2.0) + g * g;
    const cd den = emitter * (i * (omega_c - omega) + eta / 2.0 + kappa / 2.0) + g * g;
    return num / den;
}

inline double closed_form_p(double r0, double r) {
    const double a = std::abs(r0) + std::abs(r) + 2.0;
    const double b = r0 * r0 + r * r + 2.0;
    const double c = std::pow(r0, 4) + std::pow(r, 4) + 2.0;
    return b * b * a * a / (16.0 * c * b);
}

inline double closed_form_s(double r0, double r) {
    const double q2 = r0 * r0 + r * r;
    const double q4 = std::pow(r0, 4) + std::pow(r, 4);
    const double a = r0 + r + 2.0;
    return (0.5 + q2 * q2 / (4.0 * q4)) * a * a / (4.0 * (q2 + 2.0));
}

inline double purify(double f) { return f * f / (f * f + (1.0 - f) * (1.0 - f)); }
inline double pass(double f) { return f * f + (1.0 - f) * (1.0 - f); }

// Unmerged recursion over (pol, spatial) with squared amplitudes x = a^2 and
// y = gamma^2; x < 0 marks a concentrated DOF. Returns the success mass first
// reached in `round` given that `depth` rounds have been spent.
inline double first_success_mass(double x, double y, int depth, int round) {
    if (depth == round) {
        return 0.0;
    }
    struct Branch {
        double p;
        double next;
    };
    auto step = [](double s) {
        if (s < 0.0) {
            return std::vector<Branch>{{0.5, -1.0}, {0.5, -1.0}};
        }
        const double t = 1.0 - s;
        return std::vector<Branch>{{2.0 * s * t, -1.0}, {s * s + t * t, s * s / (s * s + t * t)}};
    };
    double mass = 0.0;
    for (const auto& bp : step(x)) {
        for (const auto& bs : step(y)) {
            const double p = bp.p * bs.p;
            if (bp.next < 0.0 && bs.next < 0.0) {
                mass += depth + 1 == round ? p : 0.0;
            } else if (p > 0.0) {
                mass += p * first_success_mass(bp.next, bs.next, depth + 1, round);
            }
        }
    }
    return mass;
}

}  // namespace oracle

namespace gen {

// Hand-rolled generators for property tests; fixed seeds keep runs repeatable.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

    hyperent::Complex complex_normal() { return {normal(), normal()}; }

    hyperent::PureState state(std::vector<hyperent::QubitLabel> reg) {
        std::vector<hyperent::Complex> amps(std::size_t{1} << reg.size());
        for (auto& a : amps) {
            a = complex_normal();
        }
        return hyperent::PureState(std::move(reg), std::move(amps)).normalized();
    }

    hyperent::Matrix2 unitary() {
        // Random U(2) from Euler angles and a global phase.
        const double theta = uniform(0.0, std::numbers::pi);
        const double a = uniform(0.0, 2 * std::numbers::pi);
        const double b = uniform(0.0, 2 * std::numbers::pi);
        const double g = uniform(0.0, 2 * std::numbers::pi);
        const hyperent::Complex e = std::polar(1.0, g);
        return {{{e * std::polar(std::cos(theta / 2), a), e * std::polar(std::sin(theta / 2), b)},
                 {-e * std::polar(std::sin(theta / 2), -b), e * std::polar(std::cos(theta / 2), -a)}}};
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace gen
