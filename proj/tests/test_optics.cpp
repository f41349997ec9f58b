#include <gtest/gtest.h>

#include <stdexcept>

#include "hyperent/optics.hpp"
#include "support.hpp"

using namespace hyperent;

namespace {

const PhotonPair kAB{"A", "B"};

// |x1 x2> +- |y1 y2>, normalized, written out explicitly.
PureState two_term(const std::vector<QubitLabel>& reg, std::initializer_list<int> x, std::initializer_list<int> y,
                   double sign) {
    return superpose({{kInvSqrt2, basis_ket(reg, x)}, {sign * kInvSqrt2, basis_ket(reg, y)}});
}

}  // namespace

TEST(BellState, PhiPlusPolarization) {
    const std::vector<QubitLabel> reg{pol("A"), pol("B")};
    const PureState expected = two_term(reg, {basis::R, basis::R}, {basis::L, basis::L}, +1);
    EXPECT_NEAR(fidelity(bell_state(kAB, Dof::Polarization, bell::phi_plus), expected), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(inner_product(bell_state(kAB, Dof::Polarization, bell::phi_plus), expected) - 1.0), 0.0,
                1e-12);
}

TEST(BellState, PsiMinusSpatial) {
    const std::vector<QubitLabel> reg{spatial("A"), spatial("B")};
    const PureState expected = two_term(reg, {basis::Path1, basis::Path2}, {basis::Path2, basis::Path1}, -1);
    EXPECT_NEAR(std::abs(inner_product(bell_state(kAB, Dof::Spatial, bell::psi_minus), expected) - 1.0), 0.0,
                1e-12);
}

TEST(BellState, DistinctLabelsAreOrthogonal) {
    for (auto a : bell::all) {
        for (auto b : bell::all) {
            const double f = fidelity(bell_state(kAB, Dof::Spatial, a), bell_state(kAB, Dof::Spatial, b));
            EXPECT_NEAR(f, a == b ? 1.0 : 0.0, 1e-12);
        }
    }
}

TEST(BellState, RejectsIdenticalPhotons) {
    EXPECT_THROW(bell_state({"A", "A"}, Dof::Polarization, bell::phi_plus), std::invalid_argument);
}

TEST(BellState, RejectsSpinDof) { EXPECT_THROW(bell_state(kAB, Dof::Spin, bell::phi_plus), std::invalid_argument); }

TEST(BellLabel, IndexRoundTrip) {
    for (int i = 0; i < 4; ++i) {
        EXPECT_EQ(BellLabel::from_index(i).index(), i);
    }
    for (int i = 0; i < 16; ++i) {
        EXPECT_EQ(HyperBellLabel::from_index(i).index(), i);
    }
    EXPECT_THROW(BellLabel::from_index(4), std::invalid_argument);
    EXPECT_THROW(HyperBellLabel::from_index(16), std::invalid_argument);
}

TEST(HyperBellState, PhiPhiIsTensorOfBellStates) {
    const PureState expected =
        tensor(bell_state(kAB, Dof::Polarization, bell::phi_plus), bell_state(kAB, Dof::Spatial, bell::phi_plus));
    const PureState s = hyper_bell_state(kAB, {bell::phi_plus, bell::phi_plus});
    EXPECT_EQ(s.labels(), hyper_bell_register(kAB));
    EXPECT_NEAR(fidelity(s, expected), 1.0, 1e-12);
}

TEST(HyperBellState, PhiPhiAndPhiPsiAreOrthogonal) {
    EXPECT_NEAR(fidelity(hyper_bell_state(kAB, {bell::phi_plus, bell::phi_plus}),
                         hyper_bell_state(kAB, {bell::phi_plus, bell::psi_plus})),
                0.0, 1e-12);
}

TEST(HyperBellState, SixteenStatesAreOrthonormal) {
    const auto labels = all_hyper_bell_labels();
    for (const auto& a : labels) {
        for (const auto& b : labels) {
            const double f = fidelity(hyper_bell_state(kAB, a), hyper_bell_state(kAB, b));
            EXPECT_NEAR(f, a == b ? 1.0 : 0.0, 1e-12) << to_string(a) << " vs " << to_string(b);
        }
    }
}

TEST(Flips, SigmaZPolOnEitherPhotonTurnsPhiPlusIntoPhiMinus) {
    const PureState phi_p = bell_state(kAB, Dof::Polarization, bell::phi_plus);
    const PureState phi_m = bell_state(kAB, Dof::Polarization, bell::phi_minus);
    EXPECT_NEAR(fidelity(sigma_z_pol(phi_p, "A"), phi_m), 1.0, 1e-12);
    EXPECT_NEAR(fidelity(sigma_z_pol(phi_p, "B"), phi_m), 1.0, 1e-12);
}

TEST(Flips, SpatialBitFlipOnBothPhotonsMapsTwoPathProductBack) {
    // |a2 b2 c1 d1> + |a1 b1 c2 d2> -> |a2 b2 c2 d2> + |a1 b1 c1 d1>.
    const std::vector<QubitLabel> reg{spatial("A"), spatial("B"), spatial("C"), spatial("D")};
    const PureState phi2 = two_term(reg, {1, 1, 0, 0}, {0, 0, 1, 1}, +1);
    const PureState phi1 = two_term(reg, {1, 1, 1, 1}, {0, 0, 0, 0}, +1);
    EXPECT_NEAR(fidelity(sigma_x_spatial(sigma_x_spatial(phi2, "C"), "D"), phi1), 1.0, 1e-12);
}

TEST(Flips, EveryFlipIsAnInvolution) {
    gen::Rng rng(21);
    const PureState s = rng.state(hyper_bell_register(kAB));
    using Op = PureState (*)(const PureState&, const std::string&);
    for (Op op : {Op{sigma_z_pol}, Op{sigma_x_pol}, Op{sigma_z_spatial}, Op{sigma_x_spatial}, Op{hadamard_pol},
                  Op{hadamard_spatial}}) {
        const PureState t = op(op(s, "A"), "A");
        EXPECT_NEAR(std::abs(inner_product(s, t) - 1.0), 0.0, 1e-12);
    }
}

TEST(Flips, RejectMissingPhoton) {
    const PureState s = hyper_bell_state(kAB, {bell::phi_plus, bell::phi_plus});
    EXPECT_THROW(sigma_x_pol(s, "C"), std::invalid_argument);
    EXPECT_THROW(hadamard_spatial(s, "C"), std::invalid_argument);
}

TEST(PhaseToBitFrame, PhiMinusBecomesPsiPlus) {
    const PureState in = hyper_bell_state(kAB, {bell::phi_minus, bell::phi_plus});
    const PureState out = phase_to_bit_frame(phase_to_bit_frame(in, "A"), "B");
    const auto match = classify_hyper_bell(out, kAB);
    ASSERT_TRUE(match.has_value());
    EXPECT_EQ(match->label, (HyperBellLabel{bell::psi_plus, bell::phi_plus}));
}

TEST(PhaseToBitFrame, PhiPhiIsFixed) {
    const PureState in = hyper_bell_state(kAB, {bell::phi_plus, bell::phi_plus});
    const PureState out = phase_to_bit_frame(phase_to_bit_frame(in, "A"), "B");
    EXPECT_NEAR(fidelity(in, out), 1.0, 1e-12);
}

TEST(PhaseToBitFrame, TwiceIsIdentity) {
    gen::Rng rng(22);
    const PureState s = rng.state(hyper_bell_register(kAB));
    PureState t = s;
    for (int k = 0; k < 2; ++k) {
        t = phase_to_bit_frame(phase_to_bit_frame(t, "A"), "B");
    }
    EXPECT_NEAR(std::abs(inner_product(s, t) - 1.0), 0.0, 1e-12);
}

TEST(Classify, RejectsNonBellState) {
    gen::Rng rng(23);
    EXPECT_FALSE(classify_hyper_bell(rng.state(hyper_bell_register(kAB)), kAB).has_value());
}

TEST(Classify, AcceptsAnyQubitOrder) {
    const HyperBellLabel label{bell::psi_minus, bell::phi_minus};
    const PureState s = reorder(hyper_bell_state(kAB, label), {spatial("B"), pol("A"), spatial("A"), pol("B")});
    const auto match = classify_hyper_bell(s, kAB);
    ASSERT_TRUE(match.has_value());
    EXPECT_EQ(match->label, label);
}

// Properties.

TEST(OpticsProperty, HadamardPairPermutesBellLabels) {
    // H x H on both photons: phi+ -> phi+, phi- -> psi+, psi+ -> phi-, psi- -> psi- (up to phase).
    const std::array<std::pair<BellLabel, BellLabel>, 4> table{{{bell::phi_plus, bell::phi_plus},
                                                                {bell::phi_minus, bell::psi_plus},
                                                                {bell::psi_plus, bell::phi_minus},
                                                                {bell::psi_minus, bell::psi_minus}}};
    for (const auto& [in, out] : table) {
        for (Dof dof : {Dof::Polarization, Dof::Spatial}) {
            const PureState s = bell_state(kAB, dof, in);
            const PureState t = dof == Dof::Polarization ? hadamard_pol(hadamard_pol(s, "A"), "B")
                                                         : hadamard_spatial(hadamard_spatial(s, "A"), "B");
            EXPECT_NEAR(fidelity(t, bell_state(kAB, dof, out)), 1.0, 1e-12);
        }
    }
}

TEST(OpticsProperty, ElementsPreserveNorm) {
    gen::Rng rng(24);
    using Op = PureState (*)(const PureState&, const std::string&);
    const std::array<Op, 7> ops{sigma_z_pol,  sigma_x_pol,      sigma_z_spatial,   sigma_x_spatial,
                                hadamard_pol, hadamard_spatial, phase_to_bit_frame};
    for (int trial = 0; trial < 40; ++trial) {
        PureState s = rng.state(hyper_bell_register(kAB));
        for (int k = 0; k < 10; ++k) {
            s = ops[static_cast<std::size_t>(rng.integer(0, 6))](s, rng.integer(0, 1) ? "A" : "B");
        }
        EXPECT_NEAR(s.squared_norm(), 1.0, 1e-12);
    }
}

TEST(OpticsProperty, PolarizationElementsKeepSpatialStatistics) {
    gen::Rng rng(25);
    for (int trial = 0; trial < 20; ++trial) {
        // Product of a random polarization state and a random spatial state.
        const PureState s =
            tensor(rng.state({pol("A"), pol("B")}), rng.state({spatial("A"), spatial("B")}));
        PureState t = hadamard_pol(sigma_x_pol(sigma_z_pol(s, "A"), "B"), "A");
        const auto before = measure(s, {spatial("A"), spatial("B")});
        const auto after = measure(t, {spatial("A"), spatial("B")});
        for (std::size_t k = 0; k < before.size(); ++k) {
            EXPECT_NEAR(before[k].probability, after[k].probability, 1e-12);
        }
        t = hadamard_spatial(sigma_x_spatial(s, "A"), "B");
        const auto pol_before = measure(s, {pol("A"), pol("B")});
        const auto pol_after = measure(t, {pol("A"), pol("B")});
        for (std::size_t k = 0; k < pol_before.size(); ++k) {
            EXPECT_NEAR(pol_before[k].probability, pol_after[k].probability, 1e-12);
        }
    }
}
