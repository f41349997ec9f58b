#pragma once

// Dense state-vector kernel for small labeled qubit registers.
//
// Every qubit in a register carries a label (owner + kind). Amplitudes are
// stored big-endian with respect to the register: the first label is the
// most significant bit of the amplitude index. Basis conventions per kind:
//   polarization  0 = R,      1 = L
//   spatial       0 = path-1, 1 = path-2
//   spin          0 = |-1>,   1 = |+1>

#include <array>
#include <complex>
#include <compare>
#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace hyperent {

using Complex = std::complex<double>;

//! Row-major 2x2 complex matrix.
using Matrix2 = std::array<std::array<Complex, 2>, 2>;

inline constexpr double kAlgebraicTol = 1e-12;
inline constexpr double kChainedTol = 1e-9;
inline constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2;

enum class Dof { Polarization, Spatial, Spin };

std::string to_string(Dof kind);

struct QubitLabel {
    std::string owner;
    Dof kind = Dof::Polarization;

    friend bool operator==(const QubitLabel&, const QubitLabel&) = default;
    friend auto operator<=>(const QubitLabel&, const QubitLabel&) = default;
};

std::string to_string(const QubitLabel& label);

inline QubitLabel pol(std::string photon) { return {std::move(photon), Dof::Polarization}; }
inline QubitLabel spatial(std::string photon) { return {std::move(photon), Dof::Spatial}; }
inline QubitLabel spin(std::string nv) { return {std::move(nv), Dof::Spin}; }

namespace basis {
inline constexpr int R = 0;
inline constexpr int L = 1;
inline constexpr int Path1 = 0;
inline constexpr int Path2 = 1;
inline constexpr int SpinMinus = 0;  // |-1>
inline constexpr int SpinPlus = 1;   // |+1>
}  // namespace basis

class PureState {
  public:
    //! The zero-qubit state with amplitude 1.
    PureState() : amplitudes_{Complex{1.0, 0.0}} {}
    //! Throws std::invalid_argument on duplicate labels or a size mismatch.
    PureState(std::vector<QubitLabel> reg, std::vector<Complex> amplitudes);

    const std::vector<QubitLabel>& labels() const noexcept { return register_; }
    const std::vector<Complex>& amplitudes() const noexcept { return amplitudes_; }
    std::size_t num_qubits() const noexcept { return register_.size(); }
    std::size_t dimension() const noexcept { return amplitudes_.size(); }

    bool contains(const QubitLabel& label) const noexcept;
    //! Position in the register. Throws std::invalid_argument if absent.
    std::size_t position(const QubitLabel& label) const;
    //! Bit mask selecting this label inside an amplitude index.
    std::size_t mask(const QubitLabel& label) const;

    //! Amplitude of the basis ket with the given per-label indices.
    Complex amplitude(std::span<const int> indices) const;

    double squared_norm() const noexcept;
    bool is_normalized(double tol = kAlgebraicTol) const noexcept;
    //! Throws std::domain_error for the zero vector.
    PureState normalized() const;

  private:
    std::vector<QubitLabel> register_;
    std::vector<Complex> amplitudes_;
};

struct MeasurementOutcome {
    QubitLabel label;
    int index = 0;
};

struct MeasurementBranch {
    std::vector<MeasurementOutcome> outcome;
    double probability = 0.0;
    //! Normalized when probability > 0; the zero vector otherwise.
    PureState post_state;

    int index_of(const QubitLabel& label) const;
};

struct DiagonalResult {
    PureState state;
    double squared_norm = 0.0;
};

//! Factor indexed by the joint basis index of the listed labels (first label MSB).
using DiagonalFactor = std::function<Complex(std::size_t joint_index)>;

PureState basis_ket(std::vector<QubitLabel> reg, std::span<const int> indices);
inline PureState basis_ket(std::vector<QubitLabel> reg, std::initializer_list<int> indices) {
    return basis_ket(std::move(reg), std::span<const int>(indices.begin(), indices.size()));
}

//! Joint index of a full-register ket from per-label indices (inverse of basis_indices).
std::size_t basis_position(std::size_t num_qubits, std::span<const int> indices);
std::vector<int> basis_indices(std::size_t num_qubits, std::size_t position);

struct Term {
    Complex coefficient;
    PureState state;
};

//! Coefficient-weighted sum; never normalized implicitly.
PureState superpose(std::span<const Term> terms);
PureState superpose(std::initializer_list<Term> terms);

//! Tensor product; the result register is a's labels followed by b's.
PureState tensor(const PureState& a, const PureState& b);

//! Same amplitudes expressed over a permutation of the register.
PureState reorder(const PureState& state, const std::vector<QubitLabel>& target);

bool is_unitary(const Matrix2& u, double tol = kAlgebraicTol);

PureState apply_local_unitary(const PureState& state, const QubitLabel& label, const Matrix2& u);

DiagonalResult apply_diagonal_map(const PureState& state, std::span<const QubitLabel> labels,
                                  const DiagonalFactor& factor);
DiagonalResult apply_diagonal_map(const PureState& state, std::initializer_list<QubitLabel> labels,
                                  const DiagonalFactor& factor);

//! Projective measurement of `labels`, each in the orthonormal basis formed
//! by the columns of its matrix. Returns all 2^k branches in outcome order.
std::vector<MeasurementBranch> measure(const PureState& state, std::span<const QubitLabel> labels,
                                       std::span<const Matrix2> bases);
//! Computational-basis measurement.
std::vector<MeasurementBranch> measure(const PureState& state, std::span<const QubitLabel> labels);
std::vector<MeasurementBranch> measure(const PureState& state, std::initializer_list<QubitLabel> labels);

Complex inner_product(const PureState& a, const PureState& b);
double fidelity(const PureState& a, const PureState& b);

namespace gates {
inline const Matrix2 identity{{{Complex{1, 0}, Complex{0, 0}}, {Complex{0, 0}, Complex{1, 0}}}};
inline const Matrix2 hadamard{{{Complex{kInvSqrt2, 0}, Complex{kInvSqrt2, 0}},
                               {Complex{kInvSqrt2, 0}, Complex{-kInvSqrt2, 0}}}};
inline const Matrix2 pauli_x{{{Complex{0, 0}, Complex{1, 0}}, {Complex{1, 0}, Complex{0, 0}}}};
inline const Matrix2 pauli_z{{{Complex{1, 0}, Complex{0, 0}}, {Complex{0, 0}, Complex{-1, 0}}}};
}  // namespace gates

}  // namespace hyperent
