#include "hyperent/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace hyperent {

namespace {

std::size_t shift_of(std::size_t num_qubits, std::size_t position) {
    return num_qubits - 1 - position;
}

void check_register(const std::vector<QubitLabel>& reg) {
    std::set<QubitLabel> seen;
    for (const auto& label : reg) {
        if (!seen.insert(label).second) {
            throw std::invalid_argument("duplicate qubit label " + to_string(label));
        }
    }
    if (reg.size() >= 8 * sizeof(std::size_t) - 1) {
        throw std::invalid_argument("register too large for a dense state");
    }
}

void require_normalized(const PureState& state, const char* what) {
    if (!state.is_normalized()) {
        throw std::invalid_argument(std::string(what) + ": unnormalized input state");
    }
}

}  // namespace

std::string to_string(Dof kind) {
    switch (kind) {
    case Dof::Polarization:
        return "pol";
    case Dof::Spatial:
        return "spatial";
    case Dof::Spin:
        return "spin";
    }
    return "?";
}

std::string to_string(const QubitLabel& label) { return label.owner + "." + to_string(label.kind); }

PureState::PureState(std::vector<QubitLabel> reg, std::vector<Complex> amplitudes)
    : register_(std::move(reg)), amplitudes_(std::move(amplitudes)) {
    check_register(register_);
    if (amplitudes_.size() != (std::size_t{1} << register_.size())) {
        throw std::invalid_argument("amplitude vector length must be 2^n");
    }
}

bool PureState::contains(const QubitLabel& label) const noexcept {
    return std::find(register_.begin(), register_.end(), label) != register_.end();
}

std::size_t PureState::position(const QubitLabel& label) const {
    auto it = std::find(register_.begin(), register_.end(), label);
    if (it == register_.end()) {
        throw std::invalid_argument("label " + to_string(label) + " not in register");
    }
    return static_cast<std::size_t>(it - register_.begin());
}

std::size_t PureState::mask(const QubitLabel& label) const {
    return std::size_t{1} << shift_of(num_qubits(), position(label));
}

Complex PureState::amplitude(std::span<const int> indices) const {
    if (indices.size() != num_qubits()) {
        throw std::invalid_argument("amplitude: one index per label required");
    }
    return amplitudes_[basis_position(num_qubits(), indices)];
}

double PureState::squared_norm() const noexcept {
    double sum = 0.0;
    for (const auto& a : amplitudes_) {
        sum += std::norm(a);
    }
    return sum;
}

bool PureState::is_normalized(double tol) const noexcept { return std::abs(squared_norm() - 1.0) <= tol; }

PureState PureState::normalized() const {
    const double n2 = squared_norm();
    if (n2 <= 0.0) {
        throw std::domain_error("cannot normalize the zero vector");
    }
    const double scale = 1.0 / std::sqrt(n2);
    std::vector<Complex> amps(amplitudes_);
    for (auto& a : amps) {
        a *= scale;
    }
    return PureState(register_, std::move(amps));
}

int MeasurementBranch::index_of(const QubitLabel& label) const {
    for (const auto& o : outcome) {
        if (o.label == label) {
            return o.index;
        }
    }
    throw std::invalid_argument("label " + to_string(label) + " was not measured");
}

std::size_t basis_position(std::size_t num_qubits, std::span<const int> indices) {
    if (indices.size() != num_qubits) {
        throw std::invalid_argument("one basis index per label required");
    }
    std::size_t pos = 0;
    for (int idx : indices) {
        if (idx != 0 && idx != 1) {
            throw std::invalid_argument("basis index out of range");
        }
        pos = (pos << 1) | static_cast<std::size_t>(idx);
    }
    return pos;
}

std::vector<int> basis_indices(std::size_t num_qubits, std::size_t position) {
    std::vector<int> out(num_qubits);
    for (std::size_t q = 0; q < num_qubits; ++q) {
        out[q] = static_cast<int>((position >> shift_of(num_qubits, q)) & 1U);
    }
    return out;
}

PureState basis_ket(std::vector<QubitLabel> reg, std::span<const int> indices) {
    check_register(reg);
    const std::size_t pos = basis_position(reg.size(), indices);
    std::vector<Complex> amps(std::size_t{1} << reg.size());
    amps[pos] = 1.0;
    return PureState(std::move(reg), std::move(amps));
}

PureState superpose(std::span<const Term> terms) {
    if (terms.empty()) {
        throw std::invalid_argument("superpose: no terms");
    }
    const auto& reg = terms.front().state.labels();
    std::vector<Complex> amps(terms.front().state.dimension());
    for (const auto& term : terms) {
        if (term.state.labels() != reg) {
            throw std::invalid_argument("superpose: register mismatch");
        }
        const auto& src = term.state.amplitudes();
        for (std::size_t i = 0; i < amps.size(); ++i) {
            amps[i] += term.coefficient * src[i];
        }
    }
    return PureState(reg, std::move(amps));
}

PureState superpose(std::initializer_list<Term> terms) {
    return superpose(std::span<const Term>(terms.begin(), terms.size()));
}

PureState tensor(const PureState& a, const PureState& b) {
    std::vector<QubitLabel> reg = a.labels();
    reg.insert(reg.end(), b.labels().begin(), b.labels().end());
    check_register(reg);
    const auto& x = a.amplitudes();
    const auto& y = b.amplitudes();
    std::vector<Complex> amps(x.size() * y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) {
            amps[i * y.size() + j] = x[i] * y[j];
        }
    }
    return PureState(std::move(reg), std::move(amps));
}

PureState reorder(const PureState& state, const std::vector<QubitLabel>& target) {
    if (target.size() != state.num_qubits()) {
        throw std::invalid_argument("reorder: target register size mismatch");
    }
    const std::size_t n = target.size();
    std::vector<std::size_t> source_shift(n);
    for (std::size_t q = 0; q < n; ++q) {
        source_shift[q] = shift_of(n, state.position(target[q]));
    }
    std::vector<Complex> amps(state.dimension());
    for (std::size_t t = 0; t < amps.size(); ++t) {
        std::size_t s = 0;
        for (std::size_t q = 0; q < n; ++q) {
            if ((t >> shift_of(n, q)) & 1U) {
                s |= std::size_t{1} << source_shift[q];
            }
        }
        amps[t] = state.amplitudes()[s];
    }
    return PureState(target, std::move(amps));
}

bool is_unitary(const Matrix2& u, double tol) {
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Complex dot = std::conj(u[0][i]) * u[0][j] + std::conj(u[1][i]) * u[1][j];
            const Complex expected = (i == j) ? 1.0 : 0.0;
            if (std::abs(dot - expected) > tol) {
                return false;
            }
        }
    }
    return true;
}

PureState apply_local_unitary(const PureState& state, const QubitLabel& label, const Matrix2& u) {
    if (!is_unitary(u)) {
        throw std::invalid_argument("apply_local_unitary: matrix is not unitary");
    }
    const std::size_t m = state.mask(label);
    std::vector<Complex> amps(state.amplitudes());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & m) {
            continue;
        }
        const Complex a0 = amps[i];
        const Complex a1 = amps[i | m];
        amps[i] = u[0][0] * a0 + u[0][1] * a1;
        amps[i | m] = u[1][0] * a0 + u[1][1] * a1;
    }
    return PureState(state.labels(), std::move(amps));
}

DiagonalResult apply_diagonal_map(const PureState& state, std::span<const QubitLabel> labels,
                                  const DiagonalFactor& factor) {
    std::vector<std::size_t> masks;
    masks.reserve(labels.size());
    for (const auto& label : labels) {
        masks.push_back(state.mask(label));
    }
    std::vector<Complex> amps(state.amplitudes());
    double n2 = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        std::size_t joint = 0;
        for (std::size_t m : masks) {
            joint = (joint << 1) | ((i & m) ? 1U : 0U);
        }
        amps[i] *= factor(joint);
        n2 += std::norm(amps[i]);
    }
    return {PureState(state.labels(), std::move(amps)), n2};
}

DiagonalResult apply_diagonal_map(const PureState& state, std::initializer_list<QubitLabel> labels,
                                  const DiagonalFactor& factor) {
    return apply_diagonal_map(state, std::span<const QubitLabel>(labels.begin(), labels.size()), factor);
}

std::vector<MeasurementBranch> measure(const PureState& state, std::span<const QubitLabel> labels,
                                       std::span<const Matrix2> bases) {
    if (bases.size() != labels.size()) {
        throw std::invalid_argument("measure: one basis per label required");
    }
    require_normalized(state, "measure");

    // Rotate each measured qubit so its basis becomes computational.
    PureState rotated = state;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        const Matrix2& b = bases[k];
        const Matrix2 adjoint{{{std::conj(b[0][0]), std::conj(b[1][0])}, {std::conj(b[0][1]), std::conj(b[1][1])}}};
        rotated = apply_local_unitary(rotated, labels[k], adjoint);
    }

    const std::size_t k = labels.size();
    std::vector<std::size_t> masks;
    for (const auto& label : labels) {
        masks.push_back(rotated.mask(label));
    }
    std::vector<QubitLabel> remaining;
    std::vector<std::size_t> remaining_masks;
    for (const auto& label : rotated.labels()) {
        if (std::find(labels.begin(), labels.end(), label) == labels.end()) {
            remaining.push_back(label);
            remaining_masks.push_back(rotated.mask(label));
        }
    }
    const double total = rotated.squared_norm();

    std::vector<MeasurementBranch> branches;
    branches.reserve(std::size_t{1} << k);
    for (std::size_t o = 0; o < (std::size_t{1} << k); ++o) {
        std::size_t fixed = 0;
        std::vector<MeasurementOutcome> outcome;
        for (std::size_t q = 0; q < k; ++q) {
            const int bit = static_cast<int>((o >> (k - 1 - q)) & 1U);
            outcome.push_back({labels[q], bit});
            if (bit) {
                fixed |= masks[q];
            }
        }
        std::vector<Complex> amps(std::size_t{1} << remaining.size());
        double p = 0.0;
        for (std::size_t r = 0; r < amps.size(); ++r) {
            std::size_t full = fixed;
            for (std::size_t q = 0; q < remaining.size(); ++q) {
                if ((r >> (remaining.size() - 1 - q)) & 1U) {
                    full |= remaining_masks[q];
                }
            }
            amps[r] = rotated.amplitudes()[full];
            p += std::norm(amps[r]);
        }
        if (p > 0.0) {
            const double scale = 1.0 / std::sqrt(p);
            for (auto& a : amps) {
                a *= scale;
            }
        }
        branches.push_back({std::move(outcome), p / total, PureState(remaining, std::move(amps))});
    }
    return branches;
}

std::vector<MeasurementBranch> measure(const PureState& state, std::span<const QubitLabel> labels) {
    std::vector<Matrix2> bases(labels.size(), gates::identity);
    return measure(state, labels, bases);
}

std::vector<MeasurementBranch> measure(const PureState& state, std::initializer_list<QubitLabel> labels) {
    return measure(state, std::span<const QubitLabel>(labels.begin(), labels.size()));
}

Complex inner_product(const PureState& a, const PureState& b) {
    if (a.labels() != b.labels()) {
        throw std::invalid_argument("inner_product: register mismatch");
    }
    Complex sum = 0.0;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        sum += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
    }
    return sum;
}

double fidelity(const PureState& a, const PureState& b) {
    require_normalized(a, "fidelity");
    require_normalized(b, "fidelity");
    return std::min(1.0, std::norm(inner_product(a, b)));
}

}  // namespace hyperent
