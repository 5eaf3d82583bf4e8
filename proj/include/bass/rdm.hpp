// Copyright 2026 The BASS Authors
// SPDX-License-Identifier: Apache-2.0
//
// Reduced-density-matrix kernels.
//
//   - rdm1_all: all N single-qubit RDMs in one pass over the amplitude table.
//     Diagonals accumulate |a|^2 by bit value; the off-diagonal accumulates
//     a_x * conj(a_{x^2^j}) from the bit=0 side via partner lookup.
//   - dominant_eigvec_2x2 / eigenbasis_2x2: closed-form 2x2 Hermitian
//     eigensolver, constant cost per qubit.
//   - rdm2: two-qubit RDM by grouping support keys on the rest index
//     (sort-by-masked-key, O(nnz log nnz)).
//   - eig4_hermitian: fixed-size cyclic-Jacobi 4x4 Hermitian eigensolver.

#pragma once

#include <array>
#include <vector>

#include "bass/linalg.hpp"
#include "bass/sparse_state.hpp"

namespace bass {

/// Guard constant: if |b|^2 < eps_mach * max(|a|, |d|) the RDM is treated as
/// effectively diagonal and no rotation is proposed. Suppresses spurious
/// rotations sourced from numerical noise in the off-diagonal.
inline constexpr double kEpsMach = 2.22e-16;

/// Single-qubit RDM: real diagonal (a, d), complex upper off-diagonal b.
/// Hermitian by construction (rho_10 = conj(b)).
struct Rdm1 {
    double a = 0.0;
    double d = 0.0;
    cplx b{0.0};

    bool effectively_diagonal() const {
        return std::norm(b) < kEpsMach * std::max(std::abs(a), std::abs(d));
    }
};

struct Eig2 {
    std::array<cplx, 2> vec;
    double val;
};

/// All N single-qubit RDMs of a normalized sparse state; expected cost
/// O(N * support).
std::vector<Rdm1> rdm1_all(const SparseState& state);

/// Dominant eigenpair of the 2x2 Hermitian rho in closed form:
/// lambda = (a+d)/2 + sqrt(tau^2 + |b|^2), v ~ (b, tau + Delta).
/// When the guard fires, returns the dominant standard basis vector.
Eig2 dominant_eigvec_2x2(const Rdm1& rho);

/// Unitary whose column 0 is the dominant eigenvector and column 1 the
/// orthogonal complement; V^dag rho V is diagonal with descending diagonal.
/// Column phases are fixed so the first nonzero entry is real positive.
/// Returns the identity when the guard fires.
Mat2 eigenbasis_2x2(const Rdm1& rho);

/// Two-qubit RDM on (q1, q2), indexed by the block index
/// s = bit_q1(x) * 2 + bit_q2(x).
Mat4 rdm2(const SparseState& state, int q1, int q2);

struct Eig4 {
    Mat4 vectors;                  // eigenvectors in columns
    std::array<double, 4> values;  // descending
};

/// Cyclic-Jacobi eigendecomposition (off-diagonal Frobenius threshold 1e-13,
/// max 50 sweeps). Throws if the input is non-Hermitian beyond 1e-10.
Eig4 eig4_hermitian(const Mat4& rho);

}  // namespace bass
