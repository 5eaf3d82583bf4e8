// Copyright 2026 The BASS Authors
// SPDX-License-Identifier: Apache-2.0
//
// Dense exact statevector oracle: fidelity against the lab frame, exact PR,
// half-chain entropy, and partial traces. Everything here is capped at
// N <= 24 (256 MB of complex doubles); larger systems are sparse-only.

#pragma once

#include <vector>

#include "bass/frame.hpp"
#include "bass/gates.hpp"
#include "bass/sparse_state.hpp"

namespace bass {

inline constexpr int kDenseMaxQubits = 24;

struct DenseState {
    int n_qubits = 0;
    std::vector<cplx> amps;  // little-endian indexing, matches SparseState

    explicit DenseState(int n);
    uint64_t dim() const { return uint64_t(1) << n_qubits; }
};

void dense_apply_gate(DenseState& state, const Gate& gate);

/// Applies every gate exactly in the lab frame from |0...0>.
DenseState dense_simulate(const Circuit& circuit);

/// |<reference | (tensor_j U_j) phi_sparse>|^2: the sparse state is
/// un-rotated to the lab frame through the basis frame before the overlap.
double fidelity(const SparseState& state, const BasisFrame& frame,
                const DenseState& reference);

double pr_z_exact(const DenseState& reference);

/// -sum lambda log2 lambda over the left-half reduced density matrix
/// spectrum; requires even N.
double half_chain_entropy(const DenseState& reference);

/// Exact partial trace onto the given (ascending) qubit subset; row-major
/// 2^m x 2^m density matrix.
std::vector<cplx> partial_trace(const DenseState& reference,
                                const std::vector<int>& kept_qubits);

}  // namespace bass
