// Copyright 2026 The BASS Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "bass/frame.hpp"
#include "bass/sparse_state.hpp"

namespace bass {

struct OptimizeReport {
    int passes_run = 0;
    uint64_t attempted = 0;
    uint64_t accepted = 0;
    uint64_t reverted = 0;
    double pr_before = 0.0;
    double pr_after = 0.0;
    bool monotonic_ok = true;
};

/// Multi-pass coordinate-descent basis optimization (do-no-harm guarded).
///
/// Each pass computes all N single-qubit RDMs once from the pass-start state
/// and reuses them for every trial in the sweep. For each qubit ascending:
/// diagonalize rho_j, tentatively apply V_j^dag, truncate to top-k,
/// renormalize, and accept only if the PR strictly decreased (then
/// U_j <- U_j V_j); otherwise the pre-trial state is restored bit-exactly.
/// Ends early when a full pass accepts nothing. Effectively-diagonal RDMs
/// are skipped without an attempt.
///
/// Accepted-trial truncation events are appended to *events when given, so
/// the caller's event product stays equal to gamma2_tot.
OptimizeReport basis_optimize(SparseState& state, BasisFrame& frame, uint64_t k,
                              int max_passes = 3,
                              std::vector<TruncationEvent>* events = nullptr);

/// Mixes amplitude pairs (x with bit j = 0, x ^ 2^j) by the ADJOINT of v;
/// unmatched partners are treated as amplitude zero. Support may grow up to
/// twofold.
void apply_single_qubit_rotation(SparseState& state, int qubit, const Mat2& v);

/// Optional transient two-qubit brick-wall pass: for even pairs then odd
/// pairs, rotate into the pair-RDM eigenbasis, truncate, renormalize, rotate
/// back, truncate, renormalize; keep iff the PR improved, else exact revert.
/// The basis frame is never modified.
OptimizeReport two_qubit_optimize(SparseState& state, uint64_t k,
                                  std::vector<TruncationEvent>* events = nullptr);

/// Adaptive re-optimization trigger: true iff pr_last = 0 (first eligible
/// check) or pr_cur > pr_last / tau.
bool pr_trigger(double pr_cur, double pr_last, double tau);

}  // namespace bass
