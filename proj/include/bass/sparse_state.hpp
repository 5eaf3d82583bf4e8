// Copyright 2026 The BASS Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bass/amplitude_map.hpp"
#include "bass/common.hpp"

namespace bass {

/// Stored entries with squared magnitude at or below this are arithmetic
/// dust and are pruned whenever a state is rebuilt.
inline constexpr double kDropThreshold = 1e-30;

struct TruncationEvent {
    double step_gamma2 = 1.0;  // retained probability / pre-truncation norm
    uint64_t kept = 0;
    uint64_t discarded = 0;
};

/// Sparse amplitude container over computational-basis keys (little-endian:
/// qubit j is bit j) with a running product of per-truncation retained
/// probabilities.
class SparseState {
  public:
    explicit SparseState(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    uint64_t dim() const { return uint64_t(1) << n_qubits_; }
    size_t support_size() const { return amps_.size(); }

    AmplitudeMap& amplitudes() { return amps_; }
    const AmplitudeMap& amplitudes() const { return amps_; }

    double gamma2_tot() const { return gamma2_tot_; }
    void mul_gamma2(double g) { gamma2_tot_ *= g; }
    void set_gamma2(double g) { gamma2_tot_ = g; }

    /// Squared norm of the stored amplitudes (compensated sum).
    double norm2() const;

    /// Replaces the amplitude table, pruning sub-threshold entries.
    void replace_amplitudes(const std::vector<std::pair<uint64_t, cplx>>& entries);

    /// Full snapshot/restore used by trial-rotation reverts; restores are
    /// bit-identical.
    SparseState clone() const { return *this; }

  private:
    int n_qubits_;
    AmplitudeMap amps_;
    double gamma2_tot_ = 1.0;
};

/// (sum p)^2 / sum p^2 over stored probabilities; norm-invariant by
/// construction. Throws on an empty state.
double participation_ratio(const SparseState& state);

/// Retains the k largest-|amplitude|^2 entries (ties: ascending basis index),
/// renormalizes, and folds the retained fraction into gamma2_tot.
TruncationEvent truncate_topk(SparseState& state, uint64_t k);

/// Generic budgeted truncation: keeps the k highest-scoring entries. The
/// gamma accounting is always by probability, independent of the score.
/// score(key, prob) must be a pure function of the pre-truncation support.
TruncationEvent truncate_by_score(
    SparseState& state, uint64_t k,
    const std::function<double(uint64_t, double)>& score);

/// Rescales to unit norm; returns the pre-normalization squared norm.
double normalize(SparseState& state);

}  // namespace bass
