// Copyright 2026 The BASS Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "bass/common.hpp"
#include "bass/sparse_state.hpp"

namespace bass {

/// Calibrated fidelity-estimator constants. The fitted triple is the
/// default; the baseline preset keeps the fitted depth exponent since no
/// alternative is published for it.
struct EstimatorParams {
    double z = 0.104;
    double eta = 9.069;
    double delta = 3.807;
    double clip_lo = 0.01;
    double clip_hi = 1.0;

    static EstimatorParams fitted() { return {}; }
    static EstimatorParams baseline() {
        EstimatorParams p;
        p.z = 0.82;
        p.eta = 3.72;
        return p;
    }
};

/// Schmidt sector of a basis index at cut position c: floor(x / 2^c).
uint64_t schmidt_sector(uint64_t x, int cut);

/// Keeps the k best entries scored by |amplitude|^2 / C_{N/2}(x), where
/// C is the number of currently stored states sharing the sector at the
/// central cut. Gamma accounting is identical to top-k truncation.
TruncationEvent truncate_schmidt1(SparseState& state, uint64_t k);

/// Three-cut variant: score = |amplitude|^2 divided by the geometric mean of
/// the sector counts at cuts {N/4, N/2, 3N/4} (integer floor when N % 4 != 0).
TruncationEvent truncate_schmidt3(SparseState& state, uint64_t k);

/// Keeps k support keys chosen uniformly at random without replacement.
TruncationEvent truncate_random(SparseState& state, uint64_t k, Rng& rng);

/// Gate-count-corrected fidelity estimator R = alpha(gamma2, M) * gamma2,
/// alpha_A = 1 - z sqrt((1-g)/(g eta M)), alpha_B = 1 - g / M^delta,
/// alpha = clip(min(alpha_A, alpha_B), 0.01, 1). Returns 0 when gamma2 <= 0.
double calibrated_r(double gamma2_tot, uint64_t gate_count,
                    const EstimatorParams& params = EstimatorParams::fitted());

/// True iff R exceeds F by more than both the absolute floor 1e-6 and the
/// relative threshold 1e-3.
bool violation_check(double fidelity, double r_estimate);

}  // namespace bass
