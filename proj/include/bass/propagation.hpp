// Copyright 2026 The BASS Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bass/frame.hpp"
#include "bass/gates.hpp"
#include "bass/sparse_state.hpp"

namespace bass {

enum class SimMode { Fixed, Adaptive };

std::string mode_name(SimMode m);
SimMode mode_from_name(const std::string& s);

struct SimConfig {
    uint64_t k = 2048;
    uint64_t c_hard = 8;          // hard cap K_hard = min(c_hard * k, 2^N)
    int n_opt = 5;                // optimization check every n_opt truncation-active gates
    int n_trunc = 1;              // deferred-truncation interval (1 = truncate every over-budget step)
    double trigger_ratio = 0.90;  // fire when PR_cur > PR_last / trigger_ratio
    SimMode mode = SimMode::Fixed;
    int max_passes = 3;
    bool two_qubit_pass = false;
    double diag_tol = 1e-12;
    uint64_t seed = 0;
    bool optimizer_enabled = true;  // false: Adaptive bookkeeping with the trigger disabled

    uint64_t hard_cap(int n_qubits) const;
    void validate() const;
};

struct PhaseTimings {
    double gates_s = 0.0;
    double optimize_s = 0.0;
    double total_s = 0.0;
};

struct RunRecord {
    double gamma2_tot = 1.0;
    std::vector<TruncationEvent> events;  // every probability-losing truncation
    std::vector<double> pr_trace;         // retained-support PR after each event
    uint64_t rotations_attempted = 0;
    uint64_t rotations_accepted = 0;
    uint64_t rotations_reverted = 0;
    uint64_t optimization_calls = 0;
    uint64_t passes_total = 0;
    bool monotonic_ok = true;  // PR never increased over an accepted rotation
    PhaseTimings timings;
};

struct RunResult {
    SparseState state;
    BasisFrame frame;
    RunRecord record;
};

/// Gate conjugated into the working frame:
/// G~ = (U_q1 (x) U_q2)^dag G (U_q1 (x) U_q2), single-qubit analogue for
/// one-qubit gates.
Gate conjugate_gate(const Gate& gate, const BasisFrame& frame);

/// True iff every off-diagonal magnitude is at most tol.
bool is_diagonal(const Gate& gate, double tol);

/// In-place phase update a_x <- a_x * G~[s][s]; the support is unchanged and
/// no second table is allocated.
void apply_diagonal(SparseState& state, const Gate& gate);

/// General sparse gate application through a fresh open-addressing table:
/// each input key contributes up to 4 (2 for one-qubit gates) output keys,
/// collisions merge by amplitude addition. If the output support exceeds
/// hard_cap, an immediate top-hard_cap truncation fires (event returned).
std::optional<TruncationEvent> apply_general(SparseState& state, const Gate& gate,
                                             uint64_t hard_cap);

/// Budget-enforcement rule used at the deferred-truncation points. The
/// default is truncate_topk; the benchmark harness substitutes the Schmidt
/// and random rules here.
using TruncationPolicy = std::function<TruncationEvent(SparseState&, uint64_t)>;

/// Main simulation loop: conjugate each gate, diagonal fast path when
/// applicable, deferred truncation against (k, K_hard, n_trunc), adaptive
/// basis optimization on PR-trigger steps, and a final truncate + normalize
/// so the returned state respects the budget.
RunResult run(const Circuit& circuit, const SimConfig& cfg);
RunResult run(const Circuit& circuit, const SimConfig& cfg, const TruncationPolicy& policy);

std::string run_record_to_json(const RunRecord& r);

}  // namespace bass
