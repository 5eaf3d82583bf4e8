// Copyright 2026 The BASS Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "bass/gates.hpp"
#include "bass/heuristics.hpp"
#include "bass/propagation.hpp"

namespace bass {

inline constexpr int kSchemaVersion = 1;

/// One reproduced experiment: a grid of (n, k) points, a trial count, and
/// the simulator settings shared by every mode. Paired modes run on the
/// same circuit instance.
struct ExperimentConfig {
    std::string experiment;
    Family family = Family::Brickwork1D;
    FamilyParams params;
    std::vector<int> n_list;
    std::vector<uint64_t> k_list;
    std::vector<SimMode> modes = {SimMode::Fixed, SimMode::Adaptive};
    int trials = 1;
    uint64_t base_seed = 1;
    SimConfig sim;
    EstimatorParams estimator;
    std::string out_dir;
    int threads = 0;            // 0 = hardware concurrency
    bool compute_entropy = false;  // exact half-chain entropy per trial (even n <= 16)

    void validate() const;
};

ExperimentConfig experiment_config_from_json(const std::string& text);
std::string experiment_config_to_json(const ExperimentConfig& cfg);

struct ResultRow {
    int schema_version = kSchemaVersion;
    std::string experiment;
    std::string family;
    int n = 0;
    uint64_t k = 0;
    std::string mode;
    int trial = 0;
    uint64_t circuit_seed = 0;
    uint64_t circ_hash = 0;
    uint64_t gate_count = 0;
    bool has_reference = false;
    double fidelity = 0.0;  // valid only when has_reference
    double pr_z = 0.0;      // exact-state PR, valid only when has_reference
    double entropy = -1.0;  // exact half-chain entropy (even n <= 16 only)
    double misalignment_deg = -1.0;  // mean per-qubit RDM misalignment angle
    double gamma2_tot = 1.0;
    double pr_support = 1.0;  // retained-support PR of the final state
    double r_estimate = 0.0;
    bool violation = false;
    RunRecord record;
    bool failed = false;
    std::string error;
};

std::string result_row_to_json(const ResultRow& row);

struct ExperimentResult {
    std::vector<ResultRow> rows;
    std::string summary_json;
    std::string aggregate_csv;
    bool any_failed = false;
};

/// Runs the full grid (trial-parallel) and builds the aggregate summary.
/// Per-trial failures are recorded and skipped in aggregates.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Writes rows.jsonl, aggregate.csv and summary.json under out_dir.
void write_experiment_output(const ExperimentResult& result, const std::string& out_dir);

/// Retained-support PR of the current sparse state; same formula
/// as participation_ratio and logged as the headroom diagnostic.
double sparse_support_pr(const SparseState& state);

/// Deterministic per-trial seed: hash(base_seed, family, n, k, trial).
uint64_t trial_seed(uint64_t base_seed, Family family, int n, uint64_t k, int trial);

struct LogLinearFit {
    double slope = 0.0;
    double stderr_slope = 0.0;
    double intercept = 0.0;
};

/// Least-squares fit of y against x (used on log2 GM(PR_Z) vs N).
LogLinearFit fit_loglinear(const std::vector<double>& x, const std::vector<double>& y);

struct PrzFitResult {
    double alpha = 0.0;
    double stderr_alpha = 0.0;
    std::vector<int> n_list;
    std::vector<double> gm_pr;
};

/// Exact-state PR_Z scaling fit over n_list (>= 3 sizes, each <= 20,
/// >= 10 trials per size).
PrzFitResult fit_prz_scaling(Family family, const FamilyParams& params,
                             const std::vector<int>& n_list, int trials,
                             uint64_t base_seed);

/// Paired truncation-rule comparison on fixed-basis runs: top-k vs
/// Schmidt-1cut vs Schmidt-3cut vs random-k on identical circuits.
struct SchmidtBenchConfig {
    Family family = Family::Brickwork1D;
    FamilyParams params;
    int n = 12;
    uint64_t k = 512;
    int trials = 30;
    uint64_t base_seed = 1;
    SimConfig sim;
};

struct SchmidtBenchResult {
    std::vector<std::string> rules;            // "topk", "schmidt1", "schmidt3", "random"
    std::vector<std::vector<double>> fidelity;  // [rule][trial]
    std::string summary_json;
};

SchmidtBenchResult schmidt_bench(const SchmidtBenchConfig& cfg);

}  // namespace bass
