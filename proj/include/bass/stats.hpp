// Copyright 2026 The BASS Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bass/common.hpp"

namespace bass {

/// exp(mean(log x)); throws on nonpositive values.
double geometric_mean(const std::vector<double>& values);

/// Percentile bootstrap interval for the geometric mean.
std::pair<double, double> bootstrap_ci_gm(const std::vector<double>& values,
                                          int resamples, double level, Rng& rng);

/// Wilson score interval for a binomial proportion.
std::pair<double, double> wilson_interval(uint64_t successes, uint64_t trials,
                                          double level = 0.95);

/// One-sided Wilcoxon signed-rank p-value for H1: a > b (paired), normal
/// approximation with continuity correction, midranks for ties, zero-drop.
double wilcoxon_signed_rank_onesided(const std::vector<double>& a,
                                     const std::vector<double>& b);

double normal_cdf(double x);
double normal_quantile(double p);

/// Per-trial values for two methods on identical instances plus the derived
/// ratio statistics used by every benchmark table.
struct PairedTrialSet {
    std::vector<double> a;
    std::vector<double> b;

    std::vector<double> ratios() const;       // r_i = a_i / b_i
    double gm_ratio() const;                  // geometric mean of ratios
    double multiplicative_se() const;         // exp(SE(log r))
    uint64_t wins_b_over_a() const;           // |{i : b_i > a_i}|
    double wilcoxon_b_over_a() const;         // H1: b > a
    std::pair<double, double> bootstrap_ratio_ci(int resamples, double level,
                                                 Rng& rng) const;
};

}  // namespace bass
