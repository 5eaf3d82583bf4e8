// Copyright 2026 The BASS Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "bass/linalg.hpp"

namespace bass {

/// Accumulated per-qubit working basis: the sparse state is stored in the
/// product frame defined by these N unitaries (all identity initially).
struct BasisFrame {
    std::vector<Mat2> unitaries;

    explicit BasisFrame(int n_qubits) : unitaries(n_qubits, Mat2::identity()) {}

    int n_qubits() const { return static_cast<int>(unitaries.size()); }

    bool identity(double tol = 0.0) const {
        for (const Mat2& u : unitaries)
            if (!is_identity(u, tol)) return false;
        return true;
    }
};

}  // namespace bass
