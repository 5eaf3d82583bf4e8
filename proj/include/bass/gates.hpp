// Copyright 2026 The BASS Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bass/common.hpp"
#include "bass/linalg.hpp"

namespace bass {

/// One- or two-qubit unitary. For two-qubit gates the 4x4 matrix is indexed
/// by the block index s = bit(targets[0]) * 2 + bit(targets[1]), i.e. the
/// first target supplies the high bit.
struct Gate {
    std::vector<int> targets;
    std::vector<cplx> matrix;  // row-major, 2x2 or 4x4
    bool diagonal_hint = false;

    int dim() const { return targets.size() == 1 ? 2 : 4; }
    cplx at(int r, int c) const { return matrix[r * dim() + c]; }

    static Gate one_qubit(int q, const Mat2& m, bool diag = false);
    static Gate two_qubit(int q1, int q2, const Mat4& m, bool diag = false);

    Mat2 as_mat2() const;
    Mat4 as_mat4() const;
};

enum class Family { Brickwork1D, Brickwork2D, HaarPairs, QAOA, RFIM, UCCSD, TFIM };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

using FamilyParams = std::map<std::string, double>;

struct Circuit {
    int n_qubits = 0;
    Family family = Family::Brickwork1D;
    FamilyParams params;
    uint64_t seed = 0;
    std::vector<Gate> gates;
};

/// Haar-distributed unitary of dimension 2 or 4 via QR of a complex-Gaussian
/// matrix with the R diagonal real positive (unique decomposition).
std::vector<cplx> haar_unitary(int dim, Rng& rng);
Mat2 haar_unitary2(Rng& rng);
Mat4 haar_unitary4(Rng& rng);

/// Simple 3-regular graph on n vertices by the pairing model; the whole
/// matching is rejected and retried on self-loops or multi-edges.
std::vector<std::pair<int, int>> random_3regular_graph(int n, Rng& rng);

/// Deterministic circuit construction: regeneration from
/// (family, n_qubits, params, seed) is bit-identical.
///
/// Family parameters (defaults in parentheses):
///   Brickwork1D  depth
///   Brickwork2D  depth, rows, cols          [rows*cols == n]
///   HaarPairs    depth
///   QAOA         p, perturb (0.05)          [n even]
///   RFIM         depth, w, dt (0.2), j (1), h0 (1);
///                pairwise (0) selects the brickwork e^{-i dt H_ij} variant
///                with fields h_i ~ U[0, h_max], h_max (0.1)
///   TFIM         depth, dt (0.2), j (1), h0 (1)   [RFIM with w = 0]
///   UCCSD        singles_scale (0.3), doubles_scale (0.05)   [n even]
Circuit generate_circuit(Family family, int n_qubits, const FamilyParams& params,
                         uint64_t seed);

/// Order-sensitive content hash over targets and matrix bit patterns.
uint64_t circuit_hash(const Circuit& c);

std::string circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const std::string& text);

}  // namespace bass
