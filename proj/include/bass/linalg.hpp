// Copyright 2026 The BASS Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "bass/common.hpp"

namespace bass {

/// Fixed-size dense complex matrix, row-major.
template <int N>
struct Mat {
    std::array<cplx, N * N> a{};

    cplx& operator()(int r, int c) { return a[r * N + c]; }
    const cplx& operator()(int r, int c) const { return a[r * N + c]; }

    static Mat identity() {
        Mat m;
        for (int i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    Mat adjoint() const {
        Mat m;
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c) m(r, c) = std::conj((*this)(c, r));
        return m;
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        Mat m;
        for (int r = 0; r < N; ++r)
            for (int k = 0; k < N; ++k) {
                cplx v = x(r, k);
                if (v == cplx(0.0)) continue;
                for (int c = 0; c < N; ++c) m(r, c) += v * y(k, c);
            }
        return m;
    }
};

using Mat2 = Mat<2>;
using Mat4 = Mat<4>;

/// Kronecker product with the left factor on the high bit of the block index.
inline Mat4 kron(const Mat2& x, const Mat2& y) {
    Mat4 m;
    for (int r1 = 0; r1 < 2; ++r1)
        for (int c1 = 0; c1 < 2; ++c1)
            for (int r2 = 0; r2 < 2; ++r2)
                for (int c2 = 0; c2 < 2; ++c2)
                    m(r1 * 2 + r2, c1 * 2 + c2) = x(r1, c1) * y(r2, c2);
    return m;
}

template <int N>
double max_offdiag(const Mat<N>& m) {
    double v = 0.0;
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c)
            if (r != c) v = std::max(v, std::abs(m(r, c)));
    return v;
}

template <int N>
double unitarity_defect(const Mat<N>& m) {
    Mat<N> p = m.adjoint() * m;
    double v = 0.0;
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c)
            v = std::max(v, std::abs(p(r, c) - (r == c ? cplx(1.0) : cplx(0.0))));
    return v;
}

template <int N>
bool is_identity(const Mat<N>& m, double tol = 0.0) {
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) {
            cplx want = (r == c) ? cplx(1.0) : cplx(0.0);
            if (std::abs(m(r, c) - want) > tol) return false;
        }
    return true;
}

// Cyclic-Jacobi eigendecomposition of an n-by-n complex Hermitian matrix
// stored row-major in `a` (destroyed). On return `vecs` holds eigenvectors in
// columns and `vals` the matching eigenvalues; neither is sorted. Each pivot
// uses the closed-form 2x2 Hermitian rotation, so the off-diagonal entry is
// annihilated exactly per step.
void jacobi_hermitian(std::vector<cplx>& a, int n, std::vector<cplx>& vecs,
                      std::vector<double>& vals, double off_tol = 1e-13,
                      int max_sweeps = 50);

}  // namespace bass
