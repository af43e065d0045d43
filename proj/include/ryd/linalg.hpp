// Copyright 2026 The rydsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Minimal dense complex linear algebra: vectors, matrices, and a cyclic
// Jacobi Hermitian eigensolver. Sized for this problem (dim <= 64); no
// attempt at BLAS-level performance.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "ryd/errors.hpp"

namespace ryd {

using Complex = std::complex<double>;

class CVector {
public:
    CVector() = default;
    explicit CVector(std::size_t dim) : entries_(dim) {}

    static CVector basis(std::size_t dim, std::size_t k);

    std::size_t dim() const { return entries_.size(); }

    Complex& operator[](std::size_t i) { return entries_[i]; }
    const Complex& operator[](std::size_t i) const { return entries_[i]; }

    double norm() const;
    double norm_sq() const;
    void normalize();  // throws DegenerateDrive-free Error on zero vector
    bool all_finite() const;

    // <this|other>, conjugating this vector's entries.
    Complex dot(const CVector& other) const;

    CVector& operator+=(const CVector& o);
    CVector& operator-=(const CVector& o);
    CVector& operator*=(Complex s);
    // this += s * o  (hot-loop helper, avoids temporaries)
    void add_scaled(const CVector& o, Complex s);

    friend CVector operator+(CVector a, const CVector& b) { return a += b; }
    friend CVector operator-(CVector a, const CVector& b) { return a -= b; }
    friend CVector operator*(Complex s, CVector v) { return v *= s; }

private:
    std::vector<Complex> entries_;
};

class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    CMatrix adjoint() const;
    Complex trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    // max element of |M - M^dagger| below tol
    bool is_hermitian(double tol) const;
    bool all_finite() const;

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(Complex s);
    void add_scaled(const CMatrix& o, Complex s);

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(Complex s, CMatrix m) { return m *= s; }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Complex> entries_;
};

CVector matvec(const CMatrix& m, const CVector& v);

// out = a*x + b*y, all dims equal (RK4 combiner)
void matmul_into(CMatrix& out, const CMatrix& a, const CMatrix& b);

CMatrix kron(const CMatrix& a, const CMatrix& b);

CMatrix outer(const CVector& a, const CVector& b);  // |a><b|

struct EigResult {
    std::vector<double> eigenvalues;   // ascending
    std::vector<CVector> eigenvectors; // orthonormal, eigenvectors[k] pairs with eigenvalues[k]
};

// Cyclic complex Jacobi. Off-diagonal Frobenius tolerance 1e-13 relative to
// the matrix scale, 100-sweep cap. Degenerate clusters come back as an
// arbitrary orthonormal basis of the cluster subspace.
EigResult hermitian_eig(const CMatrix& m, double herm_tol = 1e-9);

}  // namespace ryd
