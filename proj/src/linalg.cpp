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

#include "ryd/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ryd {

CVector CVector::basis(std::size_t dim, std::size_t k) {
    if (k >= dim) throw DimMismatch("basis index out of range");
    CVector v(dim);
    v[k] = 1.0;
    return v;
}

double CVector::norm_sq() const {
    double s = 0.0;
    for (const auto& e : entries_) s += std::norm(e);
    return s;
}

double CVector::norm() const { return std::sqrt(norm_sq()); }

void CVector::normalize() {
    const double n = norm();
    if (n == 0.0) throw Error("cannot normalize zero vector");
    for (auto& e : entries_) e /= n;
}

bool CVector::all_finite() const {
    for (const auto& e : entries_) {
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
    }
    return true;
}

Complex CVector::dot(const CVector& other) const {
    if (dim() != other.dim()) throw DimMismatch("dot: dimension mismatch");
    Complex s = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) s += std::conj(entries_[i]) * other.entries_[i];
    return s;
}

CVector& CVector::operator+=(const CVector& o) {
    if (dim() != o.dim()) throw DimMismatch("vector add: dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

CVector& CVector::operator-=(const CVector& o) {
    if (dim() != o.dim()) throw DimMismatch("vector sub: dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

CVector& CVector::operator*=(Complex s) {
    for (auto& e : entries_) e *= s;
    return *this;
}

void CVector::add_scaled(const CVector& o, Complex s) {
    if (dim() != o.dim()) throw DimMismatch("add_scaled: dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i) entries_[i] += s * o.entries_[i];
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix a(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) a(j, i) = std::conj((*this)(i, j));
    return a;
}

Complex CMatrix::trace() const {
    if (rows_ != cols_) throw DimMismatch("trace: matrix not square");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& e : entries_) s += std::norm(e);
    return std::sqrt(s);
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& e : entries_) m = std::max(m, std::abs(e));
    return m;
}

bool CMatrix::is_hermitian(double tol) const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

bool CMatrix::all_finite() const {
    for (const auto& e : entries_) {
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
    }
    return true;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimMismatch("matrix add: shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimMismatch("matrix sub: shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

CMatrix& CMatrix::operator*=(Complex s) {
    for (auto& e : entries_) e *= s;
    return *this;
}

void CMatrix::add_scaled(const CMatrix& o, Complex s) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimMismatch("add_scaled: shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += s * o.entries_[i];
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows(), b.cols());
    matmul_into(out, a, b);
    return out;
}

void matmul_into(CMatrix& out, const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw DimMismatch("matmul: inner dimension mismatch");
    if (out.rows() != a.rows() || out.cols() != b.cols()) out = CMatrix(a.rows(), b.cols());
    const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) out(i, j) = 0.0;
        for (std::size_t p = 0; p < k; ++p) {
            const Complex aip = a(i, p);
            if (aip == Complex(0.0)) continue;
            for (std::size_t j = 0; j < m; ++j) out(i, j) += aip * b(p, j);
        }
    }
}

CVector matvec(const CMatrix& m, const CVector& v) {
    if (m.cols() != v.dim()) throw DimMismatch("matvec: dimension mismatch");
    CVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex(0.0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

CMatrix outer(const CVector& a, const CVector& b) {
    CMatrix out(a.dim(), b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) out(i, j) = a[i] * std::conj(b[j]);
    return out;
}

namespace {

double offdiag_frobenius(const CMatrix& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

}  // namespace

EigResult hermitian_eig(const CMatrix& m, double herm_tol) {
    if (m.rows() != m.cols()) throw DimMismatch("hermitian_eig: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0 || n > 64) throw Error("hermitian_eig: dimension must be in [1, 64]");
    if (!m.all_finite()) throw Error("hermitian_eig: non-finite entries");
    if (!m.is_hermitian(herm_tol)) throw NotHermitian("hermitian_eig: matrix not Hermitian within tolerance");

    CMatrix a = m;
    // exact symmetrization so rotations see a_pq = conj(a_qp)
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
        a(i, i) = Complex(a(i, i).real(), 0.0);
    }
    CMatrix v = CMatrix::identity(n);

    const double scale = std::max(a.frobenius_norm(), 1e-300);
    const double tol = 1e-13 * scale;
    const int max_sweeps = 100;

    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        if (offdiag_frobenius(a) < tol) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double g = std::abs(apq);
                if (g <= tol / double(n)) continue;
                // unitary 2x2 rotation zeroing a_pq:
                // tan(2*theta) = 2|a_pq| / (a_pp - a_qq), phase from arg(a_pq)
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const Complex phase = apq / g;  // e^{i phi}
                const double diff = app - aqq;
                double t;  // tan(theta), smaller-angle root
                if (diff == 0.0) {
                    t = 1.0;
                } else {
                    const double inv2 = diff / (2.0 * g);
                    t = (inv2 >= 0.0 ? 1.0 : -1.0) / (std::abs(inv2) + std::sqrt(1.0 + inv2 * inv2));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex spe = s * phase;             // s * e^{i phi}
                const Complex spc = s * std::conj(phase);  // s * e^{-i phi}

                // columns: A <- A U with U_pp = c, U_pq = -s e^{i phi}, U_qp = s e^{-i phi}, U_qq = c
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp + spc * akq;
                    a(k, q) = -spe * akp + c * akq;
                }
                // rows: A <- U^dagger A
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk + spe * aqk;
                    a(q, k) = -spc * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = Complex(a(p, p).real(), 0.0);
                a(q, q) = Complex(a(q, q).real(), 0.0);
                // accumulate eigenvectors
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp + spc * vkq;
                    v(k, q) = -spe * vkp + c * vkq;
                }
            }
        }
    }
    if (sweep == max_sweeps && offdiag_frobenius(a) >= tol)
        throw NoConvergence("hermitian_eig: Jacobi sweep cap exceeded");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigResult res;
    res.eigenvalues.reserve(n);
    res.eigenvectors.reserve(n);
    for (std::size_t k : order) {
        res.eigenvalues.push_back(a(k, k).real());
        CVector vec(n);
        for (std::size_t i = 0; i < n; ++i) vec[i] = v(i, k);
        res.eigenvectors.push_back(std::move(vec));
    }
    return res;
}

}  // namespace ryd
