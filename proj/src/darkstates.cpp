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

#include "ryd/darkstates.hpp"

#include <cmath>

namespace ryd {

DarkState dark_d1(double theta, double phi_r) {
    const double c = std::cos(theta), s = std::sin(theta);
    CVector v(basis::kDim1);
    v[1] = c * std::exp(Complex(0.0, phi_r));
    v[3] = -s;
    return DarkState{DarkKind::D1, theta, 0.0, phi_r, std::move(v)};
}

DarkState dark_d2(double theta, double phi_p, double phi_mu) {
    const double c = std::cos(theta), s = std::sin(theta);
    const double c2 = c * c, s2 = s * s;
    const double norm = std::sqrt(c2 * c2 + 2.0 * s2 * s2);
    const double phi_r = phi_mu - phi_p;
    const BasisMap& b = symmetric_basis();
    CVector v(basis::kDim2);
    v.add_scaled(b.phi(1), (c2 - s2) / norm);
    v.add_scaled(b.phi(4), s2 * std::exp(Complex(0.0, 2.0 * phi_p)) / norm);
    v.add_scaled(b.phi(3), -std::sqrt(2.0) * s * c * std::exp(Complex(0.0, -phi_r)) / norm);
    return DarkState{DarkKind::D2, theta, phi_p, phi_mu, std::move(v)};
}

DarkState dark_d2prime(double theta, double phi_r) {
    const double c = std::cos(theta), s = std::sin(theta);
    const BasisMap& b = symmetric_basis();
    CVector v(basis::kDim2);
    v.add_scaled(b.phi(1), c * c * std::exp(Complex(0.0, 2.0 * phi_r)));
    v.add_scaled(b.phi(6), s * s);
    v.add_scaled(b.phi(3), -std::sqrt(2.0) * s * c * std::exp(Complex(0.0, phi_r)));
    return DarkState{DarkKind::D2Prime, theta, 0.0, phi_r, std::move(v)};
}

double dark_residual(const DarkState& d, const CMatrix& h) {
    if (h.cols() != d.vector.dim()) throw DimMismatch("dark_residual: dimension mismatch");
    return matvec(h, d.vector).norm();
}

int dark_space_dim(const CMatrix& h, double tol) {
    const EigResult eig = hermitian_eig(h);
    int count = 0;
    for (double lambda : eig.eigenvalues)
        if (std::abs(lambda) < tol) ++count;
    return count;
}

}  // namespace ryd
