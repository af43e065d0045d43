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

#include "ryd/hamiltonian.hpp"

#include <cmath>

namespace ryd {

using basis::kDim1;
using basis::kDim2;
using basis::product_index;

BasisMap::BasisMap() : isometry_(kDim2, 6) {
    const double r = 1.0 / std::sqrt(2.0);
    states_.assign(6, CVector(kDim2));
    states_[0][product_index(1, 1)] = 1.0;
    states_[1][product_index(1, 2)] = r;
    states_[1][product_index(2, 1)] = r;
    states_[2][product_index(1, 3)] = r;
    states_[2][product_index(3, 1)] = r;
    states_[3][product_index(2, 2)] = 1.0;
    states_[4][product_index(2, 3)] = r;
    states_[4][product_index(3, 2)] = r;
    states_[5][product_index(3, 3)] = 1.0;
    for (std::size_t j = 0; j < 6; ++j)
        for (std::size_t i = 0; i < kDim2; ++i) isometry_(i, j) = states_[j][i];
}

const CVector& BasisMap::phi(std::size_t j) const {
    if (j < 1 || j > 6) throw DimMismatch("symmetric basis index must be 1..6");
    return states_[j - 1];
}

const BasisMap& symmetric_basis() {
    static const BasisMap map;
    return map;
}

CMatrix single_atom_h(Complex omega_p, Complex omega_mu) {
    CMatrix h(kDim1, kDim1);
    h(2, 1) = omega_p;
    h(1, 2) = std::conj(omega_p);
    h(3, 2) = omega_mu;
    h(2, 3) = std::conj(omega_mu);
    return h;
}

CMatrix two_atom_h(Complex omega_p, Complex omega_mu, const SystemParams& p) {
    const CMatrix h1 = single_atom_h(omega_p, omega_mu);
    const CMatrix eye = CMatrix::identity(kDim1);
    CMatrix h = kron(h1, eye);
    h += kron(eye, h1);
    h(product_index(3, 3), product_index(3, 3)) += p.v33;
    h(product_index(2, 2), product_index(2, 2)) += p.v22;
    h(product_index(2, 3), product_index(3, 2)) += p.v23;
    h(product_index(3, 2), product_index(2, 3)) += p.v23;
    return h;
}

CMatrix project_symmetric(const CMatrix& h16, const BasisMap& b) {
    if (h16.rows() != kDim2 || h16.cols() != kDim2)
        throw DimMismatch("project_symmetric expects a 16x16 matrix");
    const CMatrix& p = b.isometry();
    return p.adjoint() * h16 * p;
}

CMatrix schedule_h16(const PulseSchedule& s, const SystemParams& p, double t) {
    return two_atom_h(s.omega_p(t), s.omega_mu(t), p);
}

}  // namespace ryd
