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

// Analytic dark states in a fixed gauge (the literal published expressions;
// no extra global phase). The two-atom states are emitted in the 16-dim
// product space, zero outside their symmetric components.
//
//   d1(theta, phi_r)        = cos(theta) e^{i phi_r} |1> - sin(theta) |3>
//   d2(theta, phi_p, phi_mu) = N^-1 [ (cos^2 - sin^2) phi1
//                                     + sin^2 e^{i 2 phi_p} phi4
//                                     - sqrt2 sin cos e^{-i phi_r} phi3 ],
//                              N = sqrt(cos^4 + 2 sin^4)
//   d2' (theta, phi_r)       = cos^2 e^{i 2 phi_r} phi1 + sin^2 phi6
//                              - sqrt2 sin cos e^{i phi_r} phi3  (= d1 x d1)
//
// d2 is annihilated by the two-atom Hamiltonian whenever V22 = 0 (any V23,
// V33). d2' is annihilated whenever V33 = 0 — for ANY V22 and V23: it has
// support only on levels {1,3}, so the |22><22| and exchange terms act as
// zero on it.

#pragma once

#include "ryd/hamiltonian.hpp"
#include "ryd/linalg.hpp"

namespace ryd {

enum class DarkKind { D1, D2, D2Prime };

struct DarkState {
    DarkKind kind;
    double theta = 0.0;
    double phi_p = 0.0;
    double phi_mu = 0.0;  // for D1/D2Prime: phi_p = 0 and phi_mu carries phi_r
    CVector vector;       // 4-dim for D1, 16-dim otherwise
};

DarkState dark_d1(double theta, double phi_r);
DarkState dark_d2(double theta, double phi_p, double phi_mu);
DarkState dark_d2prime(double theta, double phi_r);

// || H vector ||
double dark_residual(const DarkState& d, const CMatrix& h);

// number of eigenvalues with |lambda| < tol
int dark_space_dim(const CMatrix& h, double tol);

}  // namespace ryd
