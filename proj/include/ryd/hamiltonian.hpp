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

// Single- and two-atom Hamiltonians on levels {0,1,2,3} per atom.
// The 16-dim product space (index 4*a + b) is the canonical simulation
// space; the 6-dim symmetric two-excitation basis is a derived view.
// All energies are in units of the peak Rabi frequency, hbar = 1.

#pragma once

#include "ryd/linalg.hpp"
#include "ryd/pulses.hpp"

namespace ryd {

struct SystemParams {
    double v22 = 0.0;     // vdW shift, both atoms in |2>
    double v23 = 1.1;     // exchange dipole-dipole strength
    double v33 = 0.9;     // vdW shift, both atoms in |3>
    double gamma2 = 0.0;  // decay |2> -> |1>
    double gamma3 = 0.0;  // decay |3> -> |2>

    void validate() const {
        if (gamma2 < 0.0 || gamma3 < 0.0) throw Error("decay rates must be non-negative");
    }
};

namespace basis {

constexpr std::size_t kLevels = 4;
constexpr std::size_t kDim1 = 4;
constexpr std::size_t kDim2 = 16;

constexpr std::size_t product_index(std::size_t a, std::size_t b) { return kLevels * a + b; }

}  // namespace basis

// The six symmetric states |phi_1..6> as vectors in the 16-dim product space:
//   phi1 = |11>, phi2 = (|12>+|21>)/sqrt2, phi3 = (|13>+|31>)/sqrt2,
//   phi4 = |22>, phi5 = (|23>+|32>)/sqrt2, phi6 = |33>
class BasisMap {
public:
    BasisMap();
    // j in 1..6
    const CVector& phi(std::size_t j) const;
    // 16x6 isometry P with columns phi_1..phi_6
    const CMatrix& isometry() const { return isometry_; }

private:
    std::vector<CVector> states_;
    CMatrix isometry_;
};

const BasisMap& symmetric_basis();

// H_i = Omega_p |2><1| + Omega_mu |3><2| + h.c.; level |0> stays uncoupled.
CMatrix single_atom_h(Complex omega_p, Complex omega_mu);

// H1 x I + I x H2 + V33 |33><33| + V22 |22><22| + V23 (|23><32| + |32><23|)
CMatrix two_atom_h(Complex omega_p, Complex omega_mu, const SystemParams& p);

// P^dagger H P restricted to the symmetric basis (6x6)
CMatrix project_symmetric(const CMatrix& h16, const BasisMap& b);

// H(t) of a driven atom pair under the given schedule
CMatrix schedule_h16(const PulseSchedule& s, const SystemParams& p, double t);

}  // namespace ryd
