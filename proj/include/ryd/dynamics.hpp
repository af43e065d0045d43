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

// Time propagation: fixed-step RK4 for i dpsi/dt = H(t) psi and for the
// Lindblad master equation on the density matrix. Deterministic: identical
// inputs and step counts give bit-identical trajectories on one platform.
// Callers are responsible for choosing step counts that put schedule
// breakpoints (t = tau etc.) on integration nodes; steps_for_schedule does
// that arithmetic.

#pragma once

#include <functional>
#include <vector>

#include "ryd/hamiltonian.hpp"
#include "ryd/linalg.hpp"
#include "ryd/pulses.hpp"

namespace ryd {

using HamiltonianFn = std::function<CMatrix(double)>;

struct Trajectory {
    std::vector<double> times;    // snapshot times (stride-decimated; first and last always kept)
    std::vector<CVector> states;  // snapshots, same indexing as times
    CVector final_state;
    double max_norm_drift = 0.0;  // max_t | ||psi|| - 1 |
    std::size_t steps = 0;
};

struct RhoTrajectory {
    std::vector<double> times;
    std::vector<CMatrix> states;
    CMatrix final_rho;
    double max_trace_drift = 0.0;  // max_t | tr rho - 1 |
    double min_eigenvalue = 0.0;   // of the final density matrix
    std::size_t steps = 0;
};

// total steps = steps_per_tau * (total_time / tau), so every multiple of tau
// is a node
std::size_t steps_for_schedule(const PulseSchedule& s, std::size_t steps_per_tau);

// Classic RK4. verify_convergence reruns at doubled steps and throws
// StepTooCoarse if the final states differ by more than 1e-8 in norm.
Trajectory propagate_schrodinger(const HamiltonianFn& h_of_t, const CVector& psi0, double total_time,
                                 std::size_t steps, std::size_t stride = 16,
                                 bool verify_convergence = false);

// RK4 on the matrix ODE with Hermitian symmetrization each step.
// PositivityViolation if the final density matrix has an eigenvalue below
// -1e-6 (integration failure, not physics).
RhoTrajectory propagate_lindblad(const HamiltonianFn& h_of_t, const std::vector<CMatrix>& collapse_ops,
                                 const CMatrix& rho0, double total_time, std::size_t steps,
                                 std::size_t stride = 16, bool verify_convergence = false);

// Per-atom spontaneous-emission collapse operators on the 16-dim space:
// sqrt(gamma2)|1><2| and sqrt(gamma3)|2><3| embedded on each atom.
// Zero-rate channels are dropped.
std::vector<CMatrix> decay_collapse_ops(double gamma2, double gamma3);

// max over sampled t and coupled excited states e of
// |<e| dH/dt |g>| / |E_e - E_g|^2, tracking g from track0 by overlap
// continuity. GapClosure if a coupled state comes within 1e-9 of the
// tracked level.
double adiabaticity_ratio(const HamiltonianFn& h_of_t, const CVector& track0, double total_time,
                          std::size_t samples);

}  // namespace ryd
