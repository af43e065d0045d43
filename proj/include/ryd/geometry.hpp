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

// Geometric-phase machinery over sampled parameter paths R(t) = (theta,
// phi_p, phi_r).
//
// The Berry connection is evaluated in the fixed dark-state gauge of the
// darkstates module. In that gauge, derived symbolically and locked by a
// finite-difference oracle in the tests:
//
//   A_d2 = i<d2|d/dt d2> = [-2 sin^4(th) phi_p' + 2 sin^2 cos^2(th) phi_r'] / N^2
//   A_d1 = i<d1|d/dt d1> = -cos^2(th) phi_r'
//
// Quadrature and the Pancharatnam product both add the endpoint gauge
// closure arg<d(R(0))|d(R(T))> when the end state is parallel to the start
// state; for closed gauge paths the term is identically zero, for protocols
// that end at theta = 0 with swept phases it supplies the physical phase of
// the transported state.

#pragma once

#include <vector>

#include "ryd/darkstates.hpp"
#include "ryd/pulses.hpp"

namespace ryd {

struct ParamPoint {
    double theta = 0.0;
    double phi_p = 0.0;
    double phi_r = 0.0;
    double dtheta = 0.0;
    double dphi_p = 0.0;
    double dphi_r = 0.0;
};

// Piecewise-smooth sampled path. Boundary samples are duplicated at segment
// joints so one-sided limits of phases and rates are both represented;
// segment k spans indices [seg_begin[k], seg_begin[k+1]) with its last
// sample at seg_begin[k+1]-1.
struct ParamPath {
    std::vector<double> times;
    std::vector<ParamPoint> points;
    std::vector<std::size_t> seg_begin;  // one entry per segment
    bool closed = false;

    std::size_t segments() const { return seg_begin.size(); }
    std::pair<std::size_t, std::size_t> segment_range(std::size_t k) const;
};

// Uniform sampling per smooth segment; samples_per_segment is rounded up to
// a multiple of 4 (Simpson + halving check need even interval counts).
ParamPath path_from_schedule(const PulseSchedule& s, std::size_t samples_per_segment);

enum class PhaseMethod { Quadrature, Pancharatnam, ClosedForm };

struct PhaseResult {
    double value = 0.0;  // principal value in (-pi, pi]
    int winding = 0;
    PhaseMethod method = PhaseMethod::Quadrature;

    double raw() const { return value + 2.0 * M_PI * winding; }
    static PhaseResult from_raw(double raw, PhaseMethod m);
};

double berry_connection_d2(const ParamPoint& p);
double berry_connection_d1(const ParamPoint& p);

// Composite Simpson over each smooth segment plus the endpoint closure term.
// NotConverged if dropping to half resolution moves the integral by more
// than 1e-6 rad.
PhaseResult geometric_phase_quadrature(const ParamPath& path, DarkKind which);

// -[sum_k arg<d_k|d_{k+1}> + arg<d_N|d_0>]; gauge-insensitive by construction.
PhaseResult pancharatnam_phase(const ParamPath& path, DarkKind which);

enum class ClosedFormKind { Phi1, Phi2, Phi2Prime, Phi2DoublePrime };

// Phi1, Phi2, Phi2DoublePrime: hold-at-theta_m phase sweeps, integrand value
// at theta_m times delta_phi (positive integrand convention):
//   Phi1            = sin^2(th) * dphi
//   Phi2            = 2 sin^2 cos^2 / N^2 * dphi
//   Phi2DoublePrime = 2 sin^2 / N^2 * dphi
// Phi2Prime: the synchronized-phase loop (dphi_p/dtheta = 2) up to turning
// angle theta_m and back, -8 int_0^theta_m sin^4/N^2 dtheta; delta_phi is
// ignored for this kind.
PhaseResult closed_form_phase(ClosedFormKind kind, double theta_m, double delta_phi);

// -int E(t) dt by composite Simpson (trapezoid fallback on a trailing odd
// interval); times must be uniformly spaced.
PhaseResult dynamical_phase(const std::vector<double>& times, const std::vector<double>& energy);

// int sin^4(theta(t)) * v33 dt over the schedule (the dressed-phase
// estimator for the weak-V33 regime)
double v33_dressing_estimate(const PulseSchedule& s, double v33, std::size_t samples_per_segment = 512);

struct UnwrappedPhase {
    std::vector<double> values;
    std::vector<bool> reliable;  // false where |amplitude| < threshold
};

// arg of states[k][component], unwrapped by nearest-branch continuation.
// VanishingAmplitude if the first or last sample is below threshold.
UnwrappedPhase extract_phase(const std::vector<CVector>& states, std::size_t component,
                             double threshold = 1e-6);

}  // namespace ryd
