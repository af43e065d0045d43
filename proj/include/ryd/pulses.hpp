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

// Time-dependent drive model. Units: the peak Rabi frequency Omega sets the
// scale (default 1), times are in 1/Omega.
//
// Conventions (fixed project-wide):
//   Omega_p(t) = |Omega_p(t)| e^{+i phi_p(t)}   couples |1> -> |2>
//   Omega_mu(t) = |Omega_mu(t)| e^{-i phi_mu(t)} couples |2> -> |3>
//   phi_r(t) = phi_mu(t) - phi_p(t)
//   tan(theta) = |Omega_p| / |Omega_mu|, theta in [0, pi/2]

#pragma once

#include <cmath>
#include <utility>
#include <variant>
#include <vector>

#include "ryd/errors.hpp"
#include "ryd/linalg.hpp"

namespace ryd {

// Omega*tau/(2*pi) = cycles, with Omega = 1.
inline double tau_from_cycles(double cycles) { return 2.0 * M_PI * cycles; }

// ---------------------------------------------------------------- phase laws

struct ConstantBoth {
    double phi_p = 0.0;
    double phi_mu = 0.0;
};

// phi_p(t) = phi_mu(t) = rate * t; keeps phi_r identically zero.
struct LinearSync {
    double rate = 0.0;
    double phi_p0 = 0.0;
    double phi_mu0 = 0.0;
};

// phi_p constant; phi_r jumps by `step` at `step_time`.
// Theta(0) = 1: at exactly t = step_time the new phase already applies.
struct StaircaseRelative {
    double step = 0.0;
    double step_time = 0.0;
    double phi_p0 = 0.0;
};

// Linear ramp of one (or both) phases over the window [t0, t1]; constant
// outside (held at `from` before, `to` after).
struct SweepMuOnly {
    double from = 0.0, to = 0.0;
    double t0 = 0.0, t1 = 0.0;
    double phi_p = 0.0;
};
struct SweepPOnly {
    double from = 0.0, to = 0.0;
    double t0 = 0.0, t1 = 0.0;
    double phi_mu = 0.0;
};
struct SweepBoth {
    double from = 0.0, to = 0.0;
    double t0 = 0.0, t1 = 0.0;
};

using PhaseLaw =
    std::variant<ConstantBoth, LinearSync, StaircaseRelative, SweepMuOnly, SweepPOnly, SweepBoth>;

// ------------------------------------------------------------------ schedule

// "sine": Eq.-style |Omega_p| = Omega sin(pi t / 2 tau), |Omega_mu| = Omega |cos(pi t / 2 tau)|.
// "ramp_hold_return": theta ramps 0 -> theta_hold over [0, tau], holds over
// [tau, 2 tau], returns over [2 tau, 3 tau]; amplitudes Omega sin/cos(theta).
enum class AmplitudeShape { Sine, RampHoldReturn };

enum class SweepMode { BothPhases, MuOnly, POnly };

struct PulseSchedule {
    double omega = 1.0;
    double tau = tau_from_cycles(6.0);
    double total_time = 2.0 * tau_from_cycles(6.0);
    PhaseLaw law = ConstantBoth{};
    AmplitudeShape shape = AmplitudeShape::Sine;
    double theta_hold = 0.0;  // RampHoldReturn only

    // (|Omega_p|, |Omega_mu|); OutOfRange outside [0, total_time]
    std::pair<double, double> amplitudes(double t) const;
    // (phi_p, phi_mu)
    std::pair<double, double> phases(double t) const;
    // (dphi_p/dt, dphi_mu/dt); staircase jumps are breakpoints, not rates
    std::pair<double, double> phase_rates(double t) const;
    double mixing_angle(double t) const;  // DegenerateDrive if both amplitudes vanish
    double theta_rate(double t) const;

    Complex omega_p(double t) const;   // |Omega_p| e^{+i phi_p}
    Complex omega_mu(double t) const;  // |Omega_mu| e^{-i phi_mu}

    // interior non-smooth points (kinks and staircase jumps), strictly inside (0, total_time)
    std::vector<double> breakpoints() const;
    std::size_t segment_count() const { return breakpoints().size() + 1; }

    // named protocols
    static PulseSchedule scheme1(double omega, double tau, double rate);  // LinearSync, 2 tau
    static PulseSchedule scheme1(double omega, double tau) { return scheme1(omega, tau, M_PI / tau); }
    static PulseSchedule scheme2(double omega, double tau, double step = M_PI / 2.0);  // staircase at tau
    static PulseSchedule half_pulse(double omega, double tau, double phi_p);  // fringe run, [0, tau]
    // prepare-hold-sweep-return, total 3 tau, sweep 0 -> delta over [tau, 2 tau]
    static PulseSchedule berry_protocol(double omega, double tau, double theta_m, SweepMode mode,
                                        double delta = M_PI);

private:
    void check_time(double t) const;
};

}  // namespace ryd
