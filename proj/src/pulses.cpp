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

#include "ryd/pulses.hpp"

#include <algorithm>
#include <cmath>

namespace ryd {

namespace {

constexpr double kTimeSlack = 1e-9;

double ramp(double t, double from, double to, double t0, double t1) {
    if (t <= t0) return from;
    if (t >= t1) return to;
    return from + (to - from) * (t - t0) / (t1 - t0);
}

double ramp_rate(double t, double from, double to, double t0, double t1) {
    if (t < t0 || t > t1) return 0.0;
    return (to - from) / (t1 - t0);
}

}  // namespace

void PulseSchedule::check_time(double t) const {
    if (t < -kTimeSlack || t > total_time + kTimeSlack)
        throw OutOfRange("schedule evaluated outside [0, total_time]");
}

std::pair<double, double> PulseSchedule::amplitudes(double t) const {
    check_time(t);
    switch (shape) {
        case AmplitudeShape::Sine: {
            const double x = M_PI * t / (2.0 * tau);
            return {omega * std::sin(x), omega * std::abs(std::cos(x))};
        }
        case AmplitudeShape::RampHoldReturn: {
            double th;
            if (t <= tau)
                th = theta_hold * t / tau;
            else if (t <= 2.0 * tau)
                th = theta_hold;
            else
                th = theta_hold * (3.0 * tau - t) / tau;
            th = std::clamp(th, 0.0, M_PI / 2.0);
            return {omega * std::sin(th), omega * std::cos(th)};
        }
    }
    throw Error("unreachable amplitude shape");
}

double PulseSchedule::theta_rate(double t) const {
    check_time(t);
    switch (shape) {
        case AmplitudeShape::Sine:
            return (t <= tau) ? M_PI / (2.0 * tau) : -M_PI / (2.0 * tau);
        case AmplitudeShape::RampHoldReturn:
            if (t < tau) return theta_hold / tau;
            if (t <= 2.0 * tau) return 0.0;
            return -theta_hold / tau;
    }
    throw Error("unreachable amplitude shape");
}

std::pair<double, double> PulseSchedule::phases(double t) const {
    check_time(t);
    return std::visit(
        [&](const auto& l) -> std::pair<double, double> {
            using T = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<T, ConstantBoth>) {
                return {l.phi_p, l.phi_mu};
            } else if constexpr (std::is_same_v<T, LinearSync>) {
                return {l.phi_p0 + l.rate * t, l.phi_mu0 + l.rate * t};
            } else if constexpr (std::is_same_v<T, StaircaseRelative>) {
                const double step = (t >= l.step_time) ? l.step : 0.0;  // right-continuous
                return {l.phi_p0, l.phi_p0 + step};
            } else if constexpr (std::is_same_v<T, SweepMuOnly>) {
                return {l.phi_p, ramp(t, l.from, l.to, l.t0, l.t1)};
            } else if constexpr (std::is_same_v<T, SweepPOnly>) {
                return {ramp(t, l.from, l.to, l.t0, l.t1), l.phi_mu};
            } else {
                const double v = ramp(t, l.from, l.to, l.t0, l.t1);
                return {v, v};
            }
        },
        law);
}

std::pair<double, double> PulseSchedule::phase_rates(double t) const {
    check_time(t);
    return std::visit(
        [&](const auto& l) -> std::pair<double, double> {
            using T = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<T, ConstantBoth>) {
                return {0.0, 0.0};
            } else if constexpr (std::is_same_v<T, LinearSync>) {
                return {l.rate, l.rate};
            } else if constexpr (std::is_same_v<T, StaircaseRelative>) {
                return {0.0, 0.0};
            } else if constexpr (std::is_same_v<T, SweepMuOnly>) {
                return {0.0, ramp_rate(t, l.from, l.to, l.t0, l.t1)};
            } else if constexpr (std::is_same_v<T, SweepPOnly>) {
                return {ramp_rate(t, l.from, l.to, l.t0, l.t1), 0.0};
            } else {
                const double r = ramp_rate(t, l.from, l.to, l.t0, l.t1);
                return {r, r};
            }
        },
        law);
}

double PulseSchedule::mixing_angle(double t) const {
    const auto [ap, am] = amplitudes(t);
    if (ap == 0.0 && am == 0.0) throw DegenerateDrive("mixing angle undefined: both amplitudes zero");
    return std::clamp(std::atan2(ap, am), 0.0, M_PI / 2.0);
}

Complex PulseSchedule::omega_p(double t) const {
    const auto [ap, am] = amplitudes(t);
    (void)am;
    const auto [pp, pm] = phases(t);
    (void)pm;
    return ap * std::exp(Complex(0.0, pp));
}

Complex PulseSchedule::omega_mu(double t) const {
    const auto [ap, am] = amplitudes(t);
    (void)ap;
    const auto [pp, pm] = phases(t);
    (void)pp;
    return am * std::exp(Complex(0.0, -pm));
}

std::vector<double> PulseSchedule::breakpoints() const {
    std::vector<double> bp;
    if (shape == AmplitudeShape::Sine) {
        if (total_time > tau + kTimeSlack) bp.push_back(tau);  // |cos| kink
    } else {
        bp.push_back(tau);
        bp.push_back(2.0 * tau);
    }
    std::visit(
        [&](const auto& l) {
            using T = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<T, StaircaseRelative>) {
                bp.push_back(l.step_time);
            } else if constexpr (std::is_same_v<T, SweepMuOnly> || std::is_same_v<T, SweepPOnly> ||
                                 std::is_same_v<T, SweepBoth>) {
                bp.push_back(l.t0);
                bp.push_back(l.t1);
            }
        },
        law);
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end(),
                         [](double a, double b) { return std::abs(a - b) < kTimeSlack; }),
             bp.end());
    std::erase_if(bp, [&](double t) { return t < kTimeSlack || t > total_time - kTimeSlack; });
    return bp;
}

PulseSchedule PulseSchedule::scheme1(double omega, double tau, double rate) {
    PulseSchedule s;
    s.omega = omega;
    s.tau = tau;
    s.total_time = 2.0 * tau;
    s.law = LinearSync{rate};
    return s;
}

PulseSchedule PulseSchedule::scheme2(double omega, double tau, double step) {
    PulseSchedule s;
    s.omega = omega;
    s.tau = tau;
    s.total_time = 2.0 * tau;
    s.law = StaircaseRelative{step, tau};
    return s;
}

PulseSchedule PulseSchedule::half_pulse(double omega, double tau, double phi_p) {
    PulseSchedule s;
    s.omega = omega;
    s.tau = tau;
    s.total_time = tau;
    s.law = ConstantBoth{phi_p, 0.0};
    return s;
}

PulseSchedule PulseSchedule::berry_protocol(double omega, double tau, double theta_m, SweepMode mode,
                                            double delta) {
    PulseSchedule s;
    s.omega = omega;
    s.tau = tau;
    s.total_time = 3.0 * tau;
    s.shape = AmplitudeShape::RampHoldReturn;
    s.theta_hold = theta_m;
    switch (mode) {
        case SweepMode::BothPhases:
            s.law = SweepBoth{0.0, delta, tau, 2.0 * tau};
            break;
        case SweepMode::MuOnly:
            s.law = SweepMuOnly{0.0, delta, tau, 2.0 * tau, 0.0};
            break;
        case SweepMode::POnly:
            s.law = SweepPOnly{0.0, delta, tau, 2.0 * tau, 0.0};
            break;
    }
    return s;
}

}  // namespace ryd
