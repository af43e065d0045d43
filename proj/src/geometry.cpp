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

#include "ryd/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace ryd {

namespace {

double norm_sq_d2(double theta) {
    const double c2 = std::cos(theta) * std::cos(theta);
    const double s2 = std::sin(theta) * std::sin(theta);
    return c2 * c2 + 2.0 * s2 * s2;
}

CVector dark_vector(DarkKind which, const ParamPoint& p) {
    switch (which) {
        case DarkKind::D1:
            return dark_d1(p.theta, p.phi_r).vector;
        case DarkKind::D2:
            return dark_d2(p.theta, p.phi_p, p.phi_r + p.phi_p).vector;
        case DarkKind::D2Prime:
            return dark_d2prime(p.theta, p.phi_r).vector;
    }
    throw Error("unreachable dark kind");
}

double connection(DarkKind which, const ParamPoint& p) {
    switch (which) {
        case DarkKind::D1:
            return berry_connection_d1(p);
        case DarkKind::D2:
            return berry_connection_d2(p);
        case DarkKind::D2Prime:
            // d2' = d1 x d1, so twice the single-atom connection
            return 2.0 * berry_connection_d1(p);
    }
    throw Error("unreachable dark kind");
}

// composite Simpson on a uniform inclusive sample range, optionally using
// every `skip`-th sample
double simpson(const std::vector<double>& ts, const std::vector<double>& fs, std::size_t first,
               std::size_t last, std::size_t skip = 1) {
    const std::size_t n = (last - first) / skip;  // interval count
    if (n == 0) return 0.0;
    const double h = (ts[last] - ts[first]) / double(n);
    if (n % 2 != 0) {  // trapezoid fallback on the trailing interval
        double s = 0.0;
        if (n > 1) s = simpson(ts, fs, first, last - skip, skip);
        return s + 0.5 * h * (fs[last - skip] + fs[last]);
    }
    double s = fs[first] + fs[last];
    for (std::size_t i = 1; i < n; ++i) s += fs[first + i * skip] * ((i % 2 == 1) ? 4.0 : 2.0);
    return s * h / 3.0;
}

double quadrature_pass(const ParamPath& path, DarkKind which, std::size_t skip) {
    std::vector<double> fs(path.points.size());
    for (std::size_t i = 0; i < path.points.size(); ++i) fs[i] = connection(which, path.points[i]);
    double total = 0.0;
    for (std::size_t k = 0; k < path.segments(); ++k) {
        const auto [a, b] = path.segment_range(k);
        total += simpson(path.times, fs, a, b - 1, skip);
    }
    return total;
}

// arg<d(R_0)|d(R_T)> when the endpoints are parallel states; 0 otherwise
double closure_term(const ParamPath& path, DarkKind which) {
    const Complex ov = dark_vector(which, path.points.front()).dot(dark_vector(which, path.points.back()));
    if (std::abs(ov) < 1.0 - 1e-9) return 0.0;  // genuinely open path: fixed-gauge value only
    return std::arg(ov);
}

}  // namespace

std::pair<std::size_t, std::size_t> ParamPath::segment_range(std::size_t k) const {
    const std::size_t a = seg_begin[k];
    const std::size_t b = (k + 1 < seg_begin.size()) ? seg_begin[k + 1] : points.size();
    return {a, b};
}

ParamPath path_from_schedule(const PulseSchedule& s, std::size_t samples_per_segment) {
    std::size_t n = std::max<std::size_t>(samples_per_segment, 4);
    n = (n + 3) / 4 * 4;

    std::vector<double> bounds{0.0};
    for (double b : s.breakpoints()) bounds.push_back(b);
    bounds.push_back(s.total_time);

    ParamPath path;
    for (std::size_t seg = 0; seg + 1 < bounds.size(); ++seg) {
        const double a = bounds[seg], b = bounds[seg + 1];
        const double nudge = (b - a) * 1e-9;
        path.seg_begin.push_back(path.points.size());
        for (std::size_t i = 0; i <= n; ++i) {
            const double t = a + (b - a) * double(i) / double(n);
            // phases and rates are one-sided at joints; nudge into the segment
            double t_side = t;
            if (i == 0 && seg > 0) t_side = a + nudge;
            if (i == n && seg + 2 < bounds.size()) t_side = b - nudge;
            ParamPoint p;
            p.theta = s.mixing_angle(t);
            const auto [pp, pm] = s.phases(t_side);
            p.phi_p = pp;
            p.phi_r = pm - pp;
            p.dtheta = s.theta_rate(t_side);
            const auto [rp, rm] = s.phase_rates(t_side);
            p.dphi_p = rp;
            p.dphi_r = rm - rp;
            path.times.push_back(t);
            path.points.push_back(p);
        }
    }

    const ParamPoint& f = path.points.front();
    const ParamPoint& l = path.points.back();
    const auto phase_eq = [](double x, double y) {
        return std::abs(std::remainder(x - y, 2.0 * M_PI)) < 1e-9;
    };
    path.closed = std::abs(f.theta - l.theta) < 1e-9 && phase_eq(f.phi_p, l.phi_p) &&
                  phase_eq(f.phi_r, l.phi_r);
    return path;
}

PhaseResult PhaseResult::from_raw(double raw, PhaseMethod m) {
    double v = std::remainder(raw, 2.0 * M_PI);  // [-pi, pi]
    if (v <= -M_PI) v += 2.0 * M_PI;             // report in (-pi, pi]
    const int w = int(std::lround((raw - v) / (2.0 * M_PI)));
    return PhaseResult{v, w, m};
}

double berry_connection_d2(const ParamPoint& p) {
    const double s2 = std::sin(p.theta) * std::sin(p.theta);
    const double c2 = std::cos(p.theta) * std::cos(p.theta);
    return (-2.0 * s2 * s2 * p.dphi_p + 2.0 * s2 * c2 * p.dphi_r) / norm_sq_d2(p.theta);
}

double berry_connection_d1(const ParamPoint& p) {
    const double c = std::cos(p.theta);
    return -c * c * p.dphi_r;
}

PhaseResult geometric_phase_quadrature(const ParamPath& path, DarkKind which) {
    if (path.points.size() < 5) throw Error("quadrature path too short");
    const double full = quadrature_pass(path, which, 1);
    const double half = quadrature_pass(path, which, 2);
    if (std::abs(full - half) > 1e-6)
        throw NotConverged("geometric_phase_quadrature: halving check above 1e-6 rad");
    return PhaseResult::from_raw(full + closure_term(path, which), PhaseMethod::Quadrature);
}

PhaseResult pancharatnam_phase(const ParamPath& path, DarkKind which) {
    if (path.points.size() < 2) throw Error("pancharatnam path too short");
    double sum = 0.0;
    CVector prev = dark_vector(which, path.points.front());
    const CVector first = prev;
    for (std::size_t i = 1; i < path.points.size(); ++i) {
        CVector cur = dark_vector(which, path.points[i]);
        sum += std::arg(prev.dot(cur));
        prev = std::move(cur);
    }
    sum += std::arg(prev.dot(first));
    return PhaseResult::from_raw(-sum, PhaseMethod::Pancharatnam);
}

PhaseResult closed_form_phase(ClosedFormKind kind, double theta_m, double delta_phi) {
    if (theta_m < 0.0 || theta_m > M_PI / 2.0 + 1e-12)
        throw OutOfRange("closed_form_phase: theta_m outside [0, pi/2]");
    const double s2 = std::sin(theta_m) * std::sin(theta_m);
    const double c2 = std::cos(theta_m) * std::cos(theta_m);
    double value = 0.0;
    switch (kind) {
        case ClosedFormKind::Phi1:
            value = s2 * delta_phi;
            break;
        case ClosedFormKind::Phi2:
            value = 2.0 * s2 * c2 / norm_sq_d2(theta_m) * delta_phi;
            break;
        case ClosedFormKind::Phi2DoublePrime:
            value = 2.0 * s2 / norm_sq_d2(theta_m) * delta_phi;
            break;
        case ClosedFormKind::Phi2Prime: {
            // -8 int_0^theta_m sin^4 / N^2 dtheta, Simpson on a fine fixed grid
            const std::size_t n = 4096;
            const double h = theta_m / double(n);
            double acc = 0.0;
            for (std::size_t i = 0; i <= n; ++i) {
                const double th = h * double(i);
                const double f = std::pow(std::sin(th), 4) / norm_sq_d2(th);
                const double w = (i == 0 || i == n) ? 1.0 : ((i % 2 == 1) ? 4.0 : 2.0);
                acc += w * f;
            }
            value = -8.0 * acc * h / 3.0;
            break;
        }
    }
    return PhaseResult::from_raw(value, PhaseMethod::ClosedForm);
}

PhaseResult dynamical_phase(const std::vector<double>& times, const std::vector<double>& energy) {
    if (times.size() != energy.size() || times.size() < 2)
        throw DimMismatch("dynamical_phase: need matching time/energy samples");
    return PhaseResult::from_raw(-simpson(times, energy, 0, times.size() - 1),
                                 PhaseMethod::Quadrature);
}

double v33_dressing_estimate(const PulseSchedule& s, double v33, std::size_t samples_per_segment) {
    ParamPath path = path_from_schedule(s, samples_per_segment);
    std::vector<double> fs(path.points.size());
    for (std::size_t i = 0; i < path.points.size(); ++i)
        fs[i] = std::pow(std::sin(path.points[i].theta), 4);
    double total = 0.0;
    for (std::size_t k = 0; k < path.segments(); ++k) {
        const auto [a, b] = path.segment_range(k);
        total += simpson(path.times, fs, a, b - 1);
    }
    return total * v33;
}

UnwrappedPhase extract_phase(const std::vector<CVector>& states, std::size_t component,
                             double threshold) {
    if (states.empty()) throw Error("extract_phase: empty trajectory");
    UnwrappedPhase out;
    out.values.reserve(states.size());
    out.reliable.reserve(states.size());
    for (const CVector& s : states) {
        if (component >= s.dim()) throw DimMismatch("extract_phase: component out of range");
        out.reliable.push_back(std::abs(s[component]) >= threshold);
    }
    if (!out.reliable.front() || !out.reliable.back())
        throw VanishingAmplitude("extract_phase: endpoint amplitude below threshold");

    double prev = std::arg(states.front()[component]);
    out.values.push_back(prev);
    for (std::size_t k = 1; k < states.size(); ++k) {
        const double a = std::arg(states[k][component]);
        prev += std::remainder(a - prev, 2.0 * M_PI);
        out.values.push_back(prev);
    }
    return out;
}

}  // namespace ryd
