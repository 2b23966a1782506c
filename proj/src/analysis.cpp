// Copyright 2026 The gaussent Authors
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

#include "gaussent/analysis.hpp"

#include "gaussent/error.hpp"

#include <algorithm>
#include <cmath>

namespace gaussent {

namespace {

void require_non_empty(const Trajectory& tr) {
    if (tr.size() == 0) {
        throw Error(ErrorKind::InvalidArgument, "empty trajectory");
    }
    tr.validate();
}

void require_threshold(double eps) {
    if (!(eps > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "threshold must be positive");
    }
}

// Boundary of {E_N < eps} inside (lo, hi). `below_at_hi` tells which side is dead.
double refine_crossing(double lo, double hi, bool below_at_hi, double eps, const Evaluator& evaluator) {
    if (!evaluator) {
        return hi;
    }
    while (hi - lo > kCrossingResolution) {
        const double mid = 0.5 * (lo + hi);
        const bool below = evaluator(mid) < eps;
        if (below == below_at_hi) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

} // namespace

void Trajectory::validate() const {
    if (values.size() != times.size() || physical.size() != times.size() || margins.size() != times.size()) {
        throw Error(ErrorKind::InvalidArgument, "trajectory columns differ in length");
    }
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!(times[i] > times[i - 1])) {
            throw Error(ErrorKind::InvalidArgument, "trajectory times are not strictly increasing");
        }
    }
    for (double v : values) {
        if (!(v >= 0.0)) {
            throw Error(ErrorKind::InvalidArgument, "negative or NaN log-negativity");
        }
    }
}

std::optional<double> esd_time(const Trajectory& tr, double eps, const Evaluator& evaluator) {
    require_non_empty(tr);
    require_threshold(eps);
    if (tr.values.front() < eps) {
        return tr.times.front();
    }
    for (std::size_t i = 1; i < tr.size(); ++i) {
        if (tr.values[i] < eps) {
            return refine_crossing(tr.times[i - 1], tr.times[i], true, eps, evaluator);
        }
    }
    return std::nullopt;
}

std::vector<DeathInterval> revivals(const Trajectory& tr, double eps, const Evaluator& evaluator) {
    require_non_empty(tr);
    require_threshold(eps);
    std::vector<DeathInterval> out;
    bool dead = tr.values.front() < eps;
    double death = tr.times.front();
    for (std::size_t i = 1; i < tr.size(); ++i) {
        const bool below = tr.values[i] < eps;
        if (below == dead) {
            continue;
        }
        if (below) {
            death = refine_crossing(tr.times[i - 1], tr.times[i], true, eps, evaluator);
        } else {
            // The first alive point bounds the rebirth from above.
            const double rebirth = refine_crossing(tr.times[i - 1], tr.times[i], false, eps, evaluator);
            out.push_back({death, rebirth});
        }
        dead = below;
    }
    return out;
}

Asymptote asymptote(const Trajectory& tr, double tail_fraction, std::size_t windows_back) {
    if (!(tail_fraction > 0.0 && tail_fraction <= 0.5)) {
        throw Error(ErrorKind::InvalidArgument, "tail_fraction must lie in (0, 0.5]");
    }
    require_non_empty(tr);
    const auto window = static_cast<std::size_t>(std::floor(tail_fraction * static_cast<double>(tr.size())));
    if (window < 10) {
        throw Error(ErrorKind::InvalidArgument, "tail window holds fewer than 10 samples");
    }
    if ((windows_back + 1) * window > tr.size()) {
        throw Error(ErrorKind::InvalidArgument, "trajectory too short for the requested window");
    }
    const std::size_t end = tr.size() - windows_back * window;
    const auto first = tr.values.begin() + static_cast<std::ptrdiff_t>(end - window);
    const auto last = tr.values.begin() + static_cast<std::ptrdiff_t>(end);

    double sum = 0.0;
    for (auto it = first; it != last; ++it) {
        sum += *it;
    }
    const auto [lo, hi] = std::minmax_element(first, last);
    return {sum / static_cast<double>(window), *hi - *lo};
}

const char* to_string(Regime regime) noexcept {
    switch (regime) {
    case Regime::OverDamped: return "over-damped";
    case Regime::UnderDamped: return "under-damped";
    case Regime::Critical: return "critical";
    }
    return "unknown";
}

Regime classify_regime(const SystemParams& params) {
    const double gamma = std::min(params.gamma1, params.gamma2);
    const double g2 = gamma * gamma;
    const double threshold = 8.0 * params.mass * params.mass * params.omega0 * params.omega0;
    const double disc = g2 - threshold;
    if (std::abs(disc) <= 1e-12 * g2) {
        return Regime::Critical;
    }
    return disc > 0.0 ? Regime::OverDamped : Regime::UnderDamped;
}

} // namespace gaussent
