// ode.hpp — adaptive Dormand-Prince 5(4) integrator for small dense systems.
// The state is any Eigen vector (real or complex); error control uses a
// mixed absolute/relative RMS norm per component with PI step-size control.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

#include "deltamix/core.hpp"

namespace deltamix::ode {

struct Options {
    double rtol{1e-10};
    double atol{1e-12};
    double max_step{std::numeric_limits<double>::infinity()};
    std::size_t max_steps{50'000'000};
};

struct Stats {
    std::size_t accepted{0};
    std::size_t rejected{0};
    std::size_t evaluations{0};
};

// Stepper with persistent step size so repeated advance_to() calls over
// adjacent sample intervals do not restart the controller.
template <class State>
class DormandPrince {
  public:
    explicit DormandPrince(Options opts = {}) : opts_(opts) {}

    const Stats& stats() const { return stats_; }
    void reset() { h_ = 0.0; have_dydt_ = false; stats_ = {}; }

    // Advance y from t0 to t1 (t1 > t0) for dy/dt = f(t, y).
    template <class F>
    void advance_to(F&& f, State& y, double t0, double t1) {
        double t = t0;
        if (!(t1 > t0)) {
            if (t1 == t0) return;
            throw std::invalid_argument("DormandPrince: backward integration not supported");
        }
        if (!have_dydt_) {
            k1_ = f(t, y);
            ++stats_.evaluations;
            have_dydt_ = true;
        }
        if (h_ <= 0.0) h_ = initial_step(y, k1_, t1 - t0);

        while (t < t1) {
            double h = std::min({h_, t1 - t, opts_.max_step});
            if (stats_.accepted + stats_.rejected > opts_.max_steps)
                throw std::runtime_error("DormandPrince: step budget exhausted");

            // Dormand-Prince RK5(4)7M tableau
            State k2 = f(t + h * (1.0 / 5.0), y + (h * (1.0 / 5.0)) * k1_);
            State k3 = f(t + h * (3.0 / 10.0), y + h * ((3.0 / 40.0) * k1_ + (9.0 / 40.0) * k2));
            State k4 = f(t + h * (4.0 / 5.0),
                         y + h * ((44.0 / 45.0) * k1_ - (56.0 / 15.0) * k2 + (32.0 / 9.0) * k3));
            State k5 = f(t + h * (8.0 / 9.0),
                         y + h * ((19372.0 / 6561.0) * k1_ - (25360.0 / 2187.0) * k2 +
                                  (64448.0 / 6561.0) * k3 - (212.0 / 729.0) * k4));
            State k6 = f(t + h, y + h * ((9017.0 / 3168.0) * k1_ - (355.0 / 33.0) * k2 +
                                         (46732.0 / 5247.0) * k3 + (49.0 / 176.0) * k4 -
                                         (5103.0 / 18656.0) * k5));
            State ynew = y + h * ((35.0 / 384.0) * k1_ + (500.0 / 1113.0) * k3 +
                                  (125.0 / 192.0) * k4 - (2187.0 / 6784.0) * k5 +
                                  (11.0 / 84.0) * k6);
            State k7 = f(t + h, ynew);
            stats_.evaluations += 6;

            // embedded 4th-order error estimate
            State err = h * ((71.0 / 57600.0) * k1_ - (71.0 / 16695.0) * k3 +
                             (71.0 / 1920.0) * k4 - (17253.0 / 339200.0) * k5 +
                             (22.0 / 525.0) * k6 - (1.0 / 40.0) * k7);

            double norm = error_norm(err, y, ynew);
            if (norm <= 1.0) {
                t += h;
                y = ynew;
                k1_ = k7;  // FSAL
                ++stats_.accepted;
                double factor = (norm == 0.0) ? 5.0 : 0.9 * std::pow(norm, -0.2);
                h_ = h * std::clamp(factor, 0.2, 5.0);
            } else {
                ++stats_.rejected;
                h_ = h * std::max(0.2, 0.9 * std::pow(norm, -0.2));
            }
        }
    }

  private:
    double error_norm(const State& err, const State& y0, const State& y1) const {
        double acc = 0.0;
        const auto n = err.size();
        for (Eigen::Index i = 0; i < n; ++i) {
            double scale = opts_.atol + opts_.rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
            double e = std::abs(err[i]) / scale;
            acc += e * e;
        }
        return std::sqrt(acc / static_cast<double>(n));
    }

    double initial_step(const State& y, const State& dydt, double span) const {
        double ynorm = 0.0, fnorm = 0.0;
        for (Eigen::Index i = 0; i < y.size(); ++i) {
            ynorm = std::max(ynorm, std::abs(y[i]));
            fnorm = std::max(fnorm, std::abs(dydt[i]));
        }
        double h = (fnorm > 0.0) ? 0.01 * (ynorm + 1e-6) / fnorm : 1e-6 * span;
        return std::clamp(h, 1e-12 * span, std::min(span, opts_.max_step));
    }

    Options opts_;
    Stats stats_;
    double h_{0.0};
    State k1_;
    bool have_dydt_{false};
};

}  // namespace deltamix::ode
