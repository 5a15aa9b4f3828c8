#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "deltamix/ode.hpp"

using namespace deltamix;
using Catch::Approx;

using Vec1 = Eigen::Matrix<cplx, 1, 1>;
using Vec2 = Eigen::Matrix<cplx, 2, 1>;

TEST_CASE("damped oscillator matches the exact solution over many periods") {
    const cplx lambda{-0.05, 40.0};
    auto f = [&](double, const Vec1& y) -> Vec1 { return lambda * y; };

    ode::Options opts;
    opts.rtol = 1e-10;
    opts.atol = 1e-12;
    ode::DormandPrince<Vec1> stepper(opts);
    Vec1 y;
    y[0] = cplx{1.0, 0.0};
    stepper.advance_to(f, y, 0.0, 30.0);

    cplx exact = std::exp(lambda * 30.0);
    CHECK(std::abs(y[0] - exact) < 1e-8);
    CHECK(stepper.stats().accepted > 100);
}

TEST_CASE("segmented advance agrees with a single sweep") {
    const cplx lambda{-0.2, 12.0};
    auto f = [&](double, const Vec1& y) -> Vec1 { return lambda * y; };

    ode::DormandPrince<Vec1> a, b;
    Vec1 ya, yb;
    ya[0] = yb[0] = cplx{0.3, -0.1};
    a.advance_to(f, ya, 0.0, 8.0);
    for (int i = 0; i < 800; ++i) b.advance_to(f, yb, i * 0.01, (i + 1) * 0.01);
    CHECK(std::abs(ya[0] - yb[0]) < 1e-9);
}

TEST_CASE("driven two-level system reaches the known steady amplitude") {
    // dy/dt = -i H y - decay, with a weak drive: compare against the
    // analytically solvable scalar response of the lower component.
    const double gamma = 0.8, delta = 3.0;
    const cplx eps{2e-3, 0.0};
    auto f = [&](double t, const Vec1& y) -> Vec1 {
        Vec1 out;
        out[0] = (-I_UNIT * delta - 0.5 * gamma) * y[0] - I_UNIT * eps * std::exp(-I_UNIT * 2.0 * t);
        return out;
    };
    ode::DormandPrince<Vec1> stepper;
    Vec1 y;
    y[0] = cplx{0.0, 0.0};
    stepper.advance_to(f, y, 0.0, 60.0);

    // steady response amplitude: y = -i eps e^{-2it} / (i(delta-2) + gamma/2)
    cplx expected = -I_UNIT * eps * std::exp(-I_UNIT * 2.0 * 60.0) /
                    (I_UNIT * (delta - 2.0) + 0.5 * gamma);
    CHECK(std::abs(y[0] - expected) < 1e-9);
}

TEST_CASE("tighter tolerances shrink the error") {
    const cplx lambda{0.0, 25.0};
    auto f = [&](double, const Vec2& y) -> Vec2 {
        Vec2 out;
        out[0] = lambda * y[0];
        out[1] = -lambda * y[1];
        return out;
    };
    double errs[2];
    int idx = 0;
    for (double rtol : {1e-6, 1e-11}) {
        ode::Options opts;
        opts.rtol = rtol;
        opts.atol = rtol * 1e-2;
        ode::DormandPrince<Vec2> stepper(opts);
        Vec2 y;
        y[0] = cplx{1.0, 0.0};
        y[1] = cplx{0.0, 1.0};
        stepper.advance_to(f, y, 0.0, 10.0);
        errs[idx++] = std::abs(y[0] - std::exp(lambda * 10.0));
    }
    CHECK(errs[1] < errs[0] * 1e-2);
    CHECK(errs[1] < 1e-8);
}

TEST_CASE("step budget violation throws") {
    auto f = [&](double, const Vec1& y) -> Vec1 { return Vec1{100.0 * y}; };
    ode::Options opts;
    opts.max_steps = 10;
    ode::DormandPrince<Vec1> stepper(opts);
    Vec1 y;
    y[0] = 1.0;
    CHECK_THROWS(stepper.advance_to(f, y, 0.0, 100.0));
}
