#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "deltamix/lindblad.hpp"

using namespace deltamix;
using namespace deltamix::model;
using namespace deltamix::lindblad;
using Catch::Approx;

namespace {

struct Setup {
    CircuitSpec circuit;
    Frame frame;
    RateSet rates;
};

Setup make(int type, const RatioSet& ratios, double y, double S = 100.0) {
    Setup s;
    s.circuit = circuit_from_ratios(ratios);
    s.frame = derive_frame(s.circuit, DriveSpec::from_saturation(type, y, S));
    s.rates = decay_rates(s.frame, s.circuit);
    return s;
}

}  // namespace

TEST_CASE("numeric steady state reproduces the closed forms") {
    auto s1 = make(1, RatioSet::from_l1_l3(1.0, 2.0), 1.0);
    auto dm1 = steady_state_numeric(s1.frame, s1.rates);
    CHECK(std::abs(dm1.rho(0, 0) - 0.5) < 1e-10);
    CHECK(std::abs(dm1.rho(1, 1) - 0.5) < 1e-10);
    CHECK(std::abs(dm1.rho(2, 2)) < 1e-10);
    CHECK(dm1.hermiticity_error() < 1e-10);
    CHECK(dm1.trace_error() < 1e-12);

    for (double y : {0.2, 1.0, 5.0}) {
        auto s2 = make(2, RatioSet::from_l1_l3(0.6, 3.0), y);
        auto dm2 = steady_state_numeric(s2.frame, s2.rates);
        CHECK(std::abs(dm2.rho(0, 0) - 1.0) < 1e-10);
        CHECK(std::abs(dm2.rho(1, 1)) < 1e-10);
        CHECK(std::abs(dm2.rho(2, 2)) < 1e-10);
    }
}

TEST_CASE("numeric steady state matches type-3 populations over random draws") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int trial = 0; trial < 50; ++trial) {
        auto ratios = RatioSet::from_l1_l3(std::pow(10.0, u(rng)), std::pow(10.0, u(rng)));
        double y = std::pow(10.0, u(rng));
        auto s = make(3, ratios, y);
        auto dm = steady_state_numeric(s.frame, s.rates);
        auto cf = steady_state(s.frame, s.rates);
        for (int m = 1; m <= 3; ++m)
            CHECK(std::abs(dm.rho(m - 1, m - 1).real() - cf.population(m)) < 1e-10);
        // off-diagonal entries vanish in the dressed basis
        CHECK(dm.rho.cwiseAbs().sum() - dm.rho.diagonal().cwiseAbs().sum() < 1e-10);
    }
}

TEST_CASE("Liouvillian has exactly one zero mode with damped remainder") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        int type = 1 + trial % 3;
        auto ratios = RatioSet::from_l1_l3(std::pow(10.0, u(rng)), std::pow(10.0, u(rng)));
        auto s = make(type, ratios, std::pow(10.0, 2.0 * u(rng)));
        auto ev = liouvillian_eigenvalues(liouvillian(s.frame, s.rates));
        int zeros = 0;
        for (int i = 0; i < 9; ++i) {
            if (std::abs(ev[i]) < 1e-8)
                ++zeros;
            else
                CHECK(ev[i].real() < 1e-12);
        }
        CHECK(zeros == 1);
    }
}

TEST_CASE("degenerate generator is reported") {
    auto s = make(1, RatioSet::from_l1_l3(1.0, 1.0), 1.0);
    RateSet dead = s.rates;
    dead.K.setZero();
    dead.gamma.setZero();
    dead.Gamma.setZero();
    CHECK_THROWS_AS(steady_state_numeric(s.frame, dead), degeneracy_error);
}

TEST_CASE("zero probe coupling gives a homogeneous first-order system") {
    auto s = make(1, RatioSet::from_l1_l3(1.0, 2.0), 0.8);
    auto steady = steady_state_numeric(s.frame, s.rates);
    ProbeSpec p{1, 1, 0.0, 0.0, 0.0};  // amplitude exactly zero
    auto lin = linear_response_numeric(s.circuit, s.frame, s.rates, p, steady);
    CHECK(lin.order1.rho.cwiseAbs().maxCoeff() < 1e-18);
}

TEST_CASE("driven coherence with zero dephasing is singular") {
    auto s = make(1, RatioSet::from_l1_l3(1.0, 2.0), 0.8);
    auto steady = steady_state_numeric(s.frame, s.rates);
    RateSet broken = s.rates;
    broken.Gamma(2, 0) = broken.Gamma(0, 2) = 0.0;
    ProbeSpec p{1, 1, 0.0, 1.0, 0.0};
    CHECK_THROWS_AS(linear_response_numeric(s.circuit, s.frame, broken, p, steady),
                    singularity_error);
}

TEST_CASE("on-resonance first-order amplitude matches the closed form") {
    auto s = make(1, RatioSet::from_l1_l3(0.9, 2.4), 0.6);
    auto steady = steady_state_numeric(s.frame, s.rates);
    ProbeSpec p{1, 1, 0.0, 0.37, 0.0};
    auto lin = linear_response_numeric(s.circuit, s.frame, s.rates, p, steady);

    const cplx eps31 = -0.5 * s.circuit.mutual_inductance * s.frame.cos_half *
                       s.circuit.current(3, 1) * p.phasor() / s.circuit.hbar;
    const cplx expected31 = -I_UNIT * eps31 * steady.rho(0, 0) / (0.5 * s.rates.dephasing(3, 1));
    CHECK(std::abs(lin.order1.rho(2, 0) - expected31) < 1e-12 * std::abs(expected31) + 1e-18);

    const cplx eps32 = -0.5 * s.circuit.mutual_inductance * s.frame.sin_half *
                       s.circuit.current(3, 1) * p.phasor() / s.circuit.hbar;
    const cplx expected32 =
        -I_UNIT * eps32 * steady.rho(1, 1) /
        (I_UNIT * (s.frame.shifted_gap(3, 2) - lin.nu_shifted) + 0.5 * s.rates.dephasing(3, 2));
    CHECK(std::abs(lin.order1.rho(2, 1) - expected32) < 1e-12 * std::abs(expected32) + 1e-18);

    // only the two driven coherences respond
    CHECK(std::abs(lin.order1.rho(1, 0)) < 1e-18);
    CHECK(std::abs(lin.order1.rho(0, 0)) < 1e-18);
}

TEST_CASE("type-3 first-order amplitudes match the probe-5 closed forms") {
    std::mt19937 rng(59);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        auto ratios = RatioSet::from_l1_l3(std::pow(10.0, u(rng)), std::pow(10.0, u(rng)));
        auto s = make(3, ratios, std::pow(10.0, u(rng)));
        auto steady = steady_state_numeric(s.frame, s.rates);
        ProbeSpec p{5, 1, 3.0 * u(rng), 0.7, 0.0};
        auto lin = linear_response_numeric(s.circuit, s.frame, s.rates, p, steady);

        const double nu = lin.nu_shifted;
        const cplx eps21 = -0.5 * s.circuit.mutual_inductance * s.frame.cos_half *
                           s.circuit.current(2, 1) * p.phasor() / s.circuit.hbar;
        const cplx eps32 = -0.5 * s.circuit.mutual_inductance * s.frame.sin_half *
                           s.circuit.current(2, 1) * p.phasor() / s.circuit.hbar;
        const double p1 = steady.rho(0, 0).real(), p2 = steady.rho(1, 1).real(),
                     p3 = steady.rho(2, 2).real();

        const cplx s21 = I_UNIT * eps21 * (p2 - p1) /
                         (I_UNIT * (s.frame.shifted_gap(2, 1) - nu) + 0.5 * s.rates.dephasing(2, 1));
        CHECK(std::abs(lin.order1.rho(1, 0) - s21) < 1e-10 * std::abs(s21) + 1e-18);

        // forward amplitude of rho_23 is the conjugate of the published s_32
        const cplx s32 = I_UNIT * std::conj(eps32) * (p3 - p2) /
                         (I_UNIT * (s.frame.shifted_gap(3, 2) + nu) + 0.5 * s.rates.dephasing(3, 2));
        CHECK(std::abs(lin.order1.rho(1, 2) - std::conj(s32)) < 1e-10 * std::abs(s32) + 1e-18);
    }
}

TEST_CASE("spectral map contains exactly the two output lines") {
    auto s = make(1, RatioSet::from_l1_l3(1.3, 0.8), 0.7);
    auto steady = steady_state_numeric(s.frame, s.rates);
    for (int k : {1, 2}) {
        ProbeSpec p{k, 1, 0.4, 1.0, 0.0};
        auto lin = linear_response_numeric(s.circuit, s.frame, s.rates, p, steady);
        auto harmonics = loop_current_harmonics(s.frame, s.circuit);
        auto map = scattered_amplitudes(s.frame, harmonics, lin.rho1, s.circuit);

        auto labels = output_labels(k);
        Label conj_gain{-labels.gain.first, -labels.gain.second};
        Label conj_conv{-labels.converted.first, -labels.converted.second};
        for (const auto& [l, c] : map.coefficients) {
            if (std::abs(c) < 1e-12 * p.amplitude) continue;
            bool expected = (l == labels.gain) || (l == labels.converted) || (l == conj_gain) ||
                            (l == conj_conv);
            CHECK(expected);
        }
        CHECK(std::abs(map.phasor(labels.gain)) > 0.0);
        CHECK(std::abs(map.phasor(labels.converted)) > 0.0);
        // reality pairing
        for (const auto& [l, c] : map.coefficients) {
            Label neg{-l.first, -l.second};
            auto it = map.coefficients.find(neg);
            REQUIRE(it != map.coefficients.end());
            CHECK(std::abs(std::conj(c) - it->second) < 1e-15 + 1e-12 * std::abs(c));
        }
    }
}

TEST_CASE("frequency-domain oracle equals the analytic response") {
    std::mt19937 rng(71);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int type = 1; type <= 3; ++type) {
        for (int trial = 0; trial < 35; ++trial) {
            auto ratios =
                RatioSet::from_l1_l3(std::pow(10.0, u(rng)), std::pow(10.0, u(rng)));
            auto s = make(type, ratios, std::pow(10.0, 2.0 * u(rng)));
            int k = 2 * type - 1 + (trial % 2);
            int branch = 1 + (trial % 3 == 0 ? 1 : 0);
            double gbar = s.rates.dephasing(2, 1) + s.rates.dephasing(3, 1);
            ProbeSpec p{k, branch, gbar * u(rng), 0.0, 0.0};

            auto numeric = oracle_response(s.circuit, s.frame, s.rates, p);
            auto steady = steady_state(s.frame, s.rates);
            auto analytic = response::respond(s.frame, s.rates, ratios, p, steady);

            CHECK(std::abs(numeric.gain - analytic.gain) <=
                  1e-9 * std::max(std::abs(analytic.gain), 1e-12));
            CHECK(std::abs(numeric.efficiency - analytic.efficiency) <=
                  1e-9 * std::max(std::abs(analytic.efficiency), 1e-12));
        }
    }
}

TEST_CASE("phase-conjugating probes keep the published phase factor") {
    auto s = make(3, RatioSet::from_l2_l3(0.02, 3.0), 0.9);
    for (double phase : {0.0, 0.6, -1.2}) {
        ProbeSpec p{5, 1, 0.6, 0.0, phase};
        auto numeric = oracle_response(s.circuit, s.frame, s.rates, p);
        auto steady = steady_state(s.frame, s.rates);
        auto analytic = response::respond(s.frame, s.rates, ratios_of(s.circuit), p, steady);
        CHECK(std::abs(numeric.efficiency - analytic.efficiency) <
              1e-9 * std::abs(analytic.efficiency));
    }
}

TEST_CASE("time-domain oracle tracks the analytic response at weak drive") {
    auto s = make(1, RatioSet::from_l1_l3(1.0, 4.0), 1.0);
    ProbeSpec p{1, 1, 0.0, 0.0, 0.0};
    OracleControls ctl;
    ctl.strength = 1e-3;
    auto rep = time_domain_oracle(s.circuit, s.frame, s.rates, p, ctl);

    CHECK(rep.linear_gain_err < 1e-9);
    CHECK(rep.linear_eta_err < 1e-9);
    CHECK(rep.time_gain_err < 1e-2);
    CHECK(rep.time_eta_err < 1e-2);
    CHECK(rep.residual < ctl.residual_tol);
    CHECK(rep.max_trace_err < 1e-8);
    CHECK(rep.max_herm_err < 1e-8);
    CHECK(rep.min_eigenvalue > -1e-8);
    CHECK(rep.strength == Approx(1e-3));
    CHECK(rep.steps > 100);
}

TEST_CASE("zero-amplitude probe is flagged, not computed") {
    auto s = make(2, RatioSet::from_l1_l3(1.0, 0.5), 1.0);
    ProbeSpec p{3, 1, 0.0, 0.0, 0.0};
    OracleControls ctl;
    ctl.strength = 0.0;
    auto rep = time_domain_oracle(s.circuit, s.frame, s.rates, p, ctl);
    CHECK(rep.flagged_zero_response);
    CHECK(std::isnan(rep.time_gain.real()));
}

TEST_CASE("overberight probe violates the perturbative precondition") {
    auto s = make(1, RatioSet::from_l1_l3(1.0, 1.0), 1.0);
    ProbeSpec p{1, 1, 0.0, 0.0, 0.0};
    OracleControls ctl;
    ctl.strength = 0.5;
    CHECK_THROWS_AS(time_domain_oracle(s.circuit, s.frame, s.rates, p, ctl), config_error);
}

TEST_CASE("unreachable residual threshold reports non-stationarity") {
    auto s = make(1, RatioSet::from_l1_l3(1.0, 1.0), 1.0);
    ProbeSpec p{1, 1, 0.0, 0.0, 0.0};
    OracleControls ctl;
    ctl.strength = 0.05;
    ctl.transient_factor = 1.0;  // far too short: transient leaks into the window
    ctl.window_factor = 4.0;
    ctl.residual_tol = 1e-9;
    CHECK_THROWS_AS(time_domain_oracle(s.circuit, s.frame, s.rates, p, ctl),
                    nonstationary_error);
}

TEST_CASE("non-RWA probe terms stay a small correction at modest hierarchy") {
    // compressed frequency hierarchy so the counter-rotating terms are
    // integrable; they shift the response only at the Gamma/omega scale
    auto ratios = RatioSet::from_l1_l3(1.0, 2.0);
    CircuitSpec circuit = circuit_from_ratios(ratios, 1.0e3, 2.3e3);
    auto frame = derive_frame(circuit, DriveSpec::from_saturation(1, 1.0, 50.0));
    auto rates = decay_rates(frame, circuit);
    ProbeSpec p{1, 1, 0.0, 0.0, 0.0};
    OracleControls ctl;
    ctl.strength = 1e-2;
    ctl.non_rwa = true;
    ctl.transient_factor = 15.0;
    ctl.window_factor = 10.0;
    ctl.samples = 1024;
    // the off-resonant coherence carries fast wiggles relative to its small
    // slow signal; they average out of the fitted amplitudes
    ctl.residual_tol = 0.2;
    auto rep = time_domain_oracle(circuit, frame, rates, p, ctl);
    CHECK(rep.time_gain_err < 3e-2);
    CHECK(rep.time_eta_err < 3e-2);
}
