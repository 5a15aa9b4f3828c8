#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "deltamix/response.hpp"

using namespace deltamix;
using namespace deltamix::model;
using namespace deltamix::response;
using Catch::Approx;

namespace {

struct Setup {
    CircuitSpec circuit;
    Frame frame;
    RateSet rates;
    RatioSet ratios;
    SteadyState steady;
};

Setup make(int type, const RatioSet& ratios, double y, double S, double omega21 = 0.0,
           double omega31 = 0.0) {
    Setup s;
    if (omega21 <= 0.0) {
        omega21 = kDefaultOmega21;
        omega31 = kDefaultOmega31;
    }
    s.circuit = circuit_from_ratios(ratios, omega21, omega31);
    s.frame = derive_frame(s.circuit, DriveSpec::from_saturation(type, y, S));
    s.rates = decay_rates(s.frame, s.circuit);
    s.ratios = ratios;
    s.steady = steady_state(s.frame, s.rates);
    return s;
}

ResponseResult eval(const Setup& s, int k, int branch, double offset = 0.0,
                    double phase = 0.0) {
    ProbeSpec p{k, branch, offset, 0.0, phase};
    return respond(s.frame, s.rates, s.ratios, p, s.steady);
}

}  // namespace

TEST_CASE("far-detuned probe is transparent") {
    auto s = make(1, RatioSet::from_l1_l3(1.0, 2.0), 0.7, 100.0);
    for (double off : {1e9, -1e9}) {
        auto r = eval(s, 1, 1, off);
        CHECK(std::abs(r.gain - 1.0) < 1e-6);
        CHECK(std::abs(r.efficiency) < 1e-6);
    }
    auto r0 = eval(s, 1, 1, 0.0);
    CHECK(r0.regime.attenuating);
    CHECK_FALSE(r0.regime.transparent);
}

TEST_CASE("resonant attenuation floor 3/4 at large lambda1") {
    // all three ratios much greater than 1; splitting far above the rates
    auto ratios = RatioSet::from_l2_l3(1e12, 1e6);  // lambda1 = 1e6
    auto s = make(1, ratios, 1.0, 1e16, 1e20, 2.3e20);
    auto r = eval(s, 1, 1);
    CHECK(std::abs(r.gain) == Approx(0.75).margin(1e-3));
    CHECK(r.regime.attenuating);
}

TEST_CASE("probe 5 resonant amplification 13/12") {
    auto ratios = RatioSet::from_l2_l3(1e-6, 4.0);  // lambda1 = 2.5e-7, lambda2 = 1e-6
    auto s = make(3, ratios, 1.0, 1e4, 1e8, 2.3e8);
    auto r = eval(s, 5, 1);
    CHECK(std::abs(r.gain) == Approx(13.0 / 12.0).margin(1e-6));
    CHECK(r.regime.amplifying);
    auto r2 = eval(s, 5, 2);
    CHECK(std::abs(r2.gain) == Approx(13.0 / 12.0).margin(1e-6));
}

TEST_CASE("efficiency closes as the mixing angle closes") {
    for (int k = 1; k <= 6; ++k) {
        int l = (k + 1) / 2;
        auto s = make(l, RatioSet::from_l1_l3(0.8, 1.7), 1e-8, 100.0);
        auto r = eval(s, k, 1);
        CHECK(std::abs(r.efficiency) < 1e-3);
    }
}

TEST_CASE("probe 3 at lambda2*y = 1 converts with |eta| = 1/2") {
    auto ratios = RatioSet::from_l1_l3(1e6, 1e-6);  // lambda2 = 1
    auto s = make(2, ratios, 1.0, 1e4, 1e8, 2.3e8);
    auto r = eval(s, 3, 1);
    CHECK(std::abs(r.efficiency) == Approx(0.5).margin(1e-6));
}

TEST_CASE("probe 1 downconversion at y = 1/4") {
    auto ratios = RatioSet::from_l2_l3(1e6, 1e6);  // lambda1 = 1
    auto s = make(1, ratios, 0.25, 1e12, 1e16, 2.3e16);
    auto r = eval(s, 1, 1);
    CHECK(std::abs(r.efficiency) == Approx(0.188235).margin(1e-5));
    CHECK_FALSE(r.up_conversion);  // difference frequency lies below the probe

    auto r2 = eval(s, 2, 1);
    CHECK(r2.up_conversion);  // sum frequency lies above the probe
}

TEST_CASE("reduced formulas agree with the general ones in the section limits") {
    struct Case {
        int l;
        RatioSet ratios;
        double S, w21, w31;
    };
    std::vector<Case> cases;
    for (double l1 : {0.3, 1.0, 5.0})
        cases.push_back({1, RatioSet::from_l1_l3(l1, 1e6), 1e12, 1e16, 2.3e16});
    for (double l2 : {0.5, 1.0, 2.0})
        cases.push_back({2, RatioSet::from_l2_l3(l2, 1e-6), 1e5, 1e9, 2.3e9});
    for (double l3 : {0.4, 1.0, 4.0})
        cases.push_back({3, RatioSet::from_l2_l3(1e-6, l3), 1e5, 1e9, 2.3e9});

    for (const auto& cse : cases) {
        for (double y : {0.3, 1.0, 2.5}) {
            auto s = make(cse.l, cse.ratios, y, cse.S, cse.w21, cse.w31);
            for (int k : {2 * cse.l - 1, 2 * cse.l}) {
                for (int branch : {1, 2}) {
                    auto general = eval(s, k, branch);
                    auto red = evaluate_reduced(cse.l, k, branch, cse.ratios, y);
                    CHECK(std::abs(general.gain - red.gain) <=
                          1e-3 * std::max(std::abs(red.gain), 0.05));
                    CHECK(std::abs(std::abs(general.efficiency) - std::abs(red.efficiency)) <=
                          1e-3 * std::max(std::abs(red.efficiency), 0.05));
                }
            }
        }
    }
}

TEST_CASE("branch mirror symmetry of the reduced forms") {
    auto ratios = RatioSet::from_l1_l3(0.7, 3.0);
    for (double y : {0.05, 0.4, 1.0, 2.0, 40.0}) {
        auto b2 = evaluate_reduced(1, 1, 2, ratios, y);
        auto b1_inv = evaluate_reduced(1, 1, 1, ratios, 1.0 / y);
        CHECK(b2.gain == Approx(b1_inv.gain).epsilon(1e-12));
        CHECK(b2.efficiency == Approx(b1_inv.efficiency).epsilon(1e-12));
    }
}

TEST_CASE("conversion efficiencies coincide across probe pairs") {
    auto ratios = RatioSet::from_l1_l3(0.7, 3.0);
    for (double y : {0.1, 0.5, 1.0, 4.0}) {
        for (int branch : {1, 2}) {
            auto e1 = evaluate_reduced(1, 1, branch, ratios, y).efficiency;
            auto e2 = evaluate_reduced(1, 2, branch, ratios, y).efficiency;
            CHECK(std::abs(e1) == Approx(std::abs(e2)).epsilon(1e-12));
            auto e3 = evaluate_reduced(2, 3, branch, ratios, y).efficiency;
            auto e4 = evaluate_reduced(2, 4, branch, ratios, y).efficiency;
            CHECK(std::abs(e3) == Approx(std::abs(e4)).epsilon(1e-12));
            auto e5 = evaluate_reduced(3, 5, branch, ratios, y).efficiency;
            auto e6 = evaluate_reduced(3, 6, branch, ratios, y).efficiency;
            CHECK(std::abs(e5) == Approx(std::abs(e6)).epsilon(1e-12));
        }
    }
}

TEST_CASE("passivity of driving types 1 and 2 on the standard grid") {
    auto ys = logspace(1e-2, 1e2, 50);
    auto ls = logspace(1e-2, 1e2, 50);
    for (double y : ys) {
        for (double lam : ls) {
            auto r1 = RatioSet::from_l1_l3(lam, 1.0);
            auto r2 = RatioSet::from_l2_l3(lam, 1.0);
            for (int branch : {1, 2}) {
                CHECK(std::abs(evaluate_reduced(1, 1, branch, r1, y).gain) <= 1.0 + 1e-9);
                CHECK(std::abs(evaluate_reduced(1, 2, branch, r1, y).gain) <= 1.0 + 1e-9);
                CHECK(std::abs(evaluate_reduced(2, 3, branch, r2, y).gain) <= 1.0 + 1e-9);
                CHECK(std::abs(evaluate_reduced(2, 4, branch, r2, y).gain) <= 1.0 + 1e-9);
            }
        }
    }
}

TEST_CASE("type-3 amplification sign rule") {
    auto ys = logspace(1e-2, 1e2, 50);
    auto us = logspace(1e-2, 1e2, 50);
    for (double y : ys) {
        for (double u : us) {
            double g = reduced_type3(5, 1, y, u).gain;
            if (u > 1.0) CHECK(g > 1.0);
            if (u < 1.0) CHECK(g < 1.0);
        }
    }
    CHECK(reduced_type3(5, 1, 0.5, 1.0).gain == Approx(1.0));
    CHECK(std::abs(reduced_type3(5, 1, 0.5, 1.0).efficiency) == Approx(0.0).margin(1e-15));
}

TEST_CASE("reduced landmark values") {
    auto r_any = RatioSet::from_l1_l3(1.0, 1.0);

    // G2 floor at lambda1 -> 0, y = 0.6573
    auto r_small = RatioSet::from_l1_l3(1e-9, 1.0);
    CHECK(evaluate_reduced(1, 2, 1, r_small, 0.6573).gain == Approx(0.72305).margin(5e-5));

    // G6 = 25/24 at y = 1, lambda3 = 2/5
    auto r6 = RatioSet::from_l1_l3(1.0, 0.4);
    CHECK(evaluate_reduced(3, 6, 1, r6, 1.0).gain == Approx(25.0 / 24.0).epsilon(1e-14));

    // switch-off point u = 1
    auto r5 = RatioSet::from_l1_l3(1.0, 2.0);
    CHECK(evaluate_reduced(3, 5, 1, r5, 0.5).gain == Approx(1.0).epsilon(1e-14));

    // G5 = 13/12 at y = 1, lambda3 = 4
    auto r54 = RatioSet::from_l1_l3(1.0, 4.0);
    CHECK(evaluate_reduced(3, 5, 1, r54, 1.0).gain == Approx(13.0 / 12.0).epsilon(1e-14));

    // |G1| falls as lambda1 grows at fixed y
    double prev = 2.0;
    for (double l1 : {0.2, 1.0, 10.0}) {
        double g = std::abs(evaluate_reduced(1, 1, 1, RatioSet::from_l1_l3(l1, 1.0), 0.5).gain);
        CHECK(g < prev);
        prev = g;
    }
    (void)r_any;
}

TEST_CASE("closed-form optimal points") {
    const double ys = eta12_optimal_saturation();
    CHECK(ys == Approx(0.36349).margin(1e-5));
    auto p = optimal_point(1, 1, 1, Regime::detuned, Objective::efficiency);
    CHECK(p.value == Approx(0.19529).margin(1e-5));

    auto pres = optimal_point(1, 1, 1, Regime::resonant, Objective::efficiency);
    CHECK(pres.value == Approx(1.0 / 8.0));

    CHECK(gain2_optimal_saturation() == Approx(0.6573).margin(1e-4));
    auto pg2 = optimal_point(1, 2, 1, Regime::detuned, Objective::gain);
    CHECK(pg2.value == Approx(0.72305).margin(5e-5));

    auto p3 = optimal_point(2, 3, 1, Regime::detuned, Objective::efficiency);
    CHECK(p3.value == Approx(0.5));

    auto p5a = optimal_point(3, 5, 1, Regime::resonant, Objective::gain, GainSense::amplify);
    CHECK(p5a.value == Approx(13.0 / 12.0));
    CHECK(p5a.conditions.front().value == Approx(4.0));

    auto p5d = optimal_point(3, 5, 1, Regime::detuned, Objective::gain, GainSense::amplify);
    CHECK(p5d.value == Approx(9.0 / 8.0));
    CHECK(p5d.conditions.front().value == Approx(3.0));

    auto p6r = optimal_point(3, 6, 1, Regime::resonant, Objective::gain, GainSense::amplify);
    CHECK(p6r.value == Approx(25.0 / 24.0));
    CHECK(p6r.conditions.front().value == Approx(0.4));

    auto p6d = optimal_point(3, 6, 1, Regime::detuned, Objective::gain, GainSense::amplify);
    CHECK(p6d.value == Approx(9.0 / 8.0));
    CHECK(p6d.conditions.front().value == Approx(1.0 / 3.0));

    auto pe5 = optimal_point(3, 5, 1, Regime::resonant, Objective::efficiency);
    CHECK(pe5.value == Approx(0.19838).margin(1e-5));
    CHECK(pe5.conditions.front().value == Approx(0.5 * (9.0 + std::sqrt(73.0))));

    auto pe5d = optimal_point(3, 5, 1, Regime::detuned, Objective::efficiency);
    CHECK(pe5d.value == Approx(0.25));

    CHECK_THROWS_AS(optimal_point(3, 5, 1, Regime::detuned, Objective::efficiency,
                                  GainSense::attenuate),
                    not_tabulated_error);
    CHECK_THROWS_AS(optimal_point(3, 5, 1, Regime::detuned, Objective::gain), config_error);
    CHECK_THROWS_AS(optimal_point(1, 4, 1, Regime::detuned, Objective::gain), config_error);
    CHECK_THROWS_AS(optimal_point(1, 1, 3, Regime::detuned, Objective::gain), config_error);
}

TEST_CASE("tabulated optima are genuine local extrema") {
    // scan a +-1% neighborhood; nothing may beat the tabulated value by 1e-6
    const double ys = eta12_optimal_saturation();
    double best = reduced::eta12(1.0, ys);
    for (double fl : linspace(0.99, 1.01, 21))
        for (double fy : linspace(0.99, 1.01, 21))
            CHECK(reduced::eta12(fl, ys * fy) <= best + 1e-6);

    const double l3s = eta56_resonant_condition();
    best = std::abs(reduced::eta56(1.0, l3s));
    for (double f : linspace(0.99, 1.01, 41))
        CHECK(std::abs(reduced::eta56(1.0, l3s * f)) <= best + 1e-6);

    best = k5_amp_value(1.0);
    for (double f : linspace(0.99, 1.01, 41))
        CHECK(reduced::gain5(1.0, k5_amp_condition(1.0) * f) <= best + 1e-6);

    best = k6_amp_value(1.0);
    for (double f : linspace(0.99, 1.01, 41))
        CHECK(reduced::gain6(1.0, k6_amp_condition(1.0) * f) <= best + 1e-6);
}

TEST_CASE("amplification optima formulas are stationary points") {
    for (double Y : {0.0, 0.3, 1.0, 2.0}) {
        const double u5 = k5_amp_condition(Y);
        CHECK(reduced::gain5(Y, u5) == Approx(k5_amp_value(Y)).epsilon(1e-12));
        const double h = 1e-5 * u5;
        CHECK(reduced::gain5(Y, u5 + h) <= k5_amp_value(Y) + 1e-12);
        CHECK(reduced::gain5(Y, u5 - h) <= k5_amp_value(Y) + 1e-12);

        const double u6 = k6_amp_condition(Y);
        CHECK(reduced::gain6(Y, u6) == Approx(k6_amp_value(Y)).epsilon(1e-12));
        CHECK(reduced::gain6(Y, u6 + h) <= k6_amp_value(Y) + 1e-12);
        CHECK(reduced::gain6(Y, u6 - h) <= k6_amp_value(Y) + 1e-12);
    }
}

TEST_CASE("mismatched probe and driving types are configuration errors") {
    auto s = make(1, RatioSet::from_l1_l3(1.0, 1.0), 1.0, 100.0);
    ProbeSpec p{5, 1, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(respond(s.frame, s.rates, s.ratios, p, s.steady), config_error);
}
