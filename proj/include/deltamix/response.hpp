// response.hpp — analytic linear response of the driven circuit: complex
// gains G_1..G_6 and conversion efficiencies eta_1..eta_6, their reduced
// on-resonance limits, and the closed-form optimal operating points.
//
// The general formulas are the two-Lorentzian expressions per (driving type,
// probe type). For driving type 3 the counter-rotating channel responds at
// the conjugate frequency, so the affected denominators enter conjugated;
// this is the form consistent with the first-order master-equation
// solutions, and it reduces to the same on-resonance limits.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "deltamix/core.hpp"
#include "deltamix/model.hpp"

namespace deltamix::response {

using model::CircuitSpec;
using model::Frame;
using model::ProbeSpec;
using model::RateSet;
using model::RatioSet;
using model::SteadyState;

// --------------------------------------------------------------------------
// Results
// --------------------------------------------------------------------------

struct RegimeFlags {
    bool amplifying{false};
    bool attenuating{false};
    bool transparent{false};  // |G| within 1e-9 of 1
};

inline RegimeFlags classify_gain(const cplx& G) {
    RegimeFlags f;
    const double a = std::abs(G);
    if (std::abs(a - 1.0) <= 1e-9)
        f.transparent = true;
    else if (a > 1.0)
        f.amplifying = true;
    else
        f.attenuating = true;
    return f;
}

// Complex gain and conversion efficiency of one probe configuration.
// |efficiency|^2 is the converted photon number per incident probe photon.
struct ResponseResult {
    cplx gain{1.0, 0.0};
    cplx efficiency{0.0, 0.0};
    double input_frequency{0.0};
    double output_frequency{0.0};  // converted output
    bool up_conversion{false};
    RegimeFlags regime;
};

// --------------------------------------------------------------------------
// General (non-reduced) formulas
// --------------------------------------------------------------------------

namespace detail {

inline void check_inputs(const Frame& frame, const RateSet& rates, const RatioSet& ratios,
                         const ProbeSpec& probe, const SteadyState& steady) {
    probe.validate(frame);
    if (rates.driving_type != frame.driving_type || steady.driving_type != frame.driving_type)
        throw config_error("response: frame, rates and steady state disagree on driving type");
    if (std::abs(ratios.lambda3 * rates.lambda21 - rates.lambda32) >
        1e-9 * std::abs(rates.lambda32))
        throw config_error("response: ratio set inconsistent with rate set");
}

}  // namespace detail

inline ResponseResult respond(const Frame& frame, const RateSet& rates, const RatioSet& ratios,
                              const ProbeSpec& probe, const SteadyState& steady) {
    detail::check_inputs(frame, rates, ratios, probe, steady);

    const int k = probe.probe_type;
    const auto [pa, pb] = model::probe_branch_pairs(k);
    const double vA = frame.shifted_gap(pa[0], pa[1]);
    const double vB = frame.shifted_gap(pb[0], pb[1]);
    const double v = (probe.branch == 1 ? vA : vB) + probe.offset;

    const double hk = 0.5 * rates.kappa;
    const double c = frame.cos_half, s = frame.sin_half;
    const double c2 = c * c, s2 = s * s, cs = c * s;
    const double l21 = rates.lambda21, l31 = rates.lambda31, l32 = rates.lambda32;
    const double p1 = steady.population(1), p2 = steady.population(2),
                 p3 = steady.population(3);
    const cplx phase = std::polar(1.0, -probe.phase);

    cplx G, eta;
    switch (k) {
        case 1: {
            const cplx DA = I_UNIT * (vA - v) + 0.5 * rates.dephasing(3, 1);
            const cplx DB = I_UNIT * (vB - v) + 0.5 * rates.dephasing(3, 2);
            G = 1.0 - hk * l31 * c2 * (p1 - p3) / DA - hk * l31 * s2 * (p2 - p3) / DB;
            // relative sign between the channels follows the transformed
            // current tables; only |eta| is branch-symmetric
            eta = hk * std::sqrt(l31 * l32) * cs * ((p1 - p3) / DA - (p2 - p3) / DB);
            break;
        }
        case 2: {
            const cplx DA = I_UNIT * (vA - v) + 0.5 * rates.dephasing(3, 1);
            const cplx DB = I_UNIT * (vB - v) + 0.5 * rates.dephasing(3, 2);
            G = 1.0 - hk * l32 * s2 * (p1 - p3) / DA - hk * l32 * c2 * (p2 - p3) / DB;
            eta = hk * std::sqrt(l31 * l32) * cs * ((p1 - p3) / DA - (p2 - p3) / DB);
            break;
        }
        case 3: {
            const cplx DA = I_UNIT * (vA - v) + 0.5 * rates.dephasing(2, 1);
            const cplx DB = I_UNIT * (vB - v) + 0.5 * rates.dephasing(3, 1);
            G = 1.0 - hk * l31 * s2 * (p1 - p2) / DA - hk * l31 * c2 * (p1 - p3) / DB;
            eta = hk * std::sqrt(l21 * l31) * cs * ((p1 - p2) / DA - (p1 - p3) / DB);
            break;
        }
        case 4: {
            const cplx DA = I_UNIT * (vA - v) + 0.5 * rates.dephasing(2, 1);
            const cplx DB = I_UNIT * (vB - v) + 0.5 * rates.dephasing(3, 1);
            G = 1.0 - hk * l21 * c2 * (p1 - p2) / DA - hk * l21 * s2 * (p1 - p3) / DB;
            eta = hk * std::sqrt(l21 * l31) * cs * ((p1 - p2) / DA - (p1 - p3) / DB);
            break;
        }
        case 5: {
            // second channel responds at the conjugate frequency
            const cplx DA = I_UNIT * (vA - v) + 0.5 * rates.dephasing(2, 1);
            const cplx DB = I_UNIT * (v - vB) + 0.5 * rates.dephasing(3, 2);
            G = 1.0 + hk * l21 * c2 * (p2 - p1) / DA -
                hk * l21 * s2 * (p3 - p2) / std::conj(DB);
            eta = hk * std::sqrt(l32 * l21) * cs *
                  ((p2 - p1) / std::conj(DA) + (p3 - p2) / DB) * phase;
            break;
        }
        case 6: {
            const cplx DA = I_UNIT * (v - vA) + 0.5 * rates.dephasing(2, 1);
            const cplx DB = I_UNIT * (v - vB) + 0.5 * rates.dephasing(3, 2);
            G = 1.0 - hk * l32 * s2 * (p2 - p1) / DA + hk * l32 * c2 * (p3 - p2) / DB;
            eta = -hk * std::sqrt(l21 * l32) * cs *
                  ((p2 - p1) / std::conj(DA) + (p3 - p2) / std::conj(DB)) * phase;
            break;
        }
        default:
            throw config_error("respond: probe_type must be in 1..6");
    }

    ResponseResult r;
    r.gain = G;
    r.efficiency = eta;
    r.input_frequency = model::probe_true_frequency(frame, probe);
    r.output_frequency = model::converted_true_frequency(frame, probe);
    r.up_conversion = r.output_frequency > r.input_frequency;
    r.regime = classify_gain(G);
    return r;
}

inline cplx gain(const Frame& frame, const RateSet& rates, const RatioSet& ratios,
                 const ProbeSpec& probe, const SteadyState& steady) {
    return respond(frame, rates, ratios, probe, steady).gain;
}

inline cplx efficiency(const Frame& frame, const RateSet& rates, const RatioSet& ratios,
                       const ProbeSpec& probe, const SteadyState& steady) {
    return respond(frame, rates, ratios, probe, steady).efficiency;
}

// --------------------------------------------------------------------------
// Reduced on-resonance formulas
// --------------------------------------------------------------------------
//
// All reduced forms are expressed through the branch coordinate Y (= y on
// branch 1, 1/y on branch 2) and, for types 2 and 3, the product coordinate
// U (= lambda2*Y resp. lambda3*Y). Signs follow the published branch forms.

struct Reduced {
    double gain{1.0};
    double efficiency{0.0};
};

namespace reduced {

// driving type 1, probe on the (3,1)/(3,2) dressed line
inline double gain1(double l1, double Y) {
    return 1.0 - l1 / ((l1 + 1.0) * (1.0 + Y) * (1.0 + Y * Y));
}
inline double gain2(double l1, double Y) {
    return 1.0 - Y / ((l1 + 1.0) * (1.0 + Y) * (1.0 + Y * Y));
}
inline double eta12(double l1, double Y) {
    return std::sqrt(l1) * std::sqrt(Y) / ((l1 + 1.0) * (1.0 + Y) * (1.0 + Y * Y));
}

// driving type 2, single coordinate U = lambda2 * Y
inline double gain3(double U) { return 1.0 - U / (1.0 + U); }
inline double gain4(double U) { return 1.0 - 1.0 / (1.0 + U); }
inline double eta34(double U) { return std::sqrt(U) / (1.0 + U); }

// driving type 3, independent coordinates (Y, U = lambda3 * Y)
inline double gain5(double Y, double U) {
    return 1.0 + (U - 1.0) / ((1.0 + Y + U) * (Y * Y + U + 1.0));
}
inline double gain6(double Y, double U) {
    return 1.0 - U * (U - 1.0) / ((1.0 + Y + U) * (1.0 + U + Y * Y));
}
inline double eta56(double Y, double U) {
    return std::sqrt(U) * (U - 1.0) / ((1.0 + Y + U) * (1.0 + U + Y * Y));
}

// sign of the published eta branch forms
inline double eta_sign(int k, int branch) {
    switch (k) {
        case 1: return 1.0;
        case 2:
        case 3:
        case 4:
        case 5: return branch == 1 ? 1.0 : -1.0;
        case 6: return branch == 1 ? -1.0 : 1.0;
        default: throw config_error("eta_sign: bad probe type");
    }
}

}  // namespace reduced

// Type-3 reduced forms over the independent coordinates (Y, U); Y = 0 is the
// detuned limit. branch only fixes the sign of the efficiency.
inline Reduced reduced_type3(int k, int branch, double Y, double U) {
    if (k != 5 && k != 6) throw config_error("reduced_type3: probe type must be 5 or 6");
    if (branch != 1 && branch != 2) throw config_error("reduced_type3: branch must be 1 or 2");
    Reduced r;
    r.gain = (k == 5) ? reduced::gain5(Y, U) : reduced::gain6(Y, U);
    r.efficiency = reduced::eta_sign(k, branch) * reduced::eta56(Y, U);
    return r;
}

// Reduced formulas of the section matching driving type l. The caller is
// responsible for the section's limit assumptions (lambda2, lambda3 >> 1 for
// l = 1; lambda1 >> 1, lambda3 << 1 for l = 2; lambda1, lambda2 << 1 for
// l = 3).
inline Reduced evaluate_reduced(int l, int k, int branch, const RatioSet& ratios, double y) {
    if (branch != 1 && branch != 2) throw config_error("evaluate_reduced: branch must be 1 or 2");
    if (l < 1 || l > 3 || (k != 2 * l - 1 && k != 2 * l))
        throw config_error("evaluate_reduced: probe type does not match driving type");
    const double Y = (branch == 1) ? y : 1.0 / y;
    Reduced r;
    switch (l) {
        case 1:
            r.gain = (k == 1) ? reduced::gain1(ratios.lambda1, Y)
                              : reduced::gain2(ratios.lambda1, Y);
            r.efficiency = reduced::eta_sign(k, branch) * reduced::eta12(ratios.lambda1, Y);
            break;
        case 2: {
            const double U = ratios.lambda2 * Y;
            r.gain = (k == 3) ? reduced::gain3(U) : reduced::gain4(U);
            r.efficiency = reduced::eta_sign(k, branch) * reduced::eta34(U);
            break;
        }
        case 3:
            return reduced_type3(k, branch, Y, ratios.lambda3 * Y);
    }
    return r;
}

// --------------------------------------------------------------------------
// Closed-form optimal points
// --------------------------------------------------------------------------

enum class Regime { detuned, resonant };
enum class Objective { gain, efficiency };
enum class GainSense { automatic, amplify, attenuate };

struct Condition {
    enum Kind { equals, much_greater, much_less };
    std::string param;  // "lambda1", "lambda2", "lambda3", "Y", "U", "y"
    Kind kind{equals};
    double value{0.0};  // for equals
};

// One populated cell of the optimum summary: the constraint set and the
// extremal |G| or |eta| it produces.
struct OptimalPoint {
    int driving_type{1};
    int probe_type{1};
    int branch{1};
    Regime regime{Regime::detuned};
    Objective objective{Objective::gain};
    GainSense sense{GainSense::automatic};
    std::vector<Condition> conditions;
    double value{0.0};
    std::map<std::string, double> auxiliary;
};

namespace detail {

// Newton root of a smooth scalar equation; deterministic seed and tolerance.
template <class F, class dF>
double newton_root(F f, dF df, double x0) {
    double x = x0;
    for (int it = 0; it < 60; ++it) {
        const double step = f(x) / df(x);
        x -= step;
        if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    return x;
}

}  // namespace detail

// Saturation where |eta_1| peaks at lambda1 = 1: root of 5y^3 + 3y^2 + y = 1.
inline double eta12_optimal_saturation() {
    return detail::newton_root([](double x) { return ((5 * x + 3) * x + 1) * x - 1; },
                               [](double x) { return (15 * x + 6) * x + 1; }, 0.36);
}

// Saturation where |G_2| is deepest as lambda1 -> 0: root of 2y^3 + y^2 = 1.
inline double gain2_optimal_saturation() {
    return detail::newton_root([](double x) { return (2 * x + 1) * x * x - 1; },
                               [](double x) { return (6 * x + 2) * x; }, 0.65);
}

// Probe-5 amplification optimum over U at fixed Y.
inline double k5_amp_condition(double Y) {
    return 1.0 + std::sqrt((Y + 2.0) * (Y * Y + 2.0));
}
inline double k5_amp_value(double Y) {
    const double a = std::sqrt(Y + 2.0), b = std::sqrt(Y * Y + 2.0);
    return 1.0 + 1.0 / ((a + b) * (a + b));
}

// Probe-6 amplification optimum over U at fixed Y.
inline double k6_amp_condition(double Y) {
    const double A1 = Y + 2.0, A2 = Y * Y + 2.0, A3 = Y + 1.0, A4 = Y * Y + 1.0;
    return 1.0 / (std::sqrt(A1 * A2 / (A3 * A4)) + 1.0);
}
inline double k6_amp_value(double Y) {
    const double A1 = Y + 2.0, A2 = Y * Y + 2.0, A3 = Y + 1.0, A4 = Y * Y + 1.0;
    const double root = std::sqrt(A1 * A4) + std::sqrt(A2 * A3);
    return 1.0 + 1.0 / (root * root);
}

// Resonant lambda3 maximizing |eta_5|: the larger root of u^2 - 9u + 2 = 0.
inline double eta56_resonant_condition() { return 0.5 * (9.0 + std::sqrt(73.0)); }

inline OptimalPoint optimal_point(int l, int k, int branch, Regime regime, Objective objective,
                                  GainSense sense = GainSense::automatic) {
    if (branch != 1 && branch != 2)
        throw config_error("optimal_point: branch must be 1 or 2");
    if (l < 1 || l > 3 || (k != 2 * l - 1 && k != 2 * l))
        throw config_error("optimal_point: (l, k) pairing invalid");

    OptimalPoint p;
    p.driving_type = l;
    p.probe_type = k;
    p.branch = branch;
    p.regime = regime;
    p.objective = objective;

    const bool resonant = (regime == Regime::resonant);
    auto eq = [](std::string param, double v) {
        return Condition{std::move(param), Condition::equals, v};
    };
    auto gg = [](std::string param) {
        return Condition{std::move(param), Condition::much_greater, 0.0};
    };
    auto ll = [](std::string param) {
        return Condition{std::move(param), Condition::much_less, 0.0};
    };

    if (l == 1) {
        p.sense = GainSense::attenuate;
        if (objective == Objective::efficiency) {
            if (resonant) {
                p.conditions = {eq("lambda1", 1.0), eq("y", 1.0)};
                p.value = 1.0 / 8.0;
            } else {
                const double ys = eta12_optimal_saturation();
                p.conditions = {eq("lambda1", 1.0), eq("Y", ys)};
                p.value = reduced::eta12(1.0, ys);
            }
        } else if (k == 1) {
            if (resonant) {
                p.conditions = {gg("lambda1"), eq("y", 1.0)};
                p.value = 3.0 / 4.0;
            } else {
                p.conditions = {gg("lambda1"), ll("Y")};
                p.value = 0.0;
            }
        } else {  // k == 2 gain
            if (resonant) {
                p.conditions = {ll("lambda1"), eq("y", 1.0)};
                p.value = 3.0 / 4.0;
            } else {
                const double yc = gain2_optimal_saturation();
                p.conditions = {ll("lambda1"), eq("Y", yc)};
                p.value = reduced::gain2(0.0, yc);
            }
        }
        return p;
    }

    if (l == 2) {
        p.sense = GainSense::attenuate;
        if (objective == Objective::efficiency) {
            if (resonant)
                p.conditions = {eq("lambda2", 1.0), eq("y", 1.0)};
            else
                p.conditions = {eq("U", 1.0)};
            p.value = 0.5;
        } else {
            if (k == 3)
                p.conditions = resonant ? std::vector<Condition>{gg("lambda2"), eq("y", 1.0)}
                                        : std::vector<Condition>{gg("U")};
            else
                p.conditions = resonant ? std::vector<Condition>{ll("lambda2"), eq("y", 1.0)}
                                        : std::vector<Condition>{ll("U")};
            p.value = 0.0;
        }
        return p;
    }

    // l == 3
    if (objective == Objective::efficiency) {
        p.sense = GainSense::amplify;
        if (sense == GainSense::attenuate)
            throw not_tabulated_error("optimal_point: no efficiency cell on attenuation rows");
        if (resonant) {
            const double l3 = eta56_resonant_condition();
            p.conditions = {eq("lambda3", l3), eq("y", 1.0)};
            p.value = std::abs(reduced::eta56(1.0, l3));
        } else {
            p.conditions = {eq("U", 3.0 + 2.0 * std::sqrt(2.0)),
                            eq("U", 3.0 - 2.0 * std::sqrt(2.0)), ll("Y")};
            p.value = 0.25;
        }
        return p;
    }

    if (sense == GainSense::automatic)
        throw config_error("optimal_point: driving type 3 gain needs an explicit sense");
    p.sense = sense;
    const bool amplify = (sense == GainSense::amplify);
    if (k == 5) {
        if (amplify) {
            if (resonant) {
                p.conditions = {eq("lambda3", 4.0), eq("y", 1.0)};
                p.value = 13.0 / 12.0;
                p.auxiliary = {{"A1", 3.0}, {"A2", 3.0}};
            } else {
                p.conditions = {eq("U", 3.0), ll("Y")};
                p.value = 9.0 / 8.0;
                p.auxiliary = {{"A1", 2.0}, {"A2", 2.0}};
            }
        } else {
            if (resonant) {
                p.conditions = {ll("lambda3"), eq("y", 1.0)};
                p.value = 3.0 / 4.0;
            } else {
                p.conditions = {ll("U"), ll("Y")};
                p.value = 0.0;
            }
        }
    } else {  // k == 6
        if (amplify) {
            if (resonant) {
                p.conditions = {eq("lambda3", 0.4), eq("y", 1.0)};
                p.value = 25.0 / 24.0;
                p.auxiliary = {{"A1", 3.0}, {"A2", 3.0}, {"A3", 2.0}, {"A4", 2.0}};
            } else {
                p.conditions = {eq("U", 1.0 / 3.0), ll("Y")};
                p.value = 9.0 / 8.0;
                p.auxiliary = {{"A1", 2.0}, {"A2", 2.0}, {"A3", 1.0}, {"A4", 1.0}};
            }
        } else {
            if (resonant)
                p.conditions = {gg("lambda3"), eq("y", 1.0)};
            else
                p.conditions = {gg("U")};
            p.value = 0.0;
        }
    }
    return p;
}

}  // namespace deltamix::response
