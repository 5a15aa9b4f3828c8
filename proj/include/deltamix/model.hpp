// model.hpp — driven three-level Delta-type circuit in an open 1-D line:
// domain types, rotating frames per driving type, transformed loop-current
// harmonics, and the relaxation/dephasing rate tables they imply.
//
// Conventions used throughout:
//   * level indices m, n are physical (1, 2, 3); matrices are stored 0-based
//   * theta_l is the frame mixing angle, tan(theta) = 2*Omega/Delta,
//     theta in [0, pi); y = tan^2(theta/2) is the saturation parameter
//   * all rates are expressed against gamma_u = M^2 lambda21 / (hbar Z_T);
//     the default constructors pick units with gamma_u = 1
#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "deltamix/core.hpp"

namespace deltamix::model {

using Mat3c = Eigen::Matrix3cd;
using Mat3d = Eigen::Matrix3d;

// --------------------------------------------------------------------------
// Circuit description
// --------------------------------------------------------------------------

// Bare three-level circuit coupled to the line: transition frequencies,
// loop-current matrix elements, and the coupling constants that fix the
// rate unit gamma_u = M^2 lambda21 / (hbar Z_T).
struct CircuitSpec {
    double omega21{0.0};
    double omega31{0.0};
    Mat3c current_elements{Mat3c::Zero()};
    double mutual_inductance{1.0};
    double line_impedance{1.0};
    double hbar{1.0};

    double omega32() const { return omega31 - omega21; }

    // Bare level frequency, level 1 at zero.
    double level_frequency(int m) const {
        switch (m) {
            case 1: return 0.0;
            case 2: return omega21;
            case 3: return omega31;
            default: throw config_error("CircuitSpec: level index out of range");
        }
    }

    // Signed bare transition frequency omega_m - omega_n.
    double omega(int m, int n) const { return level_frequency(m) - level_frequency(n); }

    cplx current(int m, int n) const { return current_elements(m - 1, n - 1); }

    // Relaxation weight lambda_mn = |I_mn|^2 * omega_mn, m > n.
    double lambda(int m, int n) const {
        if (m <= n) throw config_error("CircuitSpec::lambda requires m > n");
        return std::norm(current(m, n)) * omega(m, n);
    }
    double lambda21() const { return lambda(2, 1); }
    double lambda31() const { return lambda(3, 1); }
    double lambda32() const { return lambda(3, 2); }

    double kappa() const {
        return mutual_inductance * mutual_inductance / (hbar * line_impedance);
    }
    double gamma_u() const { return kappa() * lambda21(); }

    void validate() const {
        if (!(omega21 > 0.0) || !(omega31 > omega21))
            throw config_error("CircuitSpec: need omega31 > omega21 > 0");
        if (!(mutual_inductance > 0.0) || !(line_impedance > 0.0) || !(hbar > 0.0))
            throw config_error("CircuitSpec: M, Z_T, hbar must be positive");
        if (!current_elements.isApprox(current_elements.adjoint(), 1e-12))
            throw config_error("CircuitSpec: current_elements must be Hermitian");
        if (!(lambda21() > 0.0))
            throw config_error("CircuitSpec: lambda21 must be positive");
    }
};

// --------------------------------------------------------------------------
// Relaxation-weight ratios
// --------------------------------------------------------------------------

// The three pairwise ratios of the lambda weights. Only two are independent:
// lambda1 = lambda31/lambda32, lambda2 = lambda31/lambda21,
// lambda3 = lambda32/lambda21, so lambda1 * lambda3 = lambda2.
struct RatioSet {
    double lambda1{1.0};
    double lambda2{1.0};
    double lambda3{1.0};
    double rate_unit{1.0};  // gamma_u the ratios are quoted against

    static RatioSet from_l1_l3(double l1, double l3, double unit = 1.0) {
        RatioSet r{l1, l1 * l3, l3, unit};
        r.validate();
        return r;
    }
    static RatioSet from_l2_l3(double l2, double l3, double unit = 1.0) {
        RatioSet r{l2 / l3, l2, l3, unit};
        r.validate();
        return r;
    }
    static RatioSet from_l1_l2(double l1, double l2, double unit = 1.0) {
        RatioSet r{l1, l2, l2 / l1, unit};
        r.validate();
        return r;
    }

    void validate() const {
        if (!(lambda1 > 0.0) || !(lambda2 > 0.0) || !(lambda3 > 0.0))
            throw config_error("RatioSet: ratios must be positive");
        if (std::abs(lambda1 * lambda3 - lambda2) > 1e-12 * std::abs(lambda2))
            throw config_error("RatioSet: lambda1*lambda3 must equal lambda2");
    }
};

// Default bare frequencies keep the dressed splitting tiny against the
// transitions while avoiding commensurate spacings.
inline constexpr double kDefaultOmega21 = 1.0e6;
inline constexpr double kDefaultOmega31 = 2.3e6;

// Build a circuit in normalized units (hbar = M = Z_T = 1, lambda21 = 1)
// realizing the requested lambda ratios. Diagonal current elements are zero;
// they do not enter any first-order observable.
inline CircuitSpec circuit_from_ratios(const RatioSet& r,
                                       double omega21 = kDefaultOmega21,
                                       double omega31 = kDefaultOmega31) {
    r.validate();
    CircuitSpec c;
    c.omega21 = omega21;
    c.omega31 = omega31;
    c.current_elements.setZero();
    auto set = [&c](int m, int n, double value) {
        c.current_elements(m - 1, n - 1) = value;
        c.current_elements(n - 1, m - 1) = value;
    };
    set(2, 1, std::sqrt(1.0 / omega21));
    set(3, 1, std::sqrt(r.lambda2 / omega31));
    set(3, 2, std::sqrt(r.lambda3 / (omega31 - omega21)));
    c.validate();
    return c;
}

inline RatioSet ratios_of(const CircuitSpec& c) {
    return RatioSet{c.lambda31() / c.lambda32(), c.lambda31() / c.lambda21(),
                    c.lambda32() / c.lambda21(), c.gamma_u()};
}

// --------------------------------------------------------------------------
// Drive
// --------------------------------------------------------------------------

// Strong drive on one transition: type 1 drives 1<->2, type 2 drives 2<->3,
// type 3 drives 1<->3. Detuning Delta = omega_transition - omega_drive.
struct DriveSpec {
    int driving_type{1};
    double detuning{0.0};
    double rabi{0.0};  // Omega, real and non-negative

    double splitting() const {
        return std::sqrt(4.0 * rabi * rabi + detuning * detuning);
    }

    // Driven bare transition frequency.
    static double driven_transition(int type, const CircuitSpec& c) {
        switch (type) {
            case 1: return c.omega21;
            case 2: return c.omega32();
            case 3: return c.omega31;
            default: throw config_error("DriveSpec: driving_type must be 1, 2 or 3");
        }
    }

    double drive_frequency(const CircuitSpec& c) const {
        return driven_transition(driving_type, c) - detuning;
    }

    // Drive that realizes saturation y at dressed splitting S.
    static DriveSpec from_saturation(int type, double y, double S) {
        if (!(S > 0.0) || !(y >= 0.0))
            throw config_error("DriveSpec: need S > 0 and y >= 0");
        DriveSpec d;
        d.driving_type = type;
        d.detuning = S * (1.0 - y) / (1.0 + y);
        d.rabi = S * std::sqrt(y) / (1.0 + y);
        return d;
    }

    void validate() const {
        if (driving_type < 1 || driving_type > 3)
            throw config_error("DriveSpec: driving_type must be 1, 2 or 3");
        if (!(rabi >= 0.0)) throw config_error("DriveSpec: rabi must be >= 0");
    }
};

// --------------------------------------------------------------------------
// Rotating frame
// --------------------------------------------------------------------------

// Drive-diagonalized rotating frame. Level energies are split into a large
// integer-carrier part (AffineFreq over the bare transitions) and a small
// residual; all response algebra runs on the residuals so that detunings
// never lose precision to the bare scale.
struct Frame {
    int driving_type{1};
    double theta{0.0};
    double y{0.0};
    double splitting{0.0};  // S = sqrt(4 Omega^2 + Delta^2)
    double detuning{0.0};
    double rabi{0.0};

    double cos_half{1.0};  // cos(theta/2) >= 0
    double sin_half{0.0};  // sin(theta/2) >= 0

    std::array<double, 3> shifted{};      // dressed energy residuals (small)
    std::array<AffineFreq, 3> carrier{};  // per-level bare reference (large)
    AffineFreq drive_freq{};              // omega_d as an affine frequency

    double omega21_bare{0.0};
    double omega31_bare{0.0};

    double shifted_level(int m) const { return shifted[m - 1]; }
    // Shifted dressed gap omega_m - omega_n; exact in the small variables.
    double shifted_gap(int m, int n) const { return shifted[m - 1] - shifted[n - 1]; }

    double carrier_value(int m) const {
        return carrier[m - 1].value(omega21_bare, omega31_bare);
    }
    // True dressed eigenfrequency of level m.
    double eigenfrequency(int m) const { return carrier_value(m) + shifted_level(m); }
    // True dressed transition frequency omega_mn^(l).
    double gap(int m, int n) const {
        return (carrier[m - 1] - carrier[n - 1]).value(omega21_bare, omega31_bare) +
               shifted_gap(m, n);
    }

    double drive_frequency() const { return drive_freq.value(omega21_bare, omega31_bare); }
};

inline Frame derive_frame(const CircuitSpec& circuit, const DriveSpec& drive) {
    circuit.validate();
    drive.validate();
    if (drive.rabi == 0.0 && drive.detuning == 0.0)
        throw degenerate_drive_error("derive_frame: Omega = Delta = 0 leaves the frame undefined");

    Frame f;
    f.driving_type = drive.driving_type;
    f.detuning = drive.detuning;
    f.rabi = drive.rabi;
    f.splitting = drive.splitting();
    f.theta = std::atan2(2.0 * drive.rabi, drive.detuning);

    const double S = f.splitting;
    const double D = drive.detuning;
    // Half-angle quantities from (S, Delta): stable at both theta -> 0, pi.
    f.cos_half = std::sqrt(0.5 * (S + D) / S);
    f.sin_half = std::sqrt(0.5 * (S - D) / S);
    f.y = (S - D) / (S + D);

    f.omega21_bare = circuit.omega21;
    f.omega31_bare = circuit.omega31;

    const double lo = 0.5 * (D - S);
    const double hi = 0.5 * (D + S);
    switch (drive.driving_type) {
        case 1:
            f.shifted = {lo, hi, 0.0};
            f.carrier = {AffineFreq{}, AffineFreq{}, AffineFreq{0, 1, 0.0}};
            f.drive_freq = AffineFreq{1, 0, -D};
            break;
        case 2:
            f.shifted = {0.0, lo, hi};
            f.carrier = {AffineFreq{}, AffineFreq{1, 0, 0.0}, AffineFreq{1, 0, 0.0}};
            f.drive_freq = AffineFreq{-1, 1, -D};
            break;
        case 3:
            f.shifted = {lo, 0.0, hi};
            f.carrier = {AffineFreq{}, AffineFreq{1, 0, 0.0}, AffineFreq{}};
            f.drive_freq = AffineFreq{0, 1, -D};
            break;
        default:
            throw config_error("derive_frame: driving_type must be 1, 2 or 3");
    }
    return f;
}

// --------------------------------------------------------------------------
// Transformed loop-current harmonics
// --------------------------------------------------------------------------

// One Fourier entry of the frame-transformed loop current:
// Ibar_mn(t) contains amplitude * exp(i * nu_multiple * omega_d * t).
struct HarmonicEntry {
    int m{1};
    int n{1};
    int nu_multiple{0};    // nu = nu_multiple * omega_d in {-1, 0, +1}
    cplx amplitude{0.0};   // Ibar_mn,k
    double source_omega{0.0};  // bare |omega_pq| of the underlying element; 0 for diagonal
    double delta_exact{0.0};   // omega_mn^(l) + nu (true scale)
    double delta_bare{0.0};    // sign(delta_exact) * source_omega
};

struct HarmonicCurrent {
    int driving_type{1};
    double drive_frequency{0.0};
    std::vector<HarmonicEntry> entries;

    const HarmonicEntry* find(int m, int n, int nu) const {
        for (const auto& e : entries)
            if (e.m == m && e.n == n && e.nu_multiple == nu) return &e;
        return nullptr;
    }
};

namespace detail {

inline void push_harmonic(std::vector<HarmonicEntry>& out, const Frame& frame,
                          int m, int n, int nu, cplx amplitude, double source_omega) {
    HarmonicEntry e;
    e.m = m;
    e.n = n;
    e.nu_multiple = nu;
    e.amplitude = amplitude;
    e.source_omega = source_omega;
    e.delta_exact = frame.gap(m, n) + nu * frame.drive_frequency();
    e.delta_bare = (e.delta_exact >= 0.0 ? source_omega : -source_omega);
    out.push_back(e);
}

}  // namespace detail

// Complete harmonic decomposition of the transformed loop current for the
// frame's driving type. Every (m, n) pair appears, and entries come in
// Hermitian-conjugate pairs (n, m, conj, -nu).
inline HarmonicCurrent loop_current_harmonics(const Frame& frame, const CircuitSpec& circuit) {
    const double c = frame.cos_half;
    const double s = frame.sin_half;
    const double c2 = c * c, s2 = s * s, cs = c * s;
    const auto I = [&circuit](int m, int n) { return circuit.current(m, n); };

    HarmonicCurrent h;
    h.driving_type = frame.driving_type;
    h.drive_frequency = frame.drive_frequency();
    auto& v = h.entries;
    auto add = [&](int m, int n, int nu, cplx amp, double w_src) {
        detail::push_harmonic(v, frame, m, n, nu, amp, w_src);
    };
    const double w21 = circuit.omega21;
    const double w31 = circuit.omega31;
    const double w32 = circuit.omega32();

    switch (frame.driving_type) {
        case 1:
            // drive axis 1<->2; level 3 untouched
            add(1, 1, 0, I(1, 1) * c2 + I(2, 2) * s2, 0.0);
            add(1, 1, -1, -I(1, 2) * cs, w21);
            add(1, 1, +1, -I(2, 1) * cs, w21);
            add(2, 2, 0, I(1, 1) * s2 + I(2, 2) * c2, 0.0);
            add(2, 2, -1, I(1, 2) * cs, w21);
            add(2, 2, +1, I(2, 1) * cs, w21);
            add(3, 3, 0, I(3, 3), 0.0);
            add(2, 1, 0, (I(1, 1) - I(2, 2)) * cs, 0.0);
            add(2, 1, -1, -I(1, 2) * s2, w21);
            add(2, 1, +1, I(2, 1) * c2, w21);
            add(1, 2, 0, (I(1, 1) - I(2, 2)) * cs, 0.0);
            add(1, 2, +1, -I(2, 1) * s2, w21);
            add(1, 2, -1, I(1, 2) * c2, w21);
            add(3, 1, 0, I(3, 1) * c, w31);
            add(3, 1, -1, -I(3, 2) * s, w32);
            add(1, 3, 0, I(1, 3) * c, w31);
            add(1, 3, +1, -I(2, 3) * s, w32);
            add(3, 2, 0, I(3, 1) * s, w31);
            add(3, 2, -1, I(3, 2) * c, w32);
            add(2, 3, 0, I(1, 3) * s, w31);
            add(2, 3, +1, I(2, 3) * c, w32);
            break;
        case 2:
            // drive axis 2<->3; level 1 untouched
            add(1, 1, 0, I(1, 1), 0.0);
            add(2, 2, 0, I(2, 2) * c2 + I(3, 3) * s2, 0.0);
            add(2, 2, -1, -I(2, 3) * cs, w32);
            add(2, 2, +1, -I(3, 2) * cs, w32);
            add(3, 3, 0, I(2, 2) * s2 + I(3, 3) * c2, 0.0);
            add(3, 3, -1, I(2, 3) * cs, w32);
            add(3, 3, +1, I(3, 2) * cs, w32);
            add(2, 1, 0, I(2, 1) * c, w21);
            add(2, 1, +1, -I(3, 1) * s, w31);
            add(1, 2, 0, I(1, 2) * c, w21);
            add(1, 2, -1, -I(1, 3) * s, w31);
            add(3, 1, 0, I(2, 1) * s, w21);
            add(3, 1, +1, I(3, 1) * c, w31);
            add(1, 3, 0, I(1, 2) * s, w21);
            add(1, 3, -1, I(1, 3) * c, w31);
            add(3, 2, 0, (I(2, 2) - I(3, 3)) * cs, 0.0);
            add(3, 2, -1, -I(2, 3) * s2, w32);
            add(3, 2, +1, I(3, 2) * c2, w32);
            add(2, 3, 0, (I(2, 2) - I(3, 3)) * cs, 0.0);
            add(2, 3, +1, -I(3, 2) * s2, w32);
            add(2, 3, -1, I(2, 3) * c2, w32);
            break;
        case 3:
            // drive axis 1<->3; level 2 untouched
            add(1, 1, 0, I(1, 1) * c2 + I(3, 3) * s2, 0.0);
            add(1, 1, -1, -I(1, 3) * cs, w31);
            add(1, 1, +1, -I(3, 1) * cs, w31);
            add(2, 2, 0, I(2, 2), 0.0);
            add(3, 3, 0, I(1, 1) * s2 + I(3, 3) * c2, 0.0);
            add(3, 3, -1, I(1, 3) * cs, w31);
            add(3, 3, +1, I(3, 1) * cs, w31);
            add(2, 1, 0, I(2, 1) * c, w21);
            add(2, 1, -1, -I(2, 3) * s, w32);
            add(1, 2, 0, I(1, 2) * c, w21);
            add(1, 2, +1, -I(3, 2) * s, w32);
            add(3, 1, 0, (I(1, 1) - I(3, 3)) * cs, 0.0);
            add(3, 1, -1, -I(1, 3) * s2, w31);
            add(3, 1, +1, I(3, 1) * c2, w31);
            add(1, 3, 0, (I(1, 1) - I(3, 3)) * cs, 0.0);
            add(1, 3, +1, -I(3, 1) * s2, w31);
            add(1, 3, -1, I(1, 3) * c2, w31);
            add(3, 2, 0, I(1, 2) * s, w21);
            add(3, 2, +1, I(3, 2) * c, w32);
            add(2, 3, 0, I(2, 1) * s, w21);
            add(2, 3, -1, I(2, 3) * c, w32);
            break;
        default:
            throw config_error("loop_current_harmonics: bad driving type");
    }
    return h;
}

// --------------------------------------------------------------------------
// Rate tables
// --------------------------------------------------------------------------

// Dimensionless K weights and the relaxation/dephasing rates they induce:
// gamma_mn = kappa * K_mn (population transfer m -> n) and
// Gamma_mn = kappa * (sum_k K_mk + sum_k K_nk + K_phi_mn).
struct RateSet {
    int driving_type{1};
    double kappa{1.0};
    double lambda21{1.0};
    double lambda31{1.0};
    double lambda32{1.0};
    double lambda_sum{3.0};
    Mat3d K{Mat3d::Zero()};
    Mat3d K_phi{Mat3d::Zero()};
    Mat3d gamma{Mat3d::Zero()};
    Mat3d Gamma{Mat3d::Zero()};

    double k_weight(int m, int n) const { return K(m - 1, n - 1); }
    double k_phi(int m, int n) const { return K_phi(m - 1, n - 1); }
    double relaxation(int m, int n) const { return gamma(m - 1, n - 1); }
    double dephasing(int m, int n) const { return Gamma(m - 1, n - 1); }
};

inline RateSet decay_rates(const Frame& frame, const CircuitSpec& circuit) {
    const double c2 = frame.cos_half * frame.cos_half;
    const double s2 = frame.sin_half * frame.sin_half;
    const double l21 = circuit.lambda21();
    const double l31 = circuit.lambda31();
    const double l32 = circuit.lambda32();

    RateSet r;
    r.driving_type = frame.driving_type;
    r.kappa = circuit.kappa();
    r.lambda21 = l21;
    r.lambda31 = l31;
    r.lambda32 = l32;
    r.lambda_sum = l21 + l31 + l32;

    auto K = [&r](int m, int n) -> double& { return r.K(m - 1, n - 1); };
    auto Kphi = [&r](int m, int n, double value) {
        r.K_phi(m - 1, n - 1) = value;
        r.K_phi(n - 1, m - 1) = value;
    };

    switch (frame.driving_type) {
        case 1:
            K(2, 1) = c2 * c2 * l21;
            K(1, 2) = s2 * s2 * l21;
            K(3, 1) = c2 * l31 + s2 * l32;
            K(3, 2) = s2 * l31 + c2 * l32;
            Kphi(2, 1, 4.0 * c2 * s2 * l21);
            Kphi(3, 1, c2 * s2 * l21);
            Kphi(3, 2, c2 * s2 * l21);
            break;
        case 2:
            K(2, 1) = c2 * l21 + s2 * l31;
            K(3, 1) = s2 * l21 + c2 * l31;
            K(3, 2) = c2 * c2 * l32;
            K(2, 3) = s2 * s2 * l32;
            Kphi(2, 1, c2 * s2 * l32);
            Kphi(3, 1, c2 * s2 * l32);
            Kphi(3, 2, 4.0 * c2 * s2 * l32);
            break;
        case 3:
            K(2, 1) = c2 * l21;
            K(2, 3) = s2 * l21;
            K(1, 2) = s2 * l32;
            K(3, 2) = c2 * l32;
            K(3, 1) = c2 * c2 * l31;
            K(1, 3) = s2 * s2 * l31;
            Kphi(2, 1, c2 * s2 * l31);
            Kphi(3, 1, 4.0 * c2 * s2 * l31);
            Kphi(3, 2, c2 * s2 * l31);
            break;
        default:
            throw config_error("decay_rates: bad driving type");
    }

    r.gamma = r.kappa * r.K;
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 3; ++n) {
            if (m == n) continue;
            double loss = 0.0;
            for (int k = 1; k <= 3; ++k) {
                if (k != m) loss += r.k_weight(m, k);
                if (k != n) loss += r.k_weight(n, k);
            }
            r.Gamma(m - 1, n - 1) = r.kappa * (loss + r.k_phi(m, n));
        }
    }
    return r;
}

// --------------------------------------------------------------------------
// Zero-order steady state
// --------------------------------------------------------------------------

struct SteadyState {
    int driving_type{1};
    std::array<double, 3> populations{};  // diagonal of the zero-order state

    double population(int m) const { return populations[m - 1]; }
};

// Closed-form populations of the drive-only steady state. Written in
// half-angle powers so the theta -> 0, pi endpoints stay finite.
inline SteadyState steady_state(const Frame& frame, const RateSet& rates) {
    if (frame.driving_type != rates.driving_type)
        throw config_error("steady_state: frame and rates disagree on driving type");
    const double c2 = frame.cos_half * frame.cos_half;
    const double s2 = frame.sin_half * frame.sin_half;
    const double c4 = c2 * c2, s4 = s2 * s2;

    SteadyState st;
    st.driving_type = frame.driving_type;
    switch (frame.driving_type) {
        case 1: {
            const double norm = c4 + s4;
            st.populations = {c4 / norm, s4 / norm, 0.0};
            break;
        }
        case 2:
            st.populations = {1.0, 0.0, 0.0};
            break;
        case 3: {
            const double l21 = rates.lambda21, l32 = rates.lambda32;
            const double norm = l21 * s4 + l32 * s2 * c2 + l21 * c4;
            st.populations = {l21 * c4 / norm, l32 * s2 * c2 / norm, l21 * s4 / norm};
            break;
        }
        default:
            throw config_error("steady_state: bad driving type");
    }
    return st;
}

// --------------------------------------------------------------------------
// Probe addressing
// --------------------------------------------------------------------------

// Weak probe selection. The probe frequency is addressed as (branch, offset):
// branch picks which dressed resonance of the matching probe variable the
// probe sits on, offset shifts it in rate units. amplitude/phase describe the
// incident current phasor I~_pk (used by the numeric oracle only).
struct ProbeSpec {
    int probe_type{1};  // 1..6, paired with driving type l as k = 2l-1 or 2l
    int branch{1};      // 1 or 2
    double offset{0.0};
    double amplitude{0.0};
    double phase{0.0};

    int driving_type() const { return (probe_type + 1) / 2; }

    // literal incident phasor; zero amplitude means no drive
    cplx phasor() const { return std::polar(amplitude, phase); }
    // unit-normalized phasor for amplitude-independent response ratios
    cplx effective_phasor() const {
        return std::polar(amplitude == 0.0 ? 1.0 : amplitude, phase);
    }

    void validate(const Frame& frame) const {
        if (probe_type < 1 || probe_type > 6)
            throw config_error("ProbeSpec: probe_type must be in 1..6");
        if (driving_type() != frame.driving_type)
            throw config_error("ProbeSpec: probe type " + std::to_string(probe_type) +
                               " does not belong to driving type " +
                               std::to_string(frame.driving_type));
        if (branch != 1 && branch != 2)
            throw config_error("ProbeSpec: branch must be 1 or 2");
        if (!(amplitude >= 0.0)) throw config_error("ProbeSpec: amplitude must be >= 0");
        if (!std::isfinite(offset)) throw config_error("ProbeSpec: offset must be finite");
    }
};

// Dressed index pair (i, j) whose shifted gap locates the branch resonance of
// the probe variable for probe type k. Branch 1 is listed first.
inline std::pair<std::array<int, 2>, std::array<int, 2>> probe_branch_pairs(int k) {
    switch (k) {
        case 1:
        case 2: return {{3, 1}, {3, 2}};
        case 3:
        case 4: return {{2, 1}, {3, 1}};
        case 5:
        case 6: return {{2, 1}, {2, 3}};
        default: throw config_error("probe_branch_pairs: probe_type must be in 1..6");
    }
}

// Shifted resonance position of the probe variable on the given branch.
inline double branch_resonance_shifted(const Frame& frame, int k, int branch) {
    auto [a, b] = probe_branch_pairs(k);
    const auto& p = (branch == 1) ? a : b;
    return frame.shifted_gap(p[0], p[1]);
}

// Shifted drive frequency of the reduced probe Hamiltonian (small numbers).
inline double probe_variable_shifted(const Frame& frame, const ProbeSpec& probe) {
    probe.validate(frame);
    return branch_resonance_shifted(frame, probe.probe_type, probe.branch) + probe.offset;
}

// True (laboratory) probe frequency omega_k.
inline double probe_true_frequency(const Frame& frame, const ProbeSpec& probe) {
    probe.validate(frame);
    auto [a, b] = probe_branch_pairs(probe.probe_type);
    const auto& p = (probe.branch == 1) ? a : b;
    const double variable = frame.gap(p[0], p[1]) + probe.offset;
    switch (probe.probe_type) {
        case 1:
        case 4:
        case 5: return variable;                             // probe variable is omega_k
        case 2: return variable - frame.drive_frequency();   // variable = omega_k + omega_d
        case 3: return variable + frame.drive_frequency();   // variable = omega_k - omega_d
        case 6: return frame.drive_frequency() - variable;   // variable = omega_d - omega_k
        default: throw config_error("probe_true_frequency: bad probe type");
    }
}

// True frequency of the converted output for probe type k.
inline double converted_true_frequency(const Frame& frame, const ProbeSpec& probe) {
    const double wk = probe_true_frequency(frame, probe);
    const double wd = frame.drive_frequency();
    switch (probe.probe_type) {
        case 1: return wk - wd;  // difference frequency
        case 2: return wk + wd;  // sum frequency
        case 3: return wk - wd;
        case 4: return wk + wd;
        case 5: return wd - wk;
        case 6: return wd - wk;
        default: throw config_error("converted_true_frequency: bad probe type");
    }
}

// Bare-scale photon-flux factor sqrt(omega_in / omega_out); evaluated on the
// bare transitions so it cancels exactly against the radiation weights.
inline double photon_flux_factor(const CircuitSpec& circuit, int k) {
    const double w21 = circuit.omega21, w31 = circuit.omega31, w32 = circuit.omega32();
    switch (k) {
        case 1: return std::sqrt(w31 / w32);
        case 2: return std::sqrt(w32 / w31);
        case 3: return std::sqrt(w31 / w21);
        case 4: return std::sqrt(w21 / w31);
        case 5: return std::sqrt(w21 / w32);
        case 6: return std::sqrt(w32 / w21);
        default: throw config_error("photon_flux_factor: bad probe type");
    }
}

// Output frequency labels as integer combinations a*omega_d + b*omega_k.
struct OutputLabels {
    std::pair<int, int> gain;       // transmitted component
    std::pair<int, int> converted;  // frequency-converted component
};

inline OutputLabels output_labels(int k) {
    switch (k) {
        case 1: return {{0, 1}, {-1, 1}};
        case 2: return {{0, 1}, {+1, 1}};
        case 3: return {{0, 1}, {-1, 1}};
        case 4: return {{0, 1}, {+1, 1}};
        case 5: return {{0, 1}, {+1, -1}};
        case 6: return {{0, 1}, {+1, -1}};
        default: throw config_error("output_labels: bad probe type");
    }
}

}  // namespace deltamix::model
