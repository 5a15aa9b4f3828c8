// lindblad.hpp — independent numerical oracle for the driven three-level
// circuit: steady state and first-order linear response as linear-algebra
// problems on the vectorized master equation, nonperturbative time-domain
// integration with least-squares demodulation, and reconstruction of the
// scattered-current spectral amplitudes.
//
// Everything works in a carrier-shifted rotating frame: the large bare
// transition frequencies are removed per level (they re-enter only through
// the integer-labelled output frequencies and the bare radiation weights),
// so the dynamics contains small frequencies only.
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "deltamix/core.hpp"
#include "deltamix/model.hpp"
#include "deltamix/ode.hpp"
#include "deltamix/response.hpp"

namespace deltamix::lindblad {

using model::CircuitSpec;
using model::Frame;
using model::HarmonicCurrent;
using model::ProbeSpec;
using model::RateSet;
using model::SteadyState;

using Mat3c = Eigen::Matrix3cd;
using Vec9 = Eigen::Matrix<cplx, 9, 1>;
using Mat9 = Eigen::Matrix<cplx, 9, 9>;
using Label = std::pair<int, int>;  // frequency key a*omega_d + b*omega_p

inline int vec_index(int m, int n) { return 3 * (m - 1) + (n - 1); }

inline Vec9 vectorize(const Mat3c& rho) {
    Vec9 v;
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) v[vec_index(m, n)] = rho(m - 1, n - 1);
    return v;
}

inline Mat3c unvectorize(const Vec9& v) {
    Mat3c rho;
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) rho(m - 1, n - 1) = v[vec_index(m, n)];
    return rho;
}

// --------------------------------------------------------------------------
// Density matrix with order tag
// --------------------------------------------------------------------------

struct DensityMatrix {
    enum class Order { zero, first, full };
    Mat3c rho{Mat3c::Zero()};
    Order order{Order::zero};

    double trace_error() const {
        double target = (order == Order::first) ? 0.0 : 1.0;
        return std::abs(rho.trace() - cplx{target, 0.0});
    }
    double hermiticity_error() const {
        return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    }
    double min_eigenvalue() const {
        Eigen::SelfAdjointEigenSolver<Mat3c> es(0.5 * (rho + rho.adjoint()));
        return es.eigenvalues().minCoeff();
    }
};

// --------------------------------------------------------------------------
// Liouvillian
// --------------------------------------------------------------------------

// Generator A of the drive-only master equation on vec(rho): coherent part
// from the shifted dressed energies, population exchange via gamma_mk, and
// coherence decay at Gamma_mn / 2.
inline Mat9 liouvillian(const Frame& frame, const RateSet& rates) {
    if (frame.driving_type != rates.driving_type)
        throw config_error("liouvillian: frame and rates disagree on driving type");
    Mat9 A = Mat9::Zero();
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 3; ++n) {
            if (m == n) continue;
            const int i = vec_index(m, n);
            A(i, i) = -I_UNIT * frame.shifted_gap(m, n) - 0.5 * rates.dephasing(m, n);
        }
    }
    for (int m = 1; m <= 3; ++m) {
        const int i = vec_index(m, m);
        for (int k = 1; k <= 3; ++k) {
            if (k == m) continue;
            A(i, vec_index(k, k)) += rates.relaxation(k, m);
            A(i, i) -= rates.relaxation(m, k);
        }
    }
    return A;
}

inline Eigen::Matrix<cplx, 9, 1> liouvillian_eigenvalues(const Mat9& A) {
    Eigen::ComplexEigenSolver<Mat9> es(A, false);
    return es.eigenvalues();
}

// Null-space steady state with trace normalization.
inline DensityMatrix steady_state_numeric(const Frame& frame, const RateSet& rates) {
    const Mat9 A = liouvillian(frame, rates);
    Eigen::JacobiSVD<Mat9> svd(A, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double scale = sv(0);
    if (sv(7) < 1e-10 * scale)
        throw degeneracy_error("steady_state_numeric: Liouvillian null space is degenerate");
    Vec9 v = svd.matrixV().col(8);
    const cplx tr = v[vec_index(1, 1)] + v[vec_index(2, 2)] + v[vec_index(3, 3)];
    if (std::abs(tr) < 1e-12)
        throw degeneracy_error("steady_state_numeric: traceless null vector");
    v /= tr;
    DensityMatrix dm;
    dm.rho = unvectorize(v);
    dm.order = DensityMatrix::Order::zero;
    return dm;
}

// --------------------------------------------------------------------------
// Probe drive construction
// --------------------------------------------------------------------------

// True probe frequency as an affine combination of the bare transitions.
inline AffineFreq probe_frequency_affine(const Frame& frame, const ProbeSpec& probe) {
    const auto [pa, pb] = model::probe_branch_pairs(probe.probe_type);
    const auto& p = (probe.branch == 1) ? pa : pb;
    AffineFreq var = frame.carrier[p[0] - 1] - frame.carrier[p[1] - 1];
    var.rest += frame.shifted_gap(p[0], p[1]) + probe.offset;
    switch (probe.probe_type) {
        case 1:
        case 4:
        case 5: return var;
        case 2: return var - frame.drive_freq;
        case 3: return var + frame.drive_freq;
        case 6: return frame.drive_freq - var;
        default: throw config_error("probe_frequency_affine: bad probe type");
    }
}

// Forward (e^{-i nu t}) half of the reduced probe Hamiltonian: the two
// slow operator terms of Table I after the rotating-wave selection.
struct ProbeDrive {
    double nu_shifted{0.0};  // common small drive frequency
    struct Term {
        int m, n;    // sigma_{mn}
        cplx coeff;  // epsilon (rate units), proportional to the probe phasor
    };
    std::vector<Term> terms;
    Label response_label{0, 1};  // oscillation label of the forward response
};

namespace detail {

struct TermSelector {
    int m, n, nu;
    bool conjugate_probe;  // couple through conj(I~_pk)
};

inline std::vector<TermSelector> designated_terms(int k) {
    switch (k) {
        case 1: return {{3, 1, 0, false}, {3, 2, 0, false}};
        case 2: return {{3, 1, -1, false}, {3, 2, -1, false}};
        case 3: return {{2, 1, +1, false}, {3, 1, +1, false}};
        case 4: return {{2, 1, 0, false}, {3, 1, 0, false}};
        case 5: return {{2, 1, 0, false}, {2, 3, 0, false}};
        case 6: return {{2, 1, -1, true}, {2, 3, -1, true}};
        default: throw config_error("designated_terms: bad probe type");
    }
}

inline Label response_label(int k) {
    switch (k) {
        case 1: return {0, 1};
        case 2: return {1, 1};
        case 3: return {-1, 1};
        case 4: return {0, 1};
        case 5: return {0, 1};
        case 6: return {1, -1};
        default: throw config_error("response_label: bad probe type");
    }
}

// Shifted oscillation frequency of one coupling term, exact in the small
// variables: f = sign * omega_k - nu - (carrier_m - carrier_n).
inline AffineFreq term_frequency(const Frame& frame, const AffineFreq& omega_k,
                                 int m, int n, int nu, bool conjugate_probe) {
    AffineFreq f = conjugate_probe ? -omega_k : omega_k;
    f = f - frame.drive_freq * nu;
    f = f - (frame.carrier[m - 1] - frame.carrier[n - 1]);
    return f;
}

}  // namespace detail

inline ProbeDrive build_probe_drive(const CircuitSpec& circuit, const Frame& frame,
                                    const HarmonicCurrent& harmonics, const ProbeSpec& probe) {
    probe.validate(frame);
    const int k = probe.probe_type;
    const AffineFreq omega_k = probe_frequency_affine(frame, probe);
    const cplx phasor = probe.phasor();
    const double pref = circuit.mutual_inductance / (2.0 * circuit.hbar);

    ProbeDrive drive;
    drive.response_label = detail::response_label(k);
    bool first = true;
    for (const auto& sel : detail::designated_terms(k)) {
        const auto* entry = harmonics.find(sel.m, sel.n, sel.nu);
        if (entry == nullptr)
            throw config_error("build_probe_drive: harmonic table is incomplete");
        const AffineFreq f =
            detail::term_frequency(frame, omega_k, sel.m, sel.n, sel.nu, sel.conjugate_probe);
        if (!f.is_slow())
            throw config_error("build_probe_drive: designated term is not slow");
        if (first) {
            drive.nu_shifted = f.rest;
            first = false;
        } else if (std::abs(f.rest - drive.nu_shifted) > 1e-9 * (1.0 + std::abs(f.rest))) {
            throw config_error("build_probe_drive: designated terms disagree on frequency");
        }
        const cplx amplitude = sel.conjugate_probe ? std::conj(phasor) : phasor;
        drive.terms.push_back({sel.m, sel.n, -pref * entry->amplitude * amplitude});
    }
    return drive;
}

// --------------------------------------------------------------------------
// First-order linear response (frequency-domain solve)
// --------------------------------------------------------------------------

// One complex amplitude of the first-order density matrix, tagged with the
// integer output-frequency label of its e^{-i(a w_d + b w_p) t} oscillation.
struct Rho1Component {
    int m, n;
    cplx amplitude;
    Label label;
};

struct Rho1 {
    std::vector<Rho1Component> components;  // Hermitian-paired
};

struct LinearResponse {
    DensityMatrix order1;  // forward amplitude matrix R (order tag: first)
    Rho1 rho1;
    double nu_shifted{0.0};
    Label response_label{0, 1};
};

inline LinearResponse linear_response_numeric(const CircuitSpec& circuit, const Frame& frame,
                                              const RateSet& rates, const ProbeSpec& probe,
                                              const DensityMatrix& steady) {
    const auto harmonics = model::loop_current_harmonics(frame, circuit);
    const ProbeDrive drive = build_probe_drive(circuit, frame, harmonics, probe);
    for (const auto& t : drive.terms) {
        const int a = std::max(t.m, t.n), b = std::min(t.m, t.n);
        if (!(rates.dephasing(a, b) > 0.0))
            throw singularity_error("linear_response_numeric: driven coherence has zero dephasing");
    }

    Mat3c O = Mat3c::Zero();
    for (const auto& t : drive.terms) O(t.m - 1, t.n - 1) += t.coeff;
    const Mat3c F = -I_UNIT * (O * steady.rho - steady.rho * O);

    const Mat9 A = liouvillian(frame, rates);
    Mat9 lhs = A;
    for (int i = 0; i < 9; ++i) lhs(i, i) += I_UNIT * drive.nu_shifted;
    const Vec9 R = lhs.partialPivLu().solve(-vectorize(F));

    LinearResponse out;
    out.order1.rho = unvectorize(R);
    out.order1.order = DensityMatrix::Order::first;
    out.nu_shifted = drive.nu_shifted;
    out.response_label = drive.response_label;
    for (const auto& t : drive.terms) {
        const cplx amp = R[vec_index(t.m, t.n)];
        out.rho1.components.push_back({t.m, t.n, amp, drive.response_label});
        out.rho1.components.push_back({t.n, t.m, std::conj(amp),
                                       {-drive.response_label.first, -drive.response_label.second}});
    }
    return out;
}

// --------------------------------------------------------------------------
// Scattered-current spectrum
// --------------------------------------------------------------------------

// Complex amplitudes of the first-order scattered current, keyed by the
// integer label (a, b) of the e^{-i(a w_d + b w_p) t} component. The phasor
// reported for a key is twice the coefficient, so that
// I_s(t) = sum over canonical keys of Re{ phasor * e^{-i w t} }.
struct SpectralMap {
    double drive_frequency{0.0};
    double probe_frequency{0.0};
    std::map<Label, cplx> coefficients;

    double frequency(const Label& l) const {
        return l.first * drive_frequency + l.second * probe_frequency;
    }
    cplx phasor(const Label& l) const {
        auto it = coefficients.find(l);
        return it == coefficients.end() ? cplx{0.0, 0.0} : 2.0 * it->second;
    }
};

inline SpectralMap scattered_amplitudes(const Frame& frame, const HarmonicCurrent& harmonics,
                                        const Rho1& rho1, const CircuitSpec& circuit) {
    SpectralMap map;
    map.drive_frequency = frame.drive_frequency();
    const cplx pref = -I_UNIT * circuit.mutual_inductance / (2.0 * circuit.line_impedance);
    for (const auto& e : harmonics.entries) {
        if (e.delta_bare == 0.0 || e.amplitude == cplx{0.0, 0.0}) continue;
        for (const auto& r : rho1.components) {
            if (r.m != e.n || r.n != e.m) continue;  // entry (m,n) pairs with rho_{nm}
            Label l{r.label.first - e.nu_multiple, r.label.second};
            map.coefficients[l] += pref * e.delta_bare * e.amplitude * r.amplitude;
        }
    }
    return map;
}

// Gain and conversion efficiency reconstructed from a spectral map. For the
// phase-conjugating probes (types 5 and 6) the converted output is referred
// to the conjugate input phasor, which carries the published exp(-i arg I~)
// factor at every probe phase.
struct GainEta {
    cplx gain;
    cplx efficiency;
};

inline GainEta response_from_map(const SpectralMap& map, const CircuitSpec& circuit,
                                 const ProbeSpec& probe) {
    const auto labels = model::output_labels(probe.probe_type);
    const cplx input = probe.effective_phasor();
    const double flux = model::photon_flux_factor(circuit, probe.probe_type);
    GainEta r;
    r.gain = 1.0 + map.phasor(labels.gain) / input;
    if (probe.probe_type <= 4) {
        r.efficiency = map.phasor(labels.converted) / input * flux;
    } else {
        r.efficiency = map.phasor(labels.converted) / std::conj(input) * flux *
                       std::polar(1.0, -probe.phase);
    }
    return r;
}

// Convenience: full frequency-domain oracle chain for one configuration.
// A zero probe amplitude is normalized to unit drive so the ratios stay
// defined.
inline GainEta oracle_response(const CircuitSpec& circuit, const Frame& frame,
                               const RateSet& rates, const ProbeSpec& probe) {
    ProbeSpec p = probe;
    if (p.amplitude == 0.0) p.amplitude = 1.0;
    const auto steady = steady_state_numeric(frame, rates);
    const auto lin = linear_response_numeric(circuit, frame, rates, p, steady);
    const auto harmonics = model::loop_current_harmonics(frame, circuit);
    auto map = scattered_amplitudes(frame, harmonics, lin.rho1, circuit);
    map.probe_frequency = model::probe_true_frequency(frame, p);
    return response_from_map(map, circuit, p);
}

// --------------------------------------------------------------------------
// Time-domain oracle
// --------------------------------------------------------------------------

struct OracleControls {
    double strength{1e-3};        // target epsilon_max / Gamma_min (if amplitude unset)
    double transient_factor{40};  // transient length in units of 1/Gamma_min
    double window_factor{25};     // demodulation window in units of 1/Gamma_min
    std::size_t samples{2048};
    double rtol{1e-10};
    double atol{1e-12};
    double residual_tol{1e-6};
    bool non_rwa{false};  // keep the fast-oscillating probe terms
};

struct OracleReport {
    cplx analytic_gain{0.0}, analytic_eta{0.0};
    cplx linear_gain{0.0}, linear_eta{0.0};
    cplx time_gain{0.0}, time_eta{0.0};
    double linear_gain_err{0.0}, linear_eta_err{0.0};
    double time_gain_err{0.0}, time_eta_err{0.0};
    double probe_amplitude{0.0};
    double strength{0.0};
    std::size_t steps{0};
    double horizon{0.0};
    double residual{0.0};
    bool flagged_zero_response{false};
    double max_trace_err{0.0};
    double max_herm_err{0.0};
    double min_eigenvalue{1.0};
};

namespace detail {

// Full probe coupling list (both exponential sides of every harmonic entry);
// slow terms form the reduced Hamiltonian, the rest are the non-RWA partners.
struct DriveTerm {
    int m, n;
    cplx coeff;
    double freq;  // term oscillates as coeff * e^{-i freq t} on sigma_mn
    bool slow;
};

inline std::vector<DriveTerm> all_probe_terms(const CircuitSpec& circuit, const Frame& frame,
                                              const HarmonicCurrent& harmonics,
                                              const ProbeSpec& probe, cplx phasor,
                                              bool rwa_only) {
    const AffineFreq omega_k = probe_frequency_affine(frame, probe);
    const double pref = circuit.mutual_inductance / (2.0 * circuit.hbar);
    std::vector<DriveTerm> terms;
    for (const auto& e : harmonics.entries) {
        if (e.amplitude == cplx{0.0, 0.0}) continue;
        for (bool conj_side : {false, true}) {
            const AffineFreq f =
                term_frequency(frame, omega_k, e.m, e.n, e.nu_multiple, conj_side);
            const bool slow = f.is_slow();
            if (rwa_only && !slow) continue;
            DriveTerm t;
            t.m = e.m;
            t.n = e.n;
            t.coeff = -pref * e.amplitude * (conj_side ? std::conj(phasor) : phasor);
            t.freq = slow ? f.rest : f.value(circuit.omega21, circuit.omega31);
            t.slow = slow;
            terms.push_back(t);
        }
    }
    return terms;
}

inline double min_dephasing(const RateSet& rates) {
    double g = std::numeric_limits<double>::infinity();
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            if (m != n && rates.dephasing(m, n) > 0.0) g = std::min(g, rates.dephasing(m, n));
    if (!std::isfinite(g))
        throw singularity_error("time_domain_oracle: no positive dephasing rate");
    return g;
}

}  // namespace detail

inline OracleReport time_domain_oracle(const CircuitSpec& circuit, const Frame& frame,
                                       const RateSet& rates, const ProbeSpec& probe,
                                       const OracleControls& controls = {}) {
    probe.validate(frame);
    const auto ratios = model::ratios_of(circuit);
    const auto steady_cf = model::steady_state(frame, rates);
    const auto harmonics = model::loop_current_harmonics(frame, circuit);

    OracleReport rep;
    rep.analytic_gain = response::gain(frame, rates, ratios, probe, steady_cf);
    rep.analytic_eta = response::efficiency(frame, rates, ratios, probe, steady_cf);

    const auto steady = steady_state_numeric(frame, rates);
    {
        const auto ge = oracle_response(circuit, frame, rates, probe);
        rep.linear_gain = ge.gain;
        rep.linear_eta = ge.efficiency;
    }
    auto rel = [](const cplx& x, const cplx& ref) {
        return std::abs(x - ref) / std::max(std::abs(ref), 1e-30);
    };
    rep.linear_gain_err = rel(rep.linear_gain, rep.analytic_gain);
    rep.linear_eta_err = rel(rep.linear_eta, rep.analytic_eta);

    // probe amplitude: explicit, or derived from the strength target
    const double gamma_min = detail::min_dephasing(rates);
    double eps_unit = 0.0;
    {
        ProbeSpec unit = probe;
        unit.amplitude = 1.0;
        const auto pd = build_probe_drive(circuit, frame, harmonics, unit);
        for (const auto& t : pd.terms) eps_unit = std::max(eps_unit, std::abs(t.coeff));
    }
    double amplitude = probe.amplitude;
    if (amplitude == 0.0 && controls.strength > 0.0)
        amplitude = controls.strength * gamma_min / eps_unit;
    rep.probe_amplitude = amplitude;
    rep.strength = eps_unit * amplitude / gamma_min;
    if (amplitude == 0.0) {
        rep.flagged_zero_response = true;
        rep.time_gain = rep.time_eta = cplx{std::numeric_limits<double>::quiet_NaN(), 0.0};
        return rep;
    }
    if (rep.strength > 0.1 + 1e-12)
        throw config_error("time_domain_oracle: probe too strong (epsilon/Gamma_min > 0.1)");

    ProbeSpec driven = probe;
    driven.amplitude = amplitude;
    const auto pd = build_probe_drive(circuit, frame, harmonics, driven);
    const auto terms = detail::all_probe_terms(circuit, frame, harmonics, driven,
                                               driven.phasor(), !controls.non_rwa);

    const Mat9 A = liouvillian(frame, rates);
    auto rhs = [&](double t, const Vec9& y) -> Vec9 {
        Mat3c H = Mat3c::Zero();
        for (const auto& term : terms)
            H(term.m - 1, term.n - 1) +=
                term.coeff * std::exp(cplx{0.0, -term.freq * t});
        const Mat3c rho = unvectorize(y);
        const Mat3c C = H * rho - rho * H;
        Vec9 dy = A * y;
        dy -= I_UNIT * vectorize(C);
        return dy;
    };

    const double t_transient = controls.transient_factor / gamma_min;
    const double t_window = controls.window_factor / gamma_min;
    rep.horizon = t_transient + t_window;

    ode::Options opts;
    opts.rtol = controls.rtol;
    opts.atol = controls.atol;
    ode::DormandPrince<Vec9> stepper(opts);

    Vec9 y = vectorize(steady.rho);
    stepper.advance_to(rhs, y, 0.0, t_transient);

    const std::size_t N = std::max<std::size_t>(controls.samples, 16);
    Eigen::VectorXd times(static_cast<Eigen::Index>(N));
    std::vector<Eigen::VectorXcd> data(pd.terms.size(),
                                       Eigen::VectorXcd(static_cast<Eigen::Index>(N)));
    double t_prev = t_transient;
    for (std::size_t i = 0; i < N; ++i) {
        const Eigen::Index ii = static_cast<Eigen::Index>(i);
        const double t = t_transient + t_window * static_cast<double>(i) /
                                           static_cast<double>(N - 1);
        if (i > 0) stepper.advance_to(rhs, y, t_prev, t);
        t_prev = t;
        times[ii] = t;
        for (std::size_t q = 0; q < pd.terms.size(); ++q)
            data[q][ii] = y[vec_index(pd.terms[q].m, pd.terms[q].n)];

        const Mat3c rho = unvectorize(y);
        rep.max_trace_err = std::max(rep.max_trace_err, std::abs(rho.trace() - cplx{1.0, 0.0}));
        rep.max_herm_err =
            std::max(rep.max_herm_err, (rho - rho.adjoint()).cwiseAbs().maxCoeff());
        Eigen::SelfAdjointEigenSolver<Mat3c> es(0.5 * (rho + rho.adjoint()));
        rep.min_eigenvalue = std::min(rep.min_eigenvalue, es.eigenvalues().minCoeff());
    }
    rep.steps = stepper.stats().accepted;

    // demodulate each driven coherence against {1, e^{-i nu t}, e^{+i nu t}}
    Eigen::MatrixXcd basis(static_cast<Eigen::Index>(N), 3);
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(N); ++i) {
        basis(i, 0) = 1.0;
        basis(i, 1) = std::exp(cplx{0.0, -pd.nu_shifted * times[i]});
        basis(i, 2) = std::exp(cplx{0.0, +pd.nu_shifted * times[i]});
    }
    const auto qr = basis.colPivHouseholderQr();

    Rho1 rho1;
    for (std::size_t q = 0; q < pd.terms.size(); ++q) {
        const Eigen::Vector3cd beta = qr.solve(data[q]);
        const double signal = data[q].norm();
        if (signal < 1e-14 * std::sqrt(static_cast<double>(N))) {
            rep.flagged_zero_response = true;
            continue;
        }
        const double res = (data[q] - basis * beta).norm() / signal;
        rep.residual = std::max(rep.residual, res);
        if (res > controls.residual_tol)
            throw nonstationary_error(
                "time_domain_oracle: demodulation residual " + std::to_string(res) +
                " above threshold; extend the horizon or weaken the probe");
        const cplx amp = beta[1];
        rho1.components.push_back({pd.terms[q].m, pd.terms[q].n, amp, pd.response_label});
        rho1.components.push_back({pd.terms[q].n, pd.terms[q].m, std::conj(amp),
                                   {-pd.response_label.first, -pd.response_label.second}});
    }

    if (rep.flagged_zero_response) {
        rep.time_gain = rep.time_eta = cplx{std::numeric_limits<double>::quiet_NaN(), 0.0};
        return rep;
    }

    auto map = scattered_amplitudes(frame, harmonics, rho1, circuit);
    map.probe_frequency = model::probe_true_frequency(frame, driven);
    const auto ge = response_from_map(map, circuit, driven);
    rep.time_gain = ge.gain;
    rep.time_eta = ge.efficiency;
    rep.time_gain_err = rel(rep.time_gain, rep.analytic_gain);
    rep.time_eta_err = rel(rep.time_eta, rep.analytic_eta);
    return rep;
}

}  // namespace deltamix::lindblad
