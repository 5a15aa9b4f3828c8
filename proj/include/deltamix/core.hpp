// core.hpp — shared aliases, error types, frequency bookkeeping, parallel map
#pragma once

#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace deltamix {

using cplx = std::complex<double>;
inline constexpr cplx I_UNIT{0.0, 1.0};

// Thrown when a run configuration is internally inconsistent (bad (l, k)
// pairing, malformed config file, missing fields). CLI maps this to exit 2.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Drive with Omega = 0 and Delta = 0: the rotating frame is undefined.
struct degenerate_drive_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Liouvillian null space is not one-dimensional at working precision.
struct degeneracy_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A driven coherence has zero dephasing rate; the response diverges.
struct singularity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Demodulation residual above threshold: horizon too short or probe too strong.
struct nonstationary_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested optimum cell is not tabulated.
struct not_tabulated_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Frequency as an affine combination c21*omega21 + c31*omega31 + rest.
// The integer carrier coefficients cancel exactly in rotating-frame algebra,
// so "slow" frequencies (both coefficients zero) never suffer catastrophic
// cancellation against the large bare transition frequencies.
struct AffineFreq {
    int c21{0};
    int c31{0};
    double rest{0.0};

    constexpr bool is_slow() const { return c21 == 0 && c31 == 0; }

    constexpr AffineFreq operator+(const AffineFreq& o) const {
        return {c21 + o.c21, c31 + o.c31, rest + o.rest};
    }
    constexpr AffineFreq operator-(const AffineFreq& o) const {
        return {c21 - o.c21, c31 - o.c31, rest - o.rest};
    }
    constexpr AffineFreq operator-() const { return {-c21, -c31, -rest}; }
    constexpr AffineFreq operator*(int k) const { return {c21 * k, c31 * k, rest * k}; }

    double value(double omega21, double omega31) const {
        return c21 * omega21 + c31 * omega31 + rest;
    }
};

// Worker count for parallel grid evaluation; DELTAMIX_THREADS caps it.
inline unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("DELTAMIX_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
    }
    return hw;
}

// Deterministic parallel map: f(i) runs for i in [0, n); results must be
// written by index so the output order never depends on scheduling.
template <class F>
void parallel_for(std::size_t n, F&& f) {
    unsigned workers = worker_count();
    if (workers <= 1 || n < 2 * workers) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk;
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &f] {
            for (std::size_t i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& t : pool) t.join();
}

inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
    if (n < 2) throw config_error("linspace: need at least 2 points");
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    v.back() = hi;
    return v;
}

inline std::vector<double> logspace(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0) || !(hi > 0.0)) throw config_error("logspace: bounds must be positive");
    auto e = linspace(std::log(lo), std::log(hi), n);
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = std::exp(e[i]);
    v.front() = lo;
    v.back() = hi;
    return v;
}

}  // namespace deltamix
