#include "hyperanalytic/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>

#include "hyperanalytic/analytic.hpp"
#include "hyperanalytic/envelope.hpp"
#include "hyperanalytic/generate.hpp"
#include "hyperanalytic/properness.hpp"
#include "hyperanalytic/reference.hpp"
#include "hyperanalytic/spectral.hpp"

namespace hyperanalytic::selftest {

namespace {

using Rng = std::mt19937_64;
constexpr double kPi = std::numbers::pi;

constexpr std::size_t kSignalCount = 100;
constexpr std::size_t kSignalLength = 256;

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

/// Random complex signal with zero DC and Nyquist content.
ComplexSignal random_band_limited(Rng& rng, std::size_t n) {
    std::normal_distribution<double> dist;
    std::vector<Complex> x(n);
    for (auto& v : x) v = {dist(rng), dist(rng)};
    auto spectrum = fft(x, Direction::forward);
    spectrum[0] = 0.0;
    if (n % 2 == 0) spectrum[n / 2] = 0.0;
    return ComplexSignal(fft(spectrum, Direction::inverse));
}

std::vector<double> random_real_zero_dc(Rng& rng, std::size_t n) {
    const auto z = random_band_limited(rng, n);
    return real_part(z);
}

double max_abs(std::span<const Complex> x) {
    double m = 0.0;
    for (const auto& v : x) m = std::max(m, std::abs(v));
    return m;
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    double m = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) m = std::max(m, std::abs(a[n] - b[n]));
    return m;
}

double max_abs_diff(std::span<const Quaternion> a, std::span<const Quaternion> b) {
    double m = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) m = std::max(m, abs(a[n] - b[n]));
    return m;
}

Quaternion random_quaternion(Rng& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    return {dist(rng), dist(rng), dist(rng), dist(rng)};
}

CriterionResult make(int id, std::string name, bool passed, std::string detail) {
    return {id, std::move(name), passed, std::move(detail)};
}

}  // namespace

CriterionResult cross_method_equivalence(const Options& opts) {
    Rng rng(opts.seed + 1);
    double worst = 0.0;
    for (std::size_t s = 0; s < kSignalCount; ++s) {
        const auto z = random_band_limited(rng, kSignalLength);
        const auto pair = orthogonal_hilbert_pair(z).o;
        auto fft_route = orthogonal_complex_fft(z).o;
        if (opts.conjugate_fft_route) {
            std::vector<Complex> c(fft_route.begin(), fft_route.end());
            for (auto& v : c) v = std::conj(v);
            fft_route = ComplexSignal(std::move(c));
        }
        const auto qft_route = orthogonal_qft(z).o;
        const double scale = max_abs(pair.samples());
        const double d = std::max({max_abs_diff(pair.samples(), fft_route.samples()),
                                   max_abs_diff(pair.samples(), qft_route.samples()),
                                   max_abs_diff(fft_route.samples(), qft_route.samples())}) / scale;
        worst = std::max(worst, d);
    }
    return make(1, "cross-method equivalence", worst <= 1e-9,
                "max pairwise diff / max|o| = " + sci(worst) + " (limit 1e-9, 100 signals, N=256)");
}

CriterionResult one_sided_spectrum(const Options& opts) {
    Rng rng(opts.seed + 1);
    double worst = 0.0;
    for (std::size_t s = 0; s < kSignalCount; ++s) {
        const auto z = random_band_limited(rng, kSignalLength);
        const auto h = hyperanalytic(z);
        const auto spectrum = qft(h.h, h.basis.mu());
        double peak = 0.0;
        double negative = 0.0;
        for (std::size_t k = 0; k < spectrum.size(); ++k) {
            const double m = abs(spectrum.bins[k]);
            peak = std::max(peak, m);
            if (is_negative_bin(k, spectrum.size())) negative = std::max(negative, m);
        }
        worst = std::max(worst, negative / peak);
    }
    return make(2, "one-sided hyperanalytic spectrum", worst <= 1e-9,
                "max negative bin / peak = " + sci(worst) + " (limit 1e-9)");
}

CriterionResult orthogonality(const Options& opts) {
    Rng rng(opts.seed + 3);
    double worst_orth = 0.0;
    for (std::size_t s = 0; s < kSignalCount; ++s) {
        const auto z = random_band_limited(rng, kSignalLength);
        for (auto method : {OrthogonalMethod::hilbert_pair, OrthogonalMethod::complex_fft,
                            OrthogonalMethod::qft_one_sided}) {
            const auto o = orthogonal(z, method).o;
            const double r = std::abs(orthogonality_residual(z, o)) / (energy_norm(z) * energy_norm(o));
            worst_orth = std::max(worst_orth, r);
        }
    }
    double worst_cross = 0.0;
    for (std::size_t s = 0; s < kSignalCount; ++s) {
        const auto f = random_real_zero_dc(rng, kSignalLength);
        const auto g = random_real_zero_dc(rng, kSignalLength);
        const auto hf = hilbert_real(RealSignal(f));
        const auto hg = hilbert_real(RealSignal(g));
        double cross = 0.0;
        double nf = 0.0;
        double ng = 0.0;
        for (std::size_t n = 0; n < f.size(); ++n) {
            cross += f[n] * hg[n] + hf[n] * g[n];
            nf += f[n] * f[n];
            ng += g[n] * g[n];
        }
        worst_cross = std::max(worst_cross, std::abs(cross) / std::sqrt(nf * ng));
    }
    const bool ok = worst_orth <= 1e-9 && worst_cross <= 1e-10;
    return make(3, "orthogonality", ok,
                "|sum z conj(o)| / (|z||o|) = " + sci(worst_orth) + " (limit 1e-9); Hilbert cross-sum = " +
                    sci(worst_cross) + " (limit 1e-10)");
}

CriterionResult simplex_perplex_recovery(const Options& opts) {
    Rng rng(opts.seed + 4);
    double worst = 0.0;
    for (std::size_t s = 0; s < kSignalCount; ++s) {
        const auto z = random_band_limited(rng, kSignalLength);
        const auto parts = simplex_perplex(hyperanalytic(z));
        worst = std::max(worst, max_abs_diff(parts.simplex.samples(), z.samples()));
    }
    // Constant h = 1 + 2i + 3j + 4k: simplex 1 + 2i, perplex 3j + 4k, o = 3 - 4i.
    const HyperanalyticSignal constant{QuaternionSignal(std::vector<Quaternion>(4, {1.0, 2.0, 3.0, 4.0}))};
    const auto cparts = simplex_perplex(constant);
    double algebraic = 0.0;
    for (std::size_t n = 0; n < 4; ++n) {
        algebraic = std::max({algebraic, std::abs(cparts.simplex[n] - Complex{1.0, 2.0}),
                              std::abs(cparts.orthogonal[n] - Complex{3.0, -4.0}),
                              abs(cparts.perplex[n] - Quaternion{0.0, 0.0, 3.0, 4.0})});
    }
    const bool ok = worst <= 1e-10 && algebraic <= 4.0 * std::numeric_limits<double>::epsilon();
    return make(4, "simplex/perplex", ok,
                "max|simplex - z| = " + sci(worst) + " (limit 1e-10); constant case error = " + sci(algebraic));
}

CriterionResult qft_correctness(const Options& opts) {
    Rng rng(opts.seed + 5);
    const auto mu = UnitPureQuaternion::normalized(0.3, -0.5, 0.8);
    double fast_vs_direct = 0.0;
    double round_trip = 0.0;
    for (std::size_t n : {8u, 64u, 256u}) {
        std::vector<Quaternion> s(n);
        for (auto& q : s) q = random_quaternion(rng);
        for (const auto& axis : {UnitPureQuaternion::j(), mu}) {
            const auto fast = qft(s, axis, Direction::forward);
            const auto direct = reference::direct_qft(s, axis, Direction::forward);
            fast_vs_direct = std::max(fast_vs_direct, max_abs_diff(fast, direct));
            const auto back = qft(fast, axis, Direction::inverse);
            round_trip = std::max(round_trip, max_abs_diff(back, s));
        }
    }

    // Convolution theorem with a real kernel: QFT(g * f) = QFT(g) QFT(f).
    double convolution = 0.0;
    {
        const std::size_t n = 64;
        const auto g = random_band_limited(rng, n);
        std::normal_distribution<double> dist;
        std::vector<double> f(n);
        for (auto& v : f) v = dist(rng);
        const auto direct = reference::direct_circular_convolve(g.samples(), f);
        const auto basis = QuaternionBasis::standard();
        const auto lhs = qft(embed(ComplexSignal(direct), basis), basis.mu());
        const auto gq = qft(embed(g, basis), basis.mu());
        std::vector<Quaternion> fq(f.begin(), f.end());
        for (std::size_t k = 0; k < n; ++k) fq[k] = Quaternion(f[k]);
        const auto fs = qft(fq, basis.mu(), Direction::forward);
        for (std::size_t k = 0; k < n; ++k) {
            convolution = std::max(convolution, abs(lhs.bins[k] - gq.bins[k] * fs[k]));
        }
    }

    // Even/odd placement of real and imaginary parts.
    double symmetry = 0.0;
    {
        const std::size_t n = 64;
        std::vector<Complex> even_re(n), odd_re(n), even_im(n), odd_im(n);
        for (std::size_t k = 0; k < n; ++k) {
            const double t = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
            even_re[k] = {std::cos(t) + 0.5 * std::cos(3 * t), 0.0};
            odd_re[k] = {std::sin(t) - 0.25 * std::sin(5 * t), 0.0};
            even_im[k] = {0.0, std::cos(2 * t)};
            odd_im[k] = {0.0, std::sin(4 * t)};
        }
        auto stray = [](const std::vector<double>& v) {
            double m = 0.0;
            for (double x : v) m = std::max(m, std::abs(x));
            return m;
        };
        const auto mu_axis = UnitPureQuaternion::j();
        const auto r1 = qft_symmetry_report(ComplexSignal(even_re), mu_axis);
        symmetry = std::max({symmetry, stray(r1.xi), stray(r1.mu), stray(r1.ximu)});
        const auto r2 = qft_symmetry_report(ComplexSignal(odd_re), mu_axis);
        symmetry = std::max({symmetry, stray(r2.scalar), stray(r2.xi), stray(r2.ximu)});
        const auto r3 = qft_symmetry_report(ComplexSignal(even_im), mu_axis);
        symmetry = std::max({symmetry, stray(r3.scalar), stray(r3.mu), stray(r3.ximu)});
        const auto r4 = qft_symmetry_report(ComplexSignal(odd_im), mu_axis);
        symmetry = std::max({symmetry, stray(r4.scalar), stray(r4.xi), stray(r4.mu)});
    }

    const bool ok = fast_vs_direct <= 1e-10 && round_trip <= 1e-12 && convolution <= 1e-10 && symmetry <= 1e-12;
    return make(5, "QFT correctness", ok,
                "fast vs direct = " + sci(fast_vs_direct) + " (1e-10); round trip = " + sci(round_trip) +
                    " (1e-12); convolution = " + sci(convolution) + " (1e-10); symmetry leakage = " +
                    sci(symmetry) + " (1e-12)");
}

CriterionResult cd_polar_form(const Options& opts) {
    Rng rng(opts.seed + 6);
    double worst = 0.0;
    std::size_t tested = 0;
    while (tested < 10000) {
        const Quaternion q = random_quaternion(rng);
        const auto pair = cd_split(q);
        if (std::abs(pair.z1 * pair.z1 + pair.z2 * pair.z2) <= 0.01 * norm(q)) continue;
        const auto p = cdpolar(q);
        worst = std::max(worst, abs(cdpolar_inverse(p.modulus, p.argument) - q) / abs(q));
        ++tested;
    }

    // Degenerate set z1^2 + z2^2 = 0, i.e. z2 = +-i z1.
    std::size_t detected = 0;
    std::size_t degenerate_cases = 0;
    auto check_degenerate = [&](const Quaternion& q) {
        ++degenerate_cases;
        try {
            (void)cdpolar(q);
        } catch (const DegeneratePolarForm&) {
            ++detected;
        }
    };
    check_degenerate({1.0, 0.0, 0.0, 1.0});
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int s = 0; s < 1000; ++s) {
        const Complex z1{dist(rng), dist(rng)};
        const Complex z2 = (s % 2 == 0 ? Complex{0.0, 1.0} : Complex{0.0, -1.0}) * z1;
        check_degenerate(cd_assemble({z1, z2}));
    }
    const bool ok = worst <= 1e-10 && detected == degenerate_cases;
    return make(6, "CD polar form", ok,
                "round trip relative error = " + sci(worst) + " (limit 1e-10, 10^4 samples); degenerate detected " +
                    std::to_string(detected) + "/" + std::to_string(degenerate_cases));
}

CriterionResult modulation_recovery(const Options& /*opts*/) {
    const GeneratorSpec spec;  // helix_gauss defaults
    const auto model = modulation_model(spec);
    const auto z = synthesize_modulated(model, spec.n);
    const auto d = demodulate(z);

    const std::size_t lo = spec.n / 10;
    const std::size_t hi = spec.n - spec.n / 10;
    double peak = 0.0;
    for (const auto& g : model.modulator) peak = std::max(peak, std::abs(spec.amplitude * g));
    double env_err = 0.0;
    double imag_err = 0.0;
    double phase_err = 0.0;
    bool quadrant[4] = {false, false, false, false};
    for (std::size_t n = lo; n < hi; ++n) {
        const Complex expected = spec.amplitude * model.modulator[n];
        const Complex e = d.polar.envelope[n];
        env_err = std::max(env_err, std::abs(e - expected));
        imag_err = std::max(imag_err, std::abs(d.polar.phase[n].imag()));
        const double carrier = 2.0 * kPi * spec.carrier_freq * static_cast<double>(n) + spec.theta;
        phase_err = std::max(phase_err, std::abs(std::remainder(d.polar.phase[n].real() - carrier, 2.0 * kPi)));
        if (std::abs(e) > 0.05 * peak) {
            quadrant[(e.real() >= 0 ? 0 : 1) + (e.imag() >= 0 ? 0 : 2)] = true;
        }
    }
    const double rel_env = env_err / peak;
    const bool quadrants = quadrant[0] && quadrant[1] && quadrant[2] && quadrant[3];
    const bool ok = rel_env <= 1e-2 && imag_err <= 1e-2 && phase_err <= 1e-2 && quadrants;
    return make(7, "modulation recovery", ok,
                "|e - A g| / max|A g| = " + sci(rel_env) + " (1e-2); max|Im phi| = " + sci(imag_err) +
                    " (1e-2); carrier phase error = " + sci(phase_err) + " (1e-2); four quadrants " +
                    (quadrants ? "visited" : "NOT visited"));
}

CriterionResult properness_patterns(const Options& /*opts*/) {
    constexpr double tol = 1e-6;
    const std::size_t n = kSignalLength;

    // Improper family: z_i is a phase-shifted copy of z_r.
    std::vector<Complex> improper(n);
    const double shift = kPi / 3.0;
    const struct { double bin, amp, phase; } tones[] = {{3, 1.0, 0.2}, {7, 0.6, -1.1}, {12, 0.3, 2.0}};
    for (std::size_t k = 0; k < n; ++k) {
        const double t = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
        double re = 0.0;
        double im = 0.0;
        for (const auto& tone : tones) {
            re += tone.amp * std::cos(tone.bin * t + tone.phase);
            im += tone.amp * std::cos(tone.bin * t + tone.phase - shift);
        }
        improper[k] = {re, im};
    }
    const auto rep_improper = classify(covariance(hyperanalytic(ComplexSignal(improper))), tol);
    const bool improper_ok = rep_improper.classification == Properness::c_mu_proper &&
                             std::abs(rep_improper.beta) > 1e-3 * rep_improper.energy &&
                             std::abs(rep_improper.gamma) > 1e-3 * rep_improper.energy;

    // Proper unit tone exp(i 2 pi 8 n / N): alpha = omega = beta = N/2, gamma = 0.
    std::vector<Complex> tone(n);
    for (std::size_t k = 0; k < n; ++k) {
        tone[k] = std::polar(1.0, 2.0 * kPi * 8.0 * static_cast<double>(k) / static_cast<double>(n));
    }
    const auto rep_proper = classify(covariance(hyperanalytic(ComplexSignal(tone))), tol);
    const double half = static_cast<double>(n) / 2.0;
    const bool proper_ok = rep_proper.classification == Properness::c_mu_superproper &&
                           std::abs(rep_proper.alpha - half) <= tol * half &&
                           std::abs(rep_proper.beta - half) <= tol * half;

    return make(8, "properness patterns", improper_ok && proper_ok,
                "improper family -> " + std::string(to_string(rep_improper.classification)) + " (superproper test '" +
                    rep_improper.worst_predicate + "' off by " + sci(rep_improper.worst_deviation) + ", beta = " +
                    sci(rep_improper.beta) + "); unit tone -> " +
                    std::string(to_string(rep_proper.classification)) + " (alpha = " + sci(rep_proper.alpha) +
                    ", beta = " + sci(rep_proper.beta) + ")");
}

std::vector<CriterionResult> run_all(const Options& opts, std::ostream* log) {
    using Fn = CriterionResult (*)(const Options&);
    const Fn criteria[] = {cross_method_equivalence, one_sided_spectrum, orthogonality, simplex_perplex_recovery,
                           qft_correctness,          cd_polar_form,      modulation_recovery, properness_patterns};
    std::vector<CriterionResult> results;
    for (Fn fn : criteria) {
        CriterionResult r;
        try {
            r = fn(opts);
        } catch (const std::exception& e) {
            r = {static_cast<int>(results.size()) + 1, "criterion", false, std::string("exception: ") + e.what()};
        }
        if (log) *log << format_line(r) << '\n';
        results.push_back(std::move(r));
    }
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

std::string format_line(const CriterionResult& r) {
    return std::string(r.passed ? "PASS" : "FAIL") + "  [" + std::to_string(r.id) + "] " + r.name + ": " + r.detail;
}

}  // namespace hyperanalytic::selftest
