#include "hyperanalytic/envelope.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace hyperanalytic {

namespace {

constexpr double kPi = std::numbers::pi;

double anchor_shift(double re) {
    // multiple of 2 pi that moves re into (-pi, pi]
    double wrapped = std::remainder(re, 2.0 * kPi);
    if (wrapped <= -kPi) {
        wrapped += 2.0 * kPi;
    }
    return wrapped - re;
}

}  // namespace

std::vector<Complex> unwrap_phase(std::span<const Complex> phase) {
    std::vector<Complex> out(phase.begin(), phase.end());
    if (out.empty()) {
        return out;
    }
    out[0] += anchor_shift(out[0].real());
    for (std::size_t n = 1; n < out.size(); ++n) {
        const double turns = std::round((out[n - 1].real() - out[n].real()) / (2.0 * kPi));
        out[n] += 2.0 * kPi * turns;
    }
    return out;
}

void unwrap_coupled(std::span<Complex> envelope, std::span<Complex> phase) {
    if (envelope.size() != phase.size()) {
        throw std::invalid_argument("envelope and phase lengths differ");
    }
    if (phase.empty()) {
        return;
    }
    phase[0] += anchor_shift(phase[0].real());
    for (std::size_t n = 1; n < phase.size(); ++n) {
        const double half_turns = std::round((phase[n - 1].real() - phase[n].real()) / kPi);
        phase[n] += kPi * half_turns;
        if (std::fmod(std::abs(half_turns), 2.0) == 1.0) {
            envelope[n] = -envelope[n];
        }
    }
}

PolarDecomposition unwrap(PolarDecomposition polar, bool coupled_sign_fix) {
    if (coupled_sign_fix) {
        unwrap_coupled(polar.envelope, polar.phase);
    } else {
        polar.phase = unwrap_phase(polar.phase);
    }
    return polar;
}

PolarDecomposition envelope_phase(const HyperanalyticSignal& hs) {
    const std::size_t len = hs.h.size();
    PolarDecomposition out;
    out.envelope.resize(len);
    out.phase.resize(len);
    out.degenerate.assign(len, false);

    std::vector<std::size_t> valid;
    std::vector<Complex> env;
    std::vector<Complex> phi;
    for (std::size_t n = 0; n < len; ++n) {
        const Quaternion& q = hs.h[n];
        if (norm(q) == 0.0) {
            out.degenerate[n] = true;
            continue;
        }
        try {
            const CdPolar p = cdpolar(q, hs.basis);
            valid.push_back(n);
            env.push_back(p.modulus);
            phi.push_back(p.argument);
        } catch (const DegeneratePolarForm&) {
            out.degenerate[n] = true;
        }
    }
    if (valid.empty()) {
        throw std::domain_error("every sample is degenerate; no envelope can be formed");
    }

    unwrap_coupled(env, phi);
    for (std::size_t v = 0; v < valid.size(); ++v) {
        out.envelope[valid[v]] = env[v];
        out.phase[valid[v]] = phi[v];
    }

    // Fill degenerate samples: hold at the ends, linear in between.
    std::optional<std::size_t> prev;
    std::size_t next_valid = 0;
    for (std::size_t n = 0; n < len; ++n) {
        if (!out.degenerate[n]) {
            prev = n;
            ++next_valid;
            continue;
        }
        if (next_valid >= valid.size()) {
            out.envelope[n] = out.envelope[*prev];
            out.phase[n] = out.phase[*prev];
        } else if (!prev) {
            out.envelope[n] = out.envelope[valid[next_valid]];
            out.phase[n] = out.phase[valid[next_valid]];
        } else {
            const std::size_t a = *prev;
            const std::size_t b = valid[next_valid];
            const double t = static_cast<double>(n - a) / static_cast<double>(b - a);
            out.envelope[n] = (1.0 - t) * out.envelope[a] + t * out.envelope[b];
            out.phase[n] = (1.0 - t) * out.phase[a] + t * out.phase[b];
        }
    }
    return out;
}

ComplexSignal synthesize_modulated(const ModulationModel& model, std::size_t n) {
    if (!(model.carrier_freq > 0.0 && model.carrier_freq < 0.5)) {
        throw std::invalid_argument("carrier frequency must lie in (0, 1/2) cycles per sample");
    }
    if (model.modulator.size() != n) {
        throw std::invalid_argument("modulator length does not match the requested length");
    }
    std::vector<Complex> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double carrier = model.amplitude *
            std::cos(2.0 * kPi * model.carrier_freq * static_cast<double>(k) + model.carrier_phase);
        z[k] = model.modulator[k] * carrier;
    }
    return ComplexSignal(std::move(z), model.modulator.sample_period());
}

double out_of_band_fraction(const ComplexSignal& g, double cutoff) {
    const auto spectrum = fft(g.samples(), Direction::forward);
    const std::size_t len = spectrum.size();
    double total = 0.0;
    double outside = 0.0;
    for (std::size_t k = 0; k < len; ++k) {
        const double freq = is_negative_bin(k, len) ? static_cast<double>(k) / len - 1.0
                                                    : static_cast<double>(k) / len;
        const double e = std::norm(spectrum[k]);
        total += e;
        if (std::abs(freq) >= cutoff) {
            outside += e;
        }
    }
    return total > 0.0 ? outside / total : 0.0;
}

Demodulation demodulate(const ComplexSignal& z, const QuaternionBasis& basis) {
    auto h = hyperanalytic(z, basis);
    auto polar = envelope_phase(h);
    auto parts = simplex_perplex(h);
    return {std::move(h), std::move(polar), {std::move(parts.orthogonal), OrthogonalMethod::qft_one_sided}};
}

}  // namespace hyperanalytic
