#include "hyperanalytic/generate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hyperanalytic {

std::string_view to_string(Waveform w) {
    switch (w) {
        case Waveform::tone: return "tone";
        case Waveform::am_gauss: return "am_gauss";
        case Waveform::helix_gauss: return "helix_gauss";
    }
    return "unknown";
}

Waveform parse_waveform(std::string_view name) {
    if (name == "tone") return Waveform::tone;
    if (name == "am_gauss") return Waveform::am_gauss;
    if (name == "helix_gauss") return Waveform::helix_gauss;
    throw std::invalid_argument("unknown waveform '" + std::string(name) + "'");
}

void validate(const GeneratorSpec& spec) {
    if (spec.n < ComplexSignal::kMinLength) {
        throw std::invalid_argument("signal length must be at least 2");
    }
    if (!(spec.carrier_freq > 0.0 && spec.carrier_freq < 0.5)) {
        throw std::invalid_argument("carrier frequency must lie in (0, 1/2) cycles per sample");
    }
    if (!(std::abs(spec.helix_freq) < spec.carrier_freq)) {
        throw std::invalid_argument("helix frequency must be below the carrier frequency");
    }
    if (!(spec.gauss_sigma > 0.0)) {
        throw std::invalid_argument("Gaussian width must be positive");
    }
    for (double v : {spec.theta, spec.psi, spec.amplitude, spec.gauss_centers[0], spec.gauss_centers[1]}) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("generator parameters must be finite");
        }
    }
}

ComplexSignal modulator(const GeneratorSpec& spec) {
    validate(spec);
    const Complex rotation = std::polar(1.0, spec.psi);
    const double two_sigma_sq = 2.0 * spec.gauss_sigma * spec.gauss_sigma;
    std::vector<Complex> g(spec.n);
    for (std::size_t k = 0; k < spec.n; ++k) {
        const double t = static_cast<double>(k);
        Complex v = rotation;
        if (spec.waveform != Waveform::tone) {
            const double d0 = t - spec.gauss_centers[0];
            const double d1 = t - spec.gauss_centers[1];
            v *= std::exp(-d0 * d0 / two_sigma_sq) + std::exp(-d1 * d1 / two_sigma_sq);
        }
        if (spec.waveform == Waveform::helix_gauss) {
            v *= std::polar(1.0, 2.0 * std::numbers::pi * spec.helix_freq * t);
        }
        g[k] = v;
    }
    return ComplexSignal(std::move(g));
}

ModulationModel modulation_model(const GeneratorSpec& spec) {
    return {spec.amplitude, spec.carrier_freq, spec.theta, modulator(spec)};
}

ComplexSignal generate(const GeneratorSpec& spec) {
    return synthesize_modulated(modulation_model(spec), spec.n);
}

}  // namespace hyperanalytic
