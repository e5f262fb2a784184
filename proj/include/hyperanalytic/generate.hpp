#pragma once

#include <cstddef>
#include <string_view>

#include "hyperanalytic/envelope.hpp"
#include "hyperanalytic/signal.hpp"

namespace hyperanalytic {

enum class Waveform { tone, am_gauss, helix_gauss };

std::string_view to_string(Waveform w);
Waveform parse_waveform(std::string_view name);

/// Example signal families: a real carrier A cos(2 pi f n + theta) modulated by
///   tone:        1
///   am_gauss:    G1[n] + G2[n]
///   helix_gauss: (G1[n] + G2[n]) exp(i 2 pi f_h n)
/// with Gaussians G(n) = exp(-(n - c)^2 / (2 sigma^2)), and the whole product
/// rotated by exp(i psi).
struct GeneratorSpec {
    Waveform waveform = Waveform::helix_gauss;
    std::size_t n = 1000;
    double carrier_freq = 0.05;
    double theta = 0.0;
    double psi = 0.0;
    double helix_freq = 0.005;
    double gauss_centers[2] = {300.0, 700.0};
    double gauss_sigma = 60.0;
    double amplitude = 1.0;
};

/// Throws std::invalid_argument when the spec violates 0 < f < 1/2,
/// |f_h| < f, sigma > 0, or n < 2.
void validate(const GeneratorSpec& spec);

/// The complex modulator g (including the exp(i psi) rotation), without the carrier.
ComplexSignal modulator(const GeneratorSpec& spec);

ModulationModel modulation_model(const GeneratorSpec& spec);

ComplexSignal generate(const GeneratorSpec& spec);

}  // namespace hyperanalytic
