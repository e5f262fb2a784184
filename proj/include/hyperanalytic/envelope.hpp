#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyperanalytic/analytic.hpp"

namespace hyperanalytic {

/// Per-sample complex envelope e[n] and complex phase phi[n] with
/// h[n] = e[n] exp(phi[n] mu) in the Cayley-Dickson sense.
struct PolarDecomposition {
    std::vector<Complex> envelope;
    std::vector<Complex> phase;
    /// Samples whose polar form does not exist; their values are interpolated.
    std::vector<bool> degenerate;

    std::size_t size() const { return envelope.size(); }
};

/// Removes 2 pi jumps in Re(phase) sample to sample. Re(phase[0]) is moved into (-pi, pi].
std::vector<Complex> unwrap_phase(std::span<const Complex> phase);

/// Joint unwrapping of the (A, B) ~ (-A, B + pi) ambiguity: each sample takes
/// the shift B + k pi closest to its predecessor and flips A when k is odd.
void unwrap_coupled(std::span<Complex> envelope, std::span<Complex> phase);

/// With coupled_sign_fix the envelope is sign-corrected along with the phase;
/// otherwise only 2 pi phase jumps are removed.
PolarDecomposition unwrap(PolarDecomposition polar, bool coupled_sign_fix = true);

/// Per-sample cdpolar, coupled unwrapping over the valid samples, then linear
/// interpolation across degenerate samples. Throws std::domain_error if every
/// sample is degenerate.
PolarDecomposition envelope_phase(const HyperanalyticSignal& h);

/// Real carrier A cos(2 pi omega n + theta) times a complex modulator g.
struct ModulationModel {
    double amplitude = 1.0;
    double carrier_freq = 0.05;  // cycles per sample, 0 < f < 1/2
    double carrier_phase = 0.0;  // radians
    ComplexSignal modulator;
};

/// z[n] = g[n] A cos(2 pi omega n + theta). n must equal the modulator length.
ComplexSignal synthesize_modulated(const ModulationModel& model, std::size_t n);

/// Fraction of the energy of g lying at |frequency| >= cutoff (cycles/sample).
double out_of_band_fraction(const ComplexSignal& g, double cutoff);

struct Demodulation {
    HyperanalyticSignal hyperanalytic;
    PolarDecomposition polar;
    OrthogonalResult orthogonal;
};

Demodulation demodulate(const ComplexSignal& z, const QuaternionBasis& basis = QuaternionBasis::standard());

}  // namespace hyperanalytic
