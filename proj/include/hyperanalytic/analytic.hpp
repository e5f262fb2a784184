#pragma once

#include <string_view>

#include "hyperanalytic/quaternion.hpp"
#include "hyperanalytic/signal.hpp"
#include "hyperanalytic/spectral.hpp"

namespace hyperanalytic {

enum class OrthogonalMethod { hilbert_pair, complex_fft, qft_one_sided };

std::string_view to_string(OrthogonalMethod method);
/// Accepts "hilbert_pair", "complex_fft", "qft_one_sided" and the short form "qft".
OrthogonalMethod parse_orthogonal_method(std::string_view name);

/// The complex signal o orthogonal to z, o = H(z_r) - i H(z_i), and the route that produced it.
struct OrthogonalResult {
    ComplexSignal o;
    OrthogonalMethod method;
};

/// h = z + mu * o with z embedded on (1, xi) and a one-sided QFT_mu spectrum.
struct HyperanalyticSignal {
    QuaternionSignal h;
    QuaternionBasis basis = QuaternionBasis::standard();
};

/// Classical discrete Hilbert transform: multiply the DFT by -i sign(nu).
/// DC and Nyquist are annihilated.
RealSignal hilbert_real(const RealSignal& x);

/// Two independent real Hilbert transforms: o = H(z_r) - i H(z_i).
OrthogonalResult orthogonal_hilbert_pair(const ComplexSignal& z);

/// One complex DFT of z: conj(o) = IDFT(-i sign(nu) Z), conjugated before returning.
OrthogonalResult orthogonal_complex_fft(const ComplexSignal& z);

/// Perplex part of the hyperanalytic signal, left-multiplied by mu^-1 = -mu.
OrthogonalResult orthogonal_qft(const ComplexSignal& z, const QuaternionBasis& basis = QuaternionBasis::standard());

OrthogonalResult orthogonal(const ComplexSignal& z, OrthogonalMethod method,
                            const QuaternionBasis& basis = QuaternionBasis::standard());

/// IQFT_mu(-mu sign(nu) Z_mu), with -mu applied on the left. The result lies in
/// the (1, xi) plane and equals the embedded orthogonal signal.
QuaternionSignal hyperhilbert(const ComplexSignal& z, const QuaternionBasis& basis = QuaternionBasis::standard());

/// IQFT_mu([1 + sign(nu)] Z_mu).
HyperanalyticSignal hyperanalytic(const ComplexSignal& z, const QuaternionBasis& basis = QuaternionBasis::standard());

struct SimplexPerplex {
    ComplexSignal simplex;       // (h - xi h xi) / 2, read on (1, xi)
    QuaternionSignal perplex;    // (h + xi h xi) / 2
    ComplexSignal orthogonal;    // -mu * perplex, read on (1, xi)
};

SimplexPerplex simplex_perplex(const HyperanalyticSignal& h);

/// sum_n x[n] conj(y[n]) T. Real part: sum x_r y_r + x_i y_i; imaginary part: sum x_i y_r - x_r y_i.
Complex orthogonality_residual(const ComplexSignal& x, const ComplexSignal& y);

/// sqrt(sum |x[n]|^2 T).
double energy_norm(const ComplexSignal& x);

}  // namespace hyperanalytic
