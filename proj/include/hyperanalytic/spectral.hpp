#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyperanalytic/fft.hpp"
#include "hyperanalytic/quaternion.hpp"
#include "hyperanalytic/signal.hpp"

namespace hyperanalytic {

/// Bins of a right-sided quaternion Fourier transform with axis mu. Bin k is
/// normalized frequency k/N for k < N/2 and (k - N)/N otherwise.
struct QuaternionSpectrum {
    std::vector<Quaternion> bins;
    UnitPureQuaternion axis;
    double sample_period = 1.0;

    std::size_t size() const { return bins.size(); }
};

/// Discrete sign(nu): 0 at DC, +1 on 1..ceil(N/2)-1, 0 at Nyquist (even N), -1 above.
std::vector<int> discrete_sign(std::size_t n);

/// 1 + sign(nu): {1, 2, ..., 2, 1, 0, ..., 0} for even N.
std::vector<double> one_sided_multiplier(std::size_t n);

/// True when bin k of an N-point transform is a negative frequency.
inline bool is_negative_bin(std::size_t k, std::size_t n) { return 2 * k > n; }

/// Complex DFT: forward X[k] = sum x[n] exp(-2 pi i k n / N), inverse carries 1/N.
ComplexSignal dft(const ComplexSignal& x, Direction dir = Direction::forward);

/// Any unit pure quaternion orthogonal to mu.
UnitPureQuaternion orthogonal_axis(const UnitPureQuaternion& mu);

/// Right QFT on raw samples. Forward: S[k] = sum s[n] exp(-mu 2 pi k n / N);
/// inverse uses +mu and 1/N. Each sample is split as p + xi*r with p, r in the
/// (1, mu) plane and the two planes run through complex DFTs.
std::vector<Quaternion> qft(std::span<const Quaternion> s, const UnitPureQuaternion& mu, Direction dir);

QuaternionSpectrum qft(const QuaternionSignal& s, const UnitPureQuaternion& mu);
QuaternionSignal iqft(const QuaternionSpectrum& spectrum);

/// Components of QFT_mu(z) on (1, xi, mu, xi*mu) for a complex z embedded with xi = i.
struct SymmetryReport {
    std::vector<double> scalar;
    std::vector<double> xi;
    std::vector<double> mu;
    std::vector<double> ximu;
};

/// Throws std::invalid_argument if mu is not orthogonal to i.
SymmetryReport qft_symmetry_report(const ComplexSignal& z, const UnitPureQuaternion& mu);

/// (g * f)[n] = sum_m g[m] f[(n - m) mod N]. Lengths must match.
ComplexSignal circular_convolve(const ComplexSignal& g, const RealSignal& f);

}  // namespace hyperanalytic
