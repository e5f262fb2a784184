#pragma once

// O(N^2) direct-summation transforms. They share no code with the fast
// paths and serve as correctness references in tests and the selftest.

#include <span>
#include <vector>

#include "hyperanalytic/fft.hpp"
#include "hyperanalytic/quaternion.hpp"

namespace hyperanalytic::reference {

std::vector<Complex> direct_dft(std::span<const Complex> x, Direction dir);

/// sum_n s[n] * exp(-+ mu 2 pi k n / N), exponential on the right, quaternion arithmetic throughout.
std::vector<Quaternion> direct_qft(std::span<const Quaternion> s, const Quaternion& mu, Direction dir);

std::vector<Complex> direct_circular_convolve(std::span<const Complex> g, std::span<const double> f);

/// Hilbert transform of a real sequence by direct DFT with the -i sign(nu) multiplier.
std::vector<double> direct_hilbert(std::span<const double> x);

}  // namespace hyperanalytic::reference
