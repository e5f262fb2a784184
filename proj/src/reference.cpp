#include "hyperanalytic/reference.hpp"

#include <cmath>
#include <numbers>

namespace hyperanalytic::reference {

namespace {

double angle(std::size_t k, std::size_t n, std::size_t len) {
    return 2.0 * std::numbers::pi * static_cast<double>((k * n) % len) / static_cast<double>(len);
}

}  // namespace

std::vector<Complex> direct_dft(std::span<const Complex> x, Direction dir) {
    const std::size_t len = x.size();
    const double sign = dir == Direction::forward ? -1.0 : 1.0;
    std::vector<Complex> out(len);
    for (std::size_t k = 0; k < len; ++k) {
        Complex acc{};
        for (std::size_t n = 0; n < len; ++n) {
            acc += x[n] * std::polar(1.0, sign * angle(k, n, len));
        }
        out[k] = dir == Direction::forward ? acc : acc / static_cast<double>(len);
    }
    return out;
}

std::vector<Quaternion> direct_qft(std::span<const Quaternion> s, const Quaternion& mu, Direction dir) {
    const std::size_t len = s.size();
    const double sign = dir == Direction::forward ? -1.0 : 1.0;
    std::vector<Quaternion> out(len);
    for (std::size_t k = 0; k < len; ++k) {
        Quaternion acc;
        for (std::size_t n = 0; n < len; ++n) {
            const double theta = sign * angle(k, n, len);
            const Quaternion kernel = Quaternion(std::cos(theta)) + std::sin(theta) * mu;
            acc += s[n] * kernel;
        }
        out[k] = dir == Direction::forward ? acc : acc / static_cast<double>(len);
    }
    return out;
}

std::vector<Complex> direct_circular_convolve(std::span<const Complex> g, std::span<const double> f) {
    const std::size_t len = g.size();
    std::vector<Complex> out(len);
    for (std::size_t n = 0; n < len; ++n) {
        Complex acc{};
        for (std::size_t m = 0; m < len; ++m) {
            acc += g[m] * f[(n + len - m) % len];
        }
        out[n] = acc;
    }
    return out;
}

std::vector<double> direct_hilbert(std::span<const double> x) {
    const std::size_t len = x.size();
    std::vector<Complex> xc(x.begin(), x.end());
    auto spectrum = direct_dft(xc, Direction::forward);
    for (std::size_t k = 0; k < len; ++k) {
        double sgn = 0.0;
        if (2 * k < len && k != 0) {
            sgn = 1.0;
        } else if (2 * k > len) {
            sgn = -1.0;
        }
        spectrum[k] *= Complex{0.0, -sgn};
    }
    const auto back = direct_dft(spectrum, Direction::inverse);
    std::vector<double> out(len);
    for (std::size_t n = 0; n < len; ++n) {
        out[n] = back[n].real();
    }
    return out;
}

}  // namespace hyperanalytic::reference
