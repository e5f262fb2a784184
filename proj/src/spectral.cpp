#include "hyperanalytic/spectral.hpp"

#include <stdexcept>

namespace hyperanalytic {

std::vector<int> discrete_sign(std::size_t n) {
    std::vector<int> s(n, 0);
    for (std::size_t k = 1; k < n; ++k) {
        if (2 * k < n) {
            s[k] = 1;
        } else if (2 * k > n) {
            s[k] = -1;
        }
    }
    return s;
}

std::vector<double> one_sided_multiplier(std::size_t n) {
    const auto s = discrete_sign(n);
    std::vector<double> m(n);
    for (std::size_t k = 0; k < n; ++k) {
        m[k] = 1.0 + s[k];
    }
    return m;
}

ComplexSignal dft(const ComplexSignal& x, Direction dir) {
    return ComplexSignal(fft(x.samples(), dir), x.sample_period());
}

UnitPureQuaternion orthogonal_axis(const UnitPureQuaternion& mu) {
    const Quaternion& m = mu.value();
    // Cross with the coordinate axis least aligned with mu.
    const double ax = std::abs(m.x);
    const double ay = std::abs(m.y);
    const double az = std::abs(m.z);
    Quaternion e = Quaternion::i();
    if (ay <= ax && ay <= az) {
        e = Quaternion::j();
    } else if (az <= ax && az <= ay) {
        e = Quaternion::k();
    }
    const Quaternion c = (m * e).vector();
    return UnitPureQuaternion::normalized(c.x, c.y, c.z);
}

std::vector<Quaternion> qft(std::span<const Quaternion> s, const UnitPureQuaternion& mu, Direction dir) {
    if (s.empty()) {
        throw std::invalid_argument("cannot transform an empty sequence");
    }
    const UnitPureQuaternion xi = orthogonal_axis(mu);
    const QuaternionBasis basis(xi, mu);

    // s = p + xi*r with p = c0 + c2*mu and r = c1 + c3*mu on the basis (1, xi, mu, xi*mu).
    std::vector<Complex> p(s.size());
    std::vector<Complex> r(s.size());
    for (std::size_t n = 0; n < s.size(); ++n) {
        const Quaternion c = basis.coordinates(s[n]);
        p[n] = {c.w, c.y};
        r[n] = {c.x, c.z};
    }
    const auto pf = fft(p, dir);
    const auto rf = fft(r, dir);

    std::vector<Quaternion> out(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        out[k] = basis.from_coordinates({pf[k].real(), rf[k].real(), pf[k].imag(), rf[k].imag()});
    }
    return out;
}

QuaternionSpectrum qft(const QuaternionSignal& s, const UnitPureQuaternion& mu) {
    return {qft(s.samples(), mu, Direction::forward), mu, s.sample_period()};
}

QuaternionSignal iqft(const QuaternionSpectrum& spectrum) {
    return QuaternionSignal(qft(spectrum.bins, spectrum.axis, Direction::inverse), spectrum.sample_period);
}

SymmetryReport qft_symmetry_report(const ComplexSignal& z, const UnitPureQuaternion& mu) {
    const QuaternionBasis basis(UnitPureQuaternion::i(), mu);
    const auto spectrum = qft(embed(z, basis), mu);
    SymmetryReport report;
    for (const auto& bin : spectrum.bins) {
        const Quaternion c = basis.coordinates(bin);
        report.scalar.push_back(c.w);
        report.xi.push_back(c.x);
        report.mu.push_back(c.y);
        report.ximu.push_back(c.z);
    }
    return report;
}

ComplexSignal circular_convolve(const ComplexSignal& g, const RealSignal& f) {
    if (g.size() != f.size()) {
        throw std::invalid_argument("circular convolution needs equal lengths");
    }
    std::vector<Complex> fc(f.begin(), f.end());
    auto gs = fft(g.samples(), Direction::forward);
    const auto fs = fft(fc, Direction::forward);
    for (std::size_t k = 0; k < gs.size(); ++k) {
        gs[k] *= fs[k];
    }
    return ComplexSignal(fft(gs, Direction::inverse), g.sample_period());
}

}  // namespace hyperanalytic
