#include "hyperanalytic/analytic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hyperanalytic {

namespace {

Complex read_plane(const Quaternion& q, const QuaternionBasis& basis) {
    const Quaternion c = basis.coordinates(q);
    return {c.w, c.x};
}

std::vector<double> hilbert_samples(std::span<const double> x) {
    std::vector<Complex> xc(x.begin(), x.end());
    auto spectrum = fft(xc, Direction::forward);
    const auto sign = discrete_sign(x.size());
    for (std::size_t k = 0; k < spectrum.size(); ++k) {
        spectrum[k] *= Complex{0.0, -static_cast<double>(sign[k])};
    }
    const auto back = fft(spectrum, Direction::inverse);
    std::vector<double> out(x.size());
    for (std::size_t n = 0; n < out.size(); ++n) {
        out[n] = back[n].real();
    }
    return out;
}

QuaternionSignal transform_and_multiply(const ComplexSignal& z, const QuaternionBasis& basis,
                                        auto&& bin_multiplier) {
    auto spectrum = qft(embed(z, basis), basis.mu());
    for (std::size_t k = 0; k < spectrum.size(); ++k) {
        spectrum.bins[k] = bin_multiplier(k) * spectrum.bins[k];
    }
    return iqft(spectrum);
}

}  // namespace

std::string_view to_string(OrthogonalMethod method) {
    switch (method) {
        case OrthogonalMethod::hilbert_pair: return "hilbert_pair";
        case OrthogonalMethod::complex_fft: return "complex_fft";
        case OrthogonalMethod::qft_one_sided: return "qft_one_sided";
    }
    return "unknown";
}

OrthogonalMethod parse_orthogonal_method(std::string_view name) {
    if (name == "hilbert_pair") return OrthogonalMethod::hilbert_pair;
    if (name == "complex_fft") return OrthogonalMethod::complex_fft;
    if (name == "qft_one_sided" || name == "qft") return OrthogonalMethod::qft_one_sided;
    throw std::invalid_argument("unknown orthogonal method '" + std::string(name) + "'");
}

RealSignal hilbert_real(const RealSignal& x) {
    return RealSignal(hilbert_samples(x.samples()), x.sample_period());
}

OrthogonalResult orthogonal_hilbert_pair(const ComplexSignal& z) {
    const auto hr = hilbert_samples(real_part(z));
    const auto hi = hilbert_samples(imag_part(z));
    std::vector<Complex> o(z.size());
    for (std::size_t n = 0; n < o.size(); ++n) {
        o[n] = {hr[n], -hi[n]};
    }
    return {ComplexSignal(std::move(o), z.sample_period()), OrthogonalMethod::hilbert_pair};
}

OrthogonalResult orthogonal_complex_fft(const ComplexSignal& z) {
    auto spectrum = fft(z.samples(), Direction::forward);
    const auto sign = discrete_sign(z.size());
    for (std::size_t k = 0; k < spectrum.size(); ++k) {
        spectrum[k] *= Complex{0.0, -static_cast<double>(sign[k])};
    }
    auto o = fft(spectrum, Direction::inverse);  // conj(o)
    for (auto& v : o) {
        v = std::conj(v);
    }
    return {ComplexSignal(std::move(o), z.sample_period()), OrthogonalMethod::complex_fft};
}

OrthogonalResult orthogonal_qft(const ComplexSignal& z, const QuaternionBasis& basis) {
    return {simplex_perplex(hyperanalytic(z, basis)).orthogonal, OrthogonalMethod::qft_one_sided};
}

OrthogonalResult orthogonal(const ComplexSignal& z, OrthogonalMethod method, const QuaternionBasis& basis) {
    switch (method) {
        case OrthogonalMethod::hilbert_pair: return orthogonal_hilbert_pair(z);
        case OrthogonalMethod::complex_fft: return orthogonal_complex_fft(z);
        case OrthogonalMethod::qft_one_sided: return orthogonal_qft(z, basis);
    }
    throw std::invalid_argument("unknown orthogonal method");
}

QuaternionSignal hyperhilbert(const ComplexSignal& z, const QuaternionBasis& basis) {
    const auto sign = discrete_sign(z.size());
    const Quaternion minus_mu = -basis.mu().value();
    return transform_and_multiply(z, basis, [&](std::size_t k) { return minus_mu * static_cast<double>(sign[k]); });
}

HyperanalyticSignal hyperanalytic(const ComplexSignal& z, const QuaternionBasis& basis) {
    const auto m = one_sided_multiplier(z.size());
    return {transform_and_multiply(z, basis, [&](std::size_t k) { return Quaternion(m[k]); }), basis};
}

SimplexPerplex simplex_perplex(const HyperanalyticSignal& hs) {
    const Quaternion& xi = hs.basis.xi().value();
    const Quaternion minus_mu = -hs.basis.mu().value();
    std::vector<Complex> simplex(hs.h.size());
    std::vector<Quaternion> perplex(hs.h.size());
    std::vector<Complex> o(hs.h.size());
    for (std::size_t n = 0; n < hs.h.size(); ++n) {
        const Quaternion& h = hs.h[n];
        const Quaternion sandwich = xi * h * xi;
        simplex[n] = read_plane(0.5 * (h - sandwich), hs.basis);
        perplex[n] = 0.5 * (h + sandwich);
        o[n] = read_plane(minus_mu * perplex[n], hs.basis);
    }
    const double period = hs.h.sample_period();
    return {ComplexSignal(std::move(simplex), period), QuaternionSignal(std::move(perplex), period),
            ComplexSignal(std::move(o), period)};
}

Complex orthogonality_residual(const ComplexSignal& x, const ComplexSignal& y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("orthogonality residual needs equal lengths");
    }
    Complex acc{};
    for (std::size_t n = 0; n < x.size(); ++n) {
        acc += x[n] * std::conj(y[n]);
    }
    return acc * x.sample_period();
}

double energy_norm(const ComplexSignal& x) {
    double acc = 0.0;
    for (const auto& v : x) {
        acc += std::norm(v);
    }
    return std::sqrt(acc * x.sample_period());
}

}  // namespace hyperanalytic
