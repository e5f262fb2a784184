#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <sstream>

#include "hyperanalytic/analytic.hpp"
#include "hyperanalytic/envelope.hpp"
#include "hyperanalytic/generate.hpp"
#include "hyperanalytic/io.hpp"
#include "hyperanalytic/properness.hpp"
#include "hyperanalytic/selftest.hpp"

namespace py = pybind11;
namespace ha = hyperanalytic;

using Axis = std::array<double, 4>;
using ComplexArray = py::array_t<ha::Complex, py::array::c_style | py::array::forcecast>;
using RealArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

namespace {

ha::ComplexSignal to_signal(const ComplexArray& a, double period) {
    if (a.ndim() != 1) throw std::invalid_argument("expected a 1-D array");
    const auto* p = a.data();
    return ha::ComplexSignal(std::vector<ha::Complex>(p, p + a.size()), period);
}

template <typename T>
py::array_t<T> to_array(std::span<const T> s) {
    py::array_t<T> out(static_cast<py::ssize_t>(s.size()));
    std::copy(s.begin(), s.end(), out.mutable_data());
    return out;
}

py::array_t<double> to_array(const ha::QuaternionSignal& q) {
    py::array_t<double> out({static_cast<py::ssize_t>(q.size()), py::ssize_t{4}});
    auto v = out.mutable_unchecked<2>();
    for (std::size_t n = 0; n < q.size(); ++n) {
        v(n, 0) = q[n].w;
        v(n, 1) = q[n].x;
        v(n, 2) = q[n].y;
        v(n, 3) = q[n].z;
    }
    return out;
}

std::vector<ha::Quaternion> to_quaternions(const RealArray& a) {
    if (a.ndim() != 2 || a.shape(1) != 4) throw std::invalid_argument("expected an (N, 4) array");
    auto v = a.unchecked<2>();
    std::vector<ha::Quaternion> q(static_cast<std::size_t>(a.shape(0)));
    for (std::size_t n = 0; n < q.size(); ++n) q[n] = {v(n, 0), v(n, 1), v(n, 2), v(n, 3)};
    return q;
}

ha::Quaternion to_quaternion(const Axis& a) { return {a[0], a[1], a[2], a[3]}; }

ha::QuaternionBasis basis(const Axis& xi, const Axis& mu) {
    return {ha::UnitPureQuaternion(to_quaternion(xi)), ha::UnitPureQuaternion(to_quaternion(mu))};
}

constexpr Axis kI = {0, 1, 0, 0};
constexpr Axis kJ = {0, 0, 1, 0};

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hyperanalytic signals of complex-valued data";
    py::register_exception<ha::DegeneratePolarForm>(m, "DegeneratePolarForm", PyExc_ValueError);
    py::register_exception<ha::io::ParseError>(m, "ParseError", PyExc_ValueError);

    m.def(
        "hilbert",
        [](const RealArray& x) {
            const auto* p = x.data();
            const auto h = ha::hilbert_real(ha::RealSignal(std::vector<double>(p, p + x.size())));
            return to_array(h.samples());
        },
        py::arg("x"), "Discrete Hilbert transform of a real signal.");

    m.def(
        "orthogonal",
        [](const ComplexArray& z, const std::string& method, const Axis& xi, const Axis& mu) {
            const auto r = ha::orthogonal(to_signal(z, 1.0), ha::parse_orthogonal_method(method), basis(xi, mu));
            return to_array(r.o.samples());
        },
        py::arg("z"), py::arg("method") = "hilbert_pair", py::arg("xi") = kI, py::arg("mu") = kJ,
        "Orthogonal signal o = H(z_r) - i H(z_i) by 'hilbert_pair', 'complex_fft' or 'qft'.");

    m.def(
        "hyperanalytic",
        [](const ComplexArray& z, const Axis& xi, const Axis& mu) {
            return to_array(ha::hyperanalytic(to_signal(z, 1.0), basis(xi, mu)).h);
        },
        py::arg("z"), py::arg("xi") = kI, py::arg("mu") = kJ,
        "Hyperanalytic signal as an (N, 4) array of (w, x, y, z) components.");

    m.def(
        "hyperhilbert",
        [](const ComplexArray& z, const Axis& xi, const Axis& mu) {
            return to_array(ha::hyperhilbert(to_signal(z, 1.0), basis(xi, mu)));
        },
        py::arg("z"), py::arg("xi") = kI, py::arg("mu") = kJ);

    m.def(
        "qft",
        [](const RealArray& q, const Axis& mu, bool inverse) {
            const auto out = ha::qft(to_quaternions(q), ha::UnitPureQuaternion(to_quaternion(mu)),
                                     inverse ? ha::Direction::inverse : ha::Direction::forward);
            return to_array(ha::QuaternionSignal(out));
        },
        py::arg("q"), py::arg("mu") = kJ, py::arg("inverse") = false,
        "Right-sided quaternion Fourier transform of an (N, 4) array; the inverse carries 1/N.");

    m.def(
        "cdpolar",
        [](const Axis& q, const Axis& xi, const Axis& mu) {
            const auto p = ha::cdpolar(to_quaternion(q), basis(xi, mu));
            return py::make_tuple(p.modulus, p.argument);
        },
        py::arg("q"), py::arg("xi") = kI, py::arg("mu") = kJ,
        "Complex modulus A and argument B with q = A cos B + (A sin B) mu.");

    m.def(
        "cdpolar_inverse",
        [](ha::Complex a, ha::Complex b, const Axis& xi, const Axis& mu) {
            const auto q = ha::cdpolar_inverse(a, b, basis(xi, mu));
            return Axis{q.w, q.x, q.y, q.z};
        },
        py::arg("modulus"), py::arg("argument"), py::arg("xi") = kI, py::arg("mu") = kJ);

    m.def(
        "demodulate",
        [](const ComplexArray& z, const Axis& xi, const Axis& mu) {
            const auto d = ha::demodulate(to_signal(z, 1.0), basis(xi, mu));
            py::dict out;
            out["envelope"] = to_array(std::span<const ha::Complex>(d.polar.envelope));
            out["phase"] = to_array(std::span<const ha::Complex>(d.polar.phase));
            out["degenerate"] = py::array_t<bool>(py::cast(std::vector<bool>(d.polar.degenerate)));
            out["orthogonal"] = to_array(d.orthogonal.o.samples());
            out["hyperanalytic"] = to_array(d.hyperanalytic.h);
            return out;
        },
        py::arg("z"), py::arg("xi") = kI, py::arg("mu") = kJ,
        "Complex envelope and complex phase of z.");

    m.def(
        "properness",
        [](const ComplexArray& z, double tol, double sample_period, const Axis& xi, const Axis& mu) {
            const auto c = ha::covariance(ha::hyperanalytic(to_signal(z, sample_period), basis(xi, mu)));
            const auto r = ha::classify(c, tol);
            py::array_t<double> cov({py::ssize_t{4}, py::ssize_t{4}});
            auto v = cov.mutable_unchecked<2>();
            for (py::ssize_t i = 0; i < 4; ++i)
                for (py::ssize_t j = 0; j < 4; ++j) v(i, j) = c(i, j);
            py::dict out;
            out["alpha"] = r.alpha;
            out["omega"] = r.omega;
            out["beta"] = r.beta;
            out["gamma"] = r.gamma;
            out["energy"] = r.energy;
            out["classification"] = std::string(ha::to_string(r.classification));
            out["worst_predicate"] = r.worst_predicate;
            out["worst_deviation"] = r.worst_deviation;
            out["covariance"] = cov;
            return out;
        },
        py::arg("z"), py::arg("tol") = ha::kDefaultPropernessTolerance, py::arg("sample_period") = 1.0,
        py::arg("xi") = kI, py::arg("mu") = kJ);

    m.def(
        "generate",
        [](const std::string& waveform, std::size_t n, double carrier_freq, double helix_freq, double theta,
           double psi, double sigma, std::array<double, 2> centers, double amplitude) {
            ha::GeneratorSpec s;
            s.waveform = ha::parse_waveform(waveform);
            s.n = n;
            s.carrier_freq = carrier_freq;
            s.helix_freq = helix_freq;
            s.theta = theta;
            s.psi = psi;
            s.gauss_sigma = sigma;
            s.gauss_centers[0] = centers[0];
            s.gauss_centers[1] = centers[1];
            s.amplitude = amplitude;
            return to_array(ha::generate(s).samples());
        },
        py::arg("waveform") = "helix_gauss", py::arg("n") = 1000, py::arg("carrier_freq") = 0.05,
        py::arg("helix_freq") = 0.005, py::arg("theta") = 0.0, py::arg("psi") = 0.0, py::arg("sigma") = 60.0,
        py::arg("centers") = std::array<double, 2>{300.0, 700.0}, py::arg("amplitude") = 1.0);

    m.def("selftest", [] {
        std::vector<py::tuple> rows;
        for (const auto& r : ha::selftest::run_all()) rows.push_back(py::make_tuple(r.id, r.name, r.passed, r.detail));
        return rows;
    });
}
