#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <limits>
#include <random>
#include <sstream>

#include "hyperanalytic/generate.hpp"
#include "hyperanalytic/io.hpp"
#include "test_support.hpp"

using namespace hyperanalytic;
using namespace test_support;

namespace {

std::size_t parse_error_line(const std::string& text) {
    std::istringstream in(text);
    try {
        io::read_signal_csv(in, "mem");
    } catch (const io::ParseError& e) {
        return e.line();
    }
    FAIL("no parse error for:\n" << text);
    return 0;
}

}  // namespace

TEST_CASE("CSV round trip is bit exact", "[io]") {
    std::mt19937_64 rng(71);
    auto v = random_complex(rng, 100);
    v[3] = {1e-300, -0.0};
    v[4] = {1.0 / 3.0, 123456789.123456789};
    const ComplexSignal z(v);
    std::stringstream buf;
    io::write_signal_csv(buf, z);
    const auto back = io::read_signal_csv(buf);
    REQUIRE(back.size() == z.size());
    for (std::size_t n = 0; n < z.size(); ++n) REQUIRE(back[n] == z[n]);
}

TEST_CASE("CSV file round trip", "[io]") {
    const auto path = std::filesystem::temp_directory_path() / "hyperanalytic_io_roundtrip.csv";
    const ComplexSignal z({Complex{1, 2}, Complex{-3, 0.5}, Complex{0, 0}});
    io::write_signal_csv(path, z);
    const auto back = io::read_signal_csv(path, 0.25);
    CHECK(back[1] == Complex{-3, 0.5});
    CHECK(back.sample_period() == 0.25);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(io::read_signal_csv(path), std::runtime_error);
}

TEST_CASE("CSV tolerates blank lines, CR and spaces", "[io]") {
    std::istringstream in("index,real,imag\r\n0, 1.5 ,2\r\n\n1,+3,-4e-1\n");
    const auto z = io::read_signal_csv(in);
    CHECK(z[0] == Complex{1.5, 2});
    CHECK(z[1] == Complex{3, -0.4});
}

TEST_CASE("malformed CSV reports the line", "[io]") {
    CHECK(parse_error_line("index,re,im\n0,1,2\n") == 1);
    CHECK(parse_error_line("index,real,imag\n0,1,2\n1,2\n") == 3);
    CHECK(parse_error_line("index,real,imag\n0,1,2\n1,2,3,4\n") == 3);
    CHECK(parse_error_line("index,real,imag\n0,1,2\n2,2,3\n") == 3);
    CHECK(parse_error_line("index,real,imag\n0,abc,2\n1,1,1\n") == 2);
    CHECK(parse_error_line("index,real,imag\n0,1,nan\n1,1,1\n") == 2);
    CHECK(parse_error_line("index,real,imag\n0,1,inf\n1,1,1\n") == 2);
    CHECK(parse_error_line("index,real,imag\nx,1,2\n") == 2);
}

TEST_CASE("empty and too-short files", "[io]") {
    CHECK(parse_error_line("") == 0);
    CHECK(parse_error_line("\n\n") == 0);
    CHECK(parse_error_line("index,real,imag\n") == 0);
    CHECK(parse_error_line("index,real,imag\n0,1,1\n") == 0);
    std::istringstream in("");
    CHECK_THROWS_WITH(io::read_signal_csv(in, "x.csv"), Catch::Matchers::ContainsSubstring("empty"));
}

TEST_CASE("quaternion CSV layout", "[io]") {
    std::ostringstream out;
    io::write_quaternion_csv(out, QuaternionSignal({Quaternion{1, 2, 3, 4}, Quaternion{0.5, 0, 0, -1}}));
    CHECK(out.str() == "index,w,x,y,z\n0,1,2,3,4\n1,0.5,0,0,-1\n");
}

TEST_CASE("format_real is shortest-exact at 17 digits", "[io]") {
    CHECK(io::format_real(0.1) == "0.10000000000000001");
    CHECK(io::format_real(2.0) == "2");
    CHECK(std::stod(io::format_real(kPi)) == kPi);
}

TEST_CASE("generator validation", "[generate]") {
    GeneratorSpec s;
    CHECK_NOTHROW(validate(s));
    auto bad = s;
    bad.carrier_freq = 0.5;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = s;
    bad.helix_freq = 0.06;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = s;
    bad.gauss_sigma = 0;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = s;
    bad.n = 1;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = s;
    bad.theta = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    CHECK_THROWS_AS(parse_waveform("square"), std::invalid_argument);
    CHECK(parse_waveform("am_gauss") == Waveform::am_gauss);
}

TEST_CASE("generated signals follow the model", "[generate]") {
    GeneratorSpec s;
    s.psi = 0.4;
    s.theta = -0.3;
    s.amplitude = 2.0;
    const auto g = modulator(s);
    const auto z = generate(s);
    REQUIRE(z.size() == 1000);
    for (std::size_t n : {0u, 300u, 517u, 999u}) {
        const double t = static_cast<double>(n);
        const double env = std::exp(-(t - 300) * (t - 300) / 7200.0) + std::exp(-(t - 700) * (t - 700) / 7200.0);
        const Complex expected_g = std::polar(env, 0.4 + 2 * kPi * 0.005 * t);
        CHECK(std::abs(g[n] - expected_g) <= 1e-14);
        CHECK(std::abs(z[n] - 2.0 * expected_g * std::cos(2 * kPi * 0.05 * t - 0.3)) <= 1e-14);
    }
    s.waveform = Waveform::tone;
    for (const auto& v : modulator(s)) REQUIRE(std::abs(v - std::polar(1.0, 0.4)) <= 1e-15);
}

TEST_CASE("default modulators are band-limited below the carrier", "[generate]") {
    for (const auto w : {Waveform::am_gauss, Waveform::helix_gauss}) {
        GeneratorSpec s;
        s.waveform = w;
        CHECK(out_of_band_fraction(modulator(s), s.carrier_freq) <= 1e-6);
    }
    // a modulator at the carrier itself is far out of band
    std::vector<Complex> fast(200);
    for (std::size_t n = 0; n < fast.size(); ++n) fast[n] = std::polar(1.0, 2 * kPi * 0.1 * n);
    CHECK(out_of_band_fraction(ComplexSignal(fast), 0.05) > 0.99);
}
