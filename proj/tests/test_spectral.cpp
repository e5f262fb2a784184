#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hyperanalytic/analytic.hpp"
#include "hyperanalytic/reference.hpp"
#include "hyperanalytic/spectral.hpp"
#include "test_support.hpp"

using namespace hyperanalytic;
using namespace test_support;

TEST_CASE("dft of a constant and an impulse", "[spectral][dft]") {
    const auto X = dft(ComplexSignal({1.0, 1.0, 1.0, 1.0}));
    CHECK(std::abs(X[0] - Complex{4, 0}) <= 1e-15);
    for (std::size_t k = 1; k < 4; ++k) CHECK(std::abs(X[k]) <= 1e-15);

    std::vector<Complex> delta(8, 0.0);
    delta[0] = 1.0;
    for (const auto& v : dft(ComplexSignal(delta))) CHECK(std::abs(v - Complex{1, 0}) <= 1e-15);
}

TEST_CASE("dft rejects short signals", "[spectral][dft]") {
    CHECK_THROWS_AS(ComplexSignal(std::vector<Complex>{}), std::invalid_argument);
    CHECK_THROWS_AS(fft(std::vector<Complex>{}), std::invalid_argument);
}

TEST_CASE("fft matches direct summation for many lengths", "[spectral][dft]") {
    std::mt19937_64 rng(21);
    // powers of two, mixed radix, primes handled directly and through Bluestein
    for (std::size_t n : {2u, 3u, 5u, 8u, 12u, 31u, 37u, 60u, 64u, 97u, 100u, 210u, 256u, 257u, 1000u, 1024u}) {
        const auto x = random_complex(rng, n);
        const auto direct = reference::direct_dft(x, Direction::forward);
        const auto fast = fft(x, Direction::forward);
        INFO("n = " << n);
        REQUIRE(max_abs_diff(fast, direct) <= 1e-10);
        const auto back = fft(fast, Direction::inverse);
        REQUIRE(max_abs_diff(back, x) <= 1e-12 * std::max(1.0, max_abs(x)));
        const auto inv_direct = reference::direct_dft(x, Direction::inverse);
        REQUIRE(max_abs_diff(fft(x, Direction::inverse), inv_direct) <= 1e-12);
    }
}

TEST_CASE("plan selection", "[spectral][dft]") {
    CHECK_FALSE(FftPlan(1024).uses_bluestein());
    CHECK_FALSE(FftPlan(1000).uses_bluestein());
    CHECK(FftPlan(257).uses_bluestein());
    CHECK(&plan_for(64) == &plan_for(64));
}

TEST_CASE("discrete sign and one-sided multiplier", "[spectral]") {
    CHECK(discrete_sign(8) == std::vector<int>{0, 1, 1, 1, 0, -1, -1, -1});
    CHECK(discrete_sign(7) == std::vector<int>{0, 1, 1, 1, -1, -1, -1});
    CHECK(one_sided_multiplier(8) == std::vector<double>{1, 2, 2, 2, 1, 0, 0, 0});
    CHECK(one_sided_multiplier(5) == std::vector<double>{1, 2, 2, 0, 0});
    for (std::size_t n : {2u, 9u, 16u, 255u}) {
        const auto s = discrete_sign(n);
        for (std::size_t k = 1; k < n; ++k) REQUIRE(s[k] == -s[n - k]);
    }
}

TEST_CASE("qft of a constant", "[spectral][qft]") {
    const QuaternionSignal s(std::vector<Quaternion>(8, Quaternion(1.0)));
    const auto Z = qft(s, UnitPureQuaternion::j());
    CHECK(qdist(Z.bins[0], Quaternion(8.0)) <= 1e-14);
    for (std::size_t k = 1; k < 8; ++k) CHECK(abs(Z.bins[k]) <= 1e-14);
}

TEST_CASE("qft of i cos(2 pi n / 8) with axis j", "[spectral][qft]") {
    std::vector<Quaternion> s(8);
    for (std::size_t n = 0; n < 8; ++n) s[n] = std::cos(2 * kPi * n / 8.0) * Quaternion::i();
    const Quaternion mu = Quaternion::j();
    const auto fast = qft(s, UnitPureQuaternion::j(), Direction::forward);
    const auto direct = reference::direct_qft(s, mu, Direction::forward);
    for (std::size_t k = 0; k < 8; ++k) {
        const Quaternion expected = (k == 1 || k == 7) ? 4.0 * Quaternion::i() : Quaternion{};
        CHECK(qdist(direct[k], expected) <= 1e-14);
        CHECK(qdist(fast[k], expected) <= 1e-14);
    }
}

TEST_CASE("fast qft equals direct quaternion summation", "[spectral][qft]") {
    std::mt19937_64 rng(22);
    const UnitPureQuaternion axes[] = {UnitPureQuaternion::i(), UnitPureQuaternion::j(), UnitPureQuaternion::k(),
                                       UnitPureQuaternion::normalized(0.3, -0.5, 0.8)};
    for (std::size_t n : {8u, 64u, 256u, 30u, 101u}) {
        std::vector<Quaternion> s(n);
        for (auto& q : s) q = random_quaternion(rng);
        for (const auto& mu : axes) {
            const auto fast = qft(s, mu, Direction::forward);
            REQUIRE(max_abs_diff(fast, reference::direct_qft(s, mu, Direction::forward)) <= 1e-10);
            REQUIRE(max_abs_diff(qft(fast, mu, Direction::inverse), s) <= 1e-12);
            REQUIRE(max_abs_diff(qft(s, mu, Direction::inverse), reference::direct_qft(s, mu, Direction::inverse)) <=
                    1e-12);
        }
    }
}

TEST_CASE("qft is left-linear in quaternion coefficients", "[spectral][qft][property]") {
    std::mt19937_64 rng(23);
    const auto mu = UnitPureQuaternion::normalized(1, 2, -1);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 48;
        std::vector<Quaternion> a(n), b(n), c(n);
        for (auto& q : a) q = random_quaternion(rng);
        for (auto& q : b) q = random_quaternion(rng);
        const Quaternion p = random_quaternion(rng), r = random_quaternion(rng);
        for (std::size_t k = 0; k < n; ++k) c[k] = p * a[k] + r * b[k];
        const auto A = qft(a, mu, Direction::forward), B = qft(b, mu, Direction::forward);
        const auto C = qft(c, mu, Direction::forward);
        for (std::size_t k = 0; k < n; ++k) REQUIRE(qdist(C[k], p * A[k] + r * B[k]) <= 1e-12);
    }
}

TEST_CASE("qft of a real signal is the dft with i replaced by mu", "[spectral][qft]") {
    std::mt19937_64 rng(24);
    const auto x = random_real(rng, 64);
    const std::vector<Complex> xc(x.begin(), x.end());
    const auto X = fft(xc);
    const auto mu = UnitPureQuaternion::normalized(-2, 1, 0.5);
    std::vector<Quaternion> xq(x.size());
    for (std::size_t n = 0; n < x.size(); ++n) xq[n] = Quaternion(x[n]);
    const auto Q = qft(xq, mu, Direction::forward);
    for (std::size_t k = 0; k < x.size(); ++k) {
        REQUIRE(qdist(Q[k], Quaternion(X[k].real()) + X[k].imag() * mu.value()) <= 1e-12);
    }
}

TEST_CASE("Parseval for the qft", "[spectral][qft]") {
    std::mt19937_64 rng(25);
    std::vector<Quaternion> s(100);
    for (auto& q : s) q = random_quaternion(rng);
    const auto S = qft(s, UnitPureQuaternion::k(), Direction::forward);
    double time = 0.0, freq = 0.0;
    for (std::size_t n = 0; n < s.size(); ++n) {
        time += norm(s[n]);
        freq += norm(S[n]);
    }
    CHECK(std::abs(time - freq / s.size()) <= 1e-10 * time);
}

TEST_CASE("qft axis must be unit pure", "[spectral][qft]") {
    CHECK_THROWS_AS(UnitPureQuaternion(Quaternion{0, 2, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(qft_symmetry_report(ComplexSignal({1.0, 2.0}), UnitPureQuaternion::i()), std::invalid_argument);
}

TEST_CASE("symmetry placement of even and odd parts", "[spectral][qft]") {
    const std::size_t n = 32;
    auto only = [](const SymmetryReport& r, int which) {
        const std::vector<double>* parts[] = {&r.scalar, &r.xi, &r.mu, &r.ximu};
        double stray = 0.0, kept = 0.0;
        for (int p = 0; p < 4; ++p) {
            double& slot = p == which ? kept : stray;
            for (double v : *parts[p]) slot = std::max(slot, std::abs(v));
        }
        return std::pair{kept, stray};
    };
    std::vector<Complex> c(n), is(n), s(n), ic(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = 2 * kPi * k / n;
        c[k] = std::cos(t);
        s[k] = std::sin(t);
        is[k] = Complex{0, std::sin(t)};
        ic[k] = Complex{0, std::cos(t)};
    }
    const auto mu = UnitPureQuaternion::j();
    auto [k1, s1] = only(qft_symmetry_report(ComplexSignal(c), mu), 0);
    CHECK(k1 > 1.0);
    CHECK(s1 <= 1e-12);
    auto [k2, s2] = only(qft_symmetry_report(ComplexSignal(is), mu), 3);
    CHECK(k2 > 1.0);
    CHECK(s2 <= 1e-12);
    auto [k3, s3] = only(qft_symmetry_report(ComplexSignal(s), mu), 2);
    CHECK(k3 > 1.0);
    CHECK(s3 <= 1e-12);
    auto [k4, s4] = only(qft_symmetry_report(ComplexSignal(ic), UnitPureQuaternion::k()), 1);
    CHECK(k4 > 1.0);
    CHECK(s4 <= 1e-12);
}

TEST_CASE("circular convolution", "[spectral][convolution]") {
    SECTION("identity kernel") {
        std::mt19937_64 rng(26);
        const auto g = random_complex(rng, 16);
        std::vector<double> delta(16, 0.0);
        delta[0] = 1.0;
        CHECK(max_abs_diff(circular_convolve(ComplexSignal(g), RealSignal(delta)).samples(), g) <= 1e-15);
    }
    SECTION("shifted impulses") {
        std::vector<Complex> g(8, 0.0);
        g[2] = 1.0;
        std::vector<double> f(8, 0.0);
        f[3] = 1.0;
        const auto r = circular_convolve(ComplexSignal(g), RealSignal(f));
        for (std::size_t k = 0; k < 8; ++k) CHECK(std::abs(r[k] - Complex(k == 5 ? 1.0 : 0.0)) <= 1e-15);
    }
    SECTION("length mismatch") {
        CHECK_THROWS_AS(circular_convolve(ComplexSignal({1.0, 2.0, 3.0}), RealSignal({1.0, 2.0})),
                        std::invalid_argument);
    }
    SECTION("matches time-domain sum and the qft convolution theorem") {
        std::mt19937_64 rng(27);
        const std::size_t n = 64;
        const auto g = random_complex(rng, n);
        const auto f = random_real(rng, n);
        const auto conv = circular_convolve(ComplexSignal(g), RealSignal(f));
        REQUIRE(max_abs_diff(conv.samples(), reference::direct_circular_convolve(g, f)) <= 1e-12);

        const auto basis = QuaternionBasis::standard();
        const auto lhs = qft(embed(conv, basis), basis.mu());
        const auto G = qft(embed(ComplexSignal(g), basis), basis.mu());
        std::vector<Quaternion> fq(n);
        for (std::size_t k = 0; k < n; ++k) fq[k] = Quaternion(f[k]);
        const auto F = qft(fq, basis.mu(), Direction::forward);
        for (std::size_t k = 0; k < n; ++k) REQUIRE(qdist(lhs.bins[k], G.bins[k] * F[k]) <= 1e-10);
    }
}
