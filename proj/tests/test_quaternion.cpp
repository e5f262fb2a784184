#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <random>

#include "hyperanalytic/quaternion.hpp"
#include "test_support.hpp"

using namespace hyperanalytic;
using test_support::qdist;

namespace {

// Left-multiplication matrix L(p) with p*q = L(p) [q]; an independent route to the Hamilton product.
Quaternion matrix_product(const Quaternion& p, const Quaternion& q) {
    const std::array<std::array<double, 4>, 4> L = {{
        {p.w, -p.x, -p.y, -p.z},
        {p.x, p.w, -p.z, p.y},
        {p.y, p.z, p.w, -p.x},
        {p.z, -p.y, p.x, p.w},
    }};
    const std::array<double, 4> v = {q.w, q.x, q.y, q.z};
    std::array<double, 4> r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i] += L[i][j] * v[j];
    return {r[0], r[1], r[2], r[3]};
}

}  // namespace

TEST_CASE("multiplication table", "[quaternion]") {
    const auto i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(j * k == i);
    CHECK(k * i == j);
    CHECK(i * i == Quaternion(-1.0));
    CHECK(j * j == Quaternion(-1.0));
    CHECK(k * k == Quaternion(-1.0));
    CHECK(i * j * k == Quaternion(-1.0));
}

TEST_CASE("(1+i)(1+j) = 1+i+j+k", "[quaternion]") {
    const Quaternion p{1, 1, 0, 0};
    const Quaternion q{1, 0, 1, 0};
    CHECK(multiply(p, q) == Quaternion{1, 1, 1, 1});
    CHECK(matrix_product(p, q) == Quaternion{1, 1, 1, 1});
}

TEST_CASE("Hamilton product agrees with the matrix representation", "[quaternion][property]") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 1000; ++t) {
        const auto p = test_support::random_quaternion(rng);
        const auto q = test_support::random_quaternion(rng);
        REQUIRE(qdist(p * q, matrix_product(p, q)) <= 1e-15);
    }
}

TEST_CASE("modulus is multiplicative and product associative", "[quaternion][property]") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 1000; ++t) {
        const auto p = test_support::random_quaternion(rng);
        const auto q = test_support::random_quaternion(rng);
        const auto r = test_support::random_quaternion(rng);
        REQUIRE(std::abs(abs(p * q) - abs(p) * abs(q)) <= 1e-12 * abs(p) * abs(q));
        REQUIRE(qdist((p * q) * r, p * (q * r)) <= 1e-12);
        REQUIRE(std::abs(norm(q) - (q * conj(q)).w) <= 1e-15);
        REQUIRE(abs((q * conj(q)).vector()) <= 1e-15);
    }
}

TEST_CASE("conjugate, norm and inverse", "[quaternion]") {
    SECTION("i") {
        const auto r = conj_norm_inverse(Quaternion::i());
        CHECK(r.conjugate == -Quaternion::i());
        CHECK(r.norm == 1.0);
        CHECK(r.inverse == -Quaternion::i());
    }
    SECTION("1+i+j+k") {
        const auto r = conj_norm_inverse({1, 1, 1, 1});
        CHECK(r.norm == 4.0);
        CHECK(r.inverse == Quaternion{0.25, -0.25, -0.25, -0.25});
        CHECK(qdist(Quaternion{1, 1, 1, 1} * r.inverse, Quaternion(1.0)) <= 1e-15);
    }
    SECTION("zero has no inverse") {
        CHECK_THROWS_AS(conj_norm_inverse(Quaternion{}), std::domain_error);
    }
}

TEST_CASE("unit pure axis validation", "[quaternion]") {
    CHECK_NOTHROW(UnitPureQuaternion(Quaternion{0, 0.6, 0.8, 0}));
    CHECK_THROWS_AS(UnitPureQuaternion(Quaternion{0.1, 0, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(UnitPureQuaternion(Quaternion{0, 0, 1.001, 0}), std::invalid_argument);
    CHECK_THROWS_AS(UnitPureQuaternion::normalized(0, 0, 0), std::invalid_argument);
    const auto mu = UnitPureQuaternion::normalized(1, 2, 3);
    CHECK(std::abs(abs(mu.value()) - 1.0) <= 1e-15);
}

TEST_CASE("basis construction rejects non-orthogonal axes", "[quaternion]") {
    CHECK_THROWS_AS(QuaternionBasis(UnitPureQuaternion::i(), UnitPureQuaternion::i()), std::invalid_argument);
    CHECK_THROWS_AS(QuaternionBasis(UnitPureQuaternion::i(), UnitPureQuaternion::normalized(1, 1, 0)),
                    std::invalid_argument);
    const QuaternionBasis b(UnitPureQuaternion::normalized(1, 1, 0), UnitPureQuaternion::normalized(1, -1, 1));
    const Quaternion e[4] = {Quaternion(1.0), b.xi(), b.mu(), b.ximu()};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK(std::abs(dot(e[r], e[c]) - (r == c ? 1.0 : 0.0)) <= 1e-15);
}

TEST_CASE("Cayley-Dickson split", "[quaternion]") {
    const auto p = cd_split({1, 2, 3, 4});
    CHECK(p.z1 == Complex{1, 2});
    CHECK(p.z2 == Complex{3, 4});
    const auto jp = cd_split(Quaternion::j());
    CHECK(jp.z1 == Complex{0, 0});
    CHECK(jp.z2 == Complex{1, 0});
    // z1 + z2*j reassembles q
    CHECK(Quaternion(1.0) + 2.0 * Quaternion::i() + (3.0 * Quaternion(1.0) + 4.0 * Quaternion::i()) * Quaternion::j() ==
          Quaternion{1, 2, 3, 4});
}

TEST_CASE("cd_split / cd_assemble round trip in any basis", "[quaternion][property]") {
    std::mt19937_64 rng(13);
    const QuaternionBasis bases[] = {
        QuaternionBasis::standard(),
        QuaternionBasis(UnitPureQuaternion::k(), UnitPureQuaternion::i()),
        QuaternionBasis(UnitPureQuaternion::normalized(1, 1, 0), UnitPureQuaternion::normalized(1, -1, 1)),
    };
    for (const auto& b : bases) {
        for (int t = 0; t < 500; ++t) {
            const auto q = test_support::random_quaternion(rng);
            REQUIRE(qdist(cd_assemble(cd_split(q, b), b), q) <= 1e-15);
        }
    }
}

TEST_CASE("cdpolar examples", "[quaternion][polar]") {
    SECTION("real scalar") {
        const auto p = cdpolar(Quaternion(2.0));
        CHECK(std::abs(p.modulus - Complex{2.0, 0.0}) <= 1e-15);
        CHECK(std::abs(p.argument) <= 1e-15);
    }
    SECTION("rotation in the (1, j) plane") {
        const auto p = cdpolar(Quaternion{std::cos(0.5), 0.0, std::sin(0.5), 0.0});
        CHECK(std::abs(p.modulus - Complex{1.0, 0.0}) <= 1e-15);
        CHECK(std::abs(p.argument - Complex{0.5, 0.0}) <= 1e-15);
    }
    SECTION("1 + k is degenerate") {
        CHECK_THROWS_AS(cdpolar(Quaternion{1, 0, 0, 1}), DegeneratePolarForm);
    }
    SECTION("zero maps to (0, 0)") {
        const auto p = cdpolar(Quaternion{});
        CHECK(p.modulus == Complex{});
        CHECK(p.argument == Complex{});
    }
}

TEST_CASE("cdpolar_inverse examples", "[quaternion][polar]") {
    CHECK(qdist(cdpolar_inverse({1, 0}, {test_support::kPi / 2, 0}), Quaternion::j()) <= 1e-15);
    CHECK(cdpolar_inverse({0, 0}, {1.234, -0.5}) == Quaternion{});
    // (1+i) cos(0.3-0.2i) and (1+i) sin(0.3-0.2i), evaluated at 30 digits.
    const Quaternion expected{0.91500813590756338458, 1.0340058500661875571, 0.49379396823110428994,
                              0.10910670862671862248};
    CHECK(qdist(cdpolar_inverse({1, 1}, {0.3, -0.2}), expected) <= 1e-15);
}

TEST_CASE("cdpolar round trip and canonical sign", "[quaternion][polar][property]") {
    std::mt19937_64 rng(14);
    int tested = 0;
    while (tested < 10000) {
        const auto q = test_support::random_quaternion(rng);
        const auto pair = cd_split(q);
        if (std::abs(pair.z1 * pair.z1 + pair.z2 * pair.z2) <= 0.01 * norm(q)) continue;
        ++tested;
        const auto p = cdpolar(q);
        REQUIRE(qdist(cdpolar_inverse(p.modulus, p.argument), q) <= 1e-10 * abs(q));
        REQUIRE(p.modulus.real() >= 0.0);
        if (p.modulus.real() == 0.0) REQUIRE(p.modulus.imag() >= 0.0);
        REQUIRE(p.argument.real() > -test_support::kPi);
        REQUIRE(p.argument.real() <= test_support::kPi);
    }
}

TEST_CASE("cdpolar detects the degenerate set", "[quaternion][polar]") {
    std::mt19937_64 rng(15);
    std::uniform_real_distribution<double> d(-1, 1);
    for (int t = 0; t < 200; ++t) {
        const Complex z1{d(rng), d(rng)};
        const Complex z2 = (t % 2 ? Complex{0, 1} : Complex{0, -1}) * z1;
        REQUIRE_THROWS_AS(cdpolar(cd_assemble({z1, z2})), DegeneratePolarForm);
    }
}

TEST_CASE("cdpolar in a non-standard basis", "[quaternion][polar]") {
    const QuaternionBasis b(UnitPureQuaternion::k(), UnitPureQuaternion::i());
    std::mt19937_64 rng(16);
    for (int t = 0; t < 200; ++t) {
        const auto q = test_support::random_quaternion(rng);
        const auto pair = cd_split(q, b);
        if (std::abs(pair.z1 * pair.z1 + pair.z2 * pair.z2) <= 0.01 * norm(q)) continue;
        const auto p = cdpolar(q, b);
        REQUIRE(qdist(cdpolar_inverse(p.modulus, p.argument, b), q) <= 1e-10 * abs(q));
    }
}
