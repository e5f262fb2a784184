#include "hyperanalytic/quaternion.hpp"

#include <numbers>
#include <ostream>

namespace hyperanalytic {

Quaternion inverse(const Quaternion& q) {
    const double n = norm(q);
    if (n == 0.0) {
        throw std::domain_error("inverse of the zero quaternion");
    }
    return conj(q) / n;
}

ConjNormInverse conj_norm_inverse(const Quaternion& q) {
    return {conj(q), norm(q), inverse(q)};
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ')';
}

UnitPureQuaternion::UnitPureQuaternion(const Quaternion& q) : q_(q) {
    if (q.w != 0.0) {
        throw std::invalid_argument("axis must be a pure quaternion (zero scalar part)");
    }
    if (!is_finite(q) || std::abs(abs(q) - 1.0) > kUnitTolerance) {
        throw std::invalid_argument("axis must have unit modulus");
    }
}

UnitPureQuaternion UnitPureQuaternion::normalized(double x, double y, double z) {
    const double m = std::hypot(x, y, z);
    if (!(m > 0.0) || !std::isfinite(m)) {
        throw std::invalid_argument("cannot normalize a zero or non-finite axis");
    }
    return UnitPureQuaternion(Quaternion{0.0, x / m, y / m, z / m});
}

QuaternionBasis::QuaternionBasis(UnitPureQuaternion xi, UnitPureQuaternion mu)
    : xi_(xi), mu_(mu), ximu_(xi.value() * mu.value()) {
    if (std::abs(ximu_.w) > kOrthogonalityTolerance) {
        throw std::invalid_argument("xi and mu must be orthogonal: S(xi*mu) != 0");
    }
    // xi*mu of orthogonal unit pure quaternions is their cross product; drop the rounding residue.
    ximu_.w = 0.0;
}

QuaternionBasis QuaternionBasis::standard() {
    return {UnitPureQuaternion::i(), UnitPureQuaternion::j()};
}

Quaternion QuaternionBasis::coordinates(const Quaternion& q) const {
    return {q.w, dot(q, xi_), dot(q, mu_), dot(q, ximu_)};
}

Quaternion QuaternionBasis::from_coordinates(const Quaternion& c) const {
    return Quaternion(c.w) + c.x * xi_.value() + c.y * mu_.value() + c.z * ximu_;
}

Quaternion QuaternionBasis::embed(Complex c) const {
    return Quaternion(c.real()) + c.imag() * xi_.value();
}

ComplexPair cd_split(const Quaternion& q, const QuaternionBasis& basis) {
    const Quaternion c = basis.coordinates(q);
    return {{c.w, c.x}, {c.y, c.z}};
}

Quaternion cd_assemble(const ComplexPair& pair, const QuaternionBasis& basis) {
    return basis.from_coordinates({pair.z1.real(), pair.z1.imag(), pair.z2.real(), pair.z2.imag()});
}

namespace {

constexpr double kPi = std::numbers::pi;

Complex wrap_real_part(Complex b) {
    double r = std::remainder(b.real(), 2.0 * kPi);
    if (r <= -kPi) {
        r += 2.0 * kPi;
    }
    return {r, b.imag()};
}

}  // namespace

CdPolar cdpolar(const ComplexPair& pair) {
    const auto [z1, z2] = pair;
    const double qnorm = std::norm(z1) + std::norm(z2);
    if (qnorm == 0.0) {
        return {};
    }
    const Complex modulus_sq = z1 * z1 + z2 * z2;
    if (std::abs(modulus_sq) <= kPolarDegeneracyThreshold * qnorm) {
        throw DegeneratePolarForm("complex modulus vanishes (z1^2 + z2^2 = 0); no polar form");
    }
    const Complex root = std::sqrt(modulus_sq);
    // exp(iB) = (z1 + i z2) / A, which is non-zero whenever A is.
    const Complex unit{0.0, 1.0};
    Complex argument = -unit * std::log((z1 + unit * z2) / root);

    // Divide by whichever trig factor is larger in magnitude.
    const Complex c = std::cos(argument);
    const Complex s = std::sin(argument);
    Complex modulus = std::abs(c) >= std::abs(s) ? z1 / c : z2 / s;

    if (modulus.real() < 0.0 || (modulus.real() == 0.0 && modulus.imag() < 0.0)) {
        modulus = -modulus;
        argument += kPi;
    }
    return {modulus, wrap_real_part(argument)};
}

CdPolar cdpolar(const Quaternion& q, const QuaternionBasis& basis) {
    return cdpolar(cd_split(q, basis));
}

ComplexPair cdpolar_pair(Complex modulus, Complex argument) {
    return {modulus * std::cos(argument), modulus * std::sin(argument)};
}

Quaternion cdpolar_inverse(Complex modulus, Complex argument, const QuaternionBasis& basis) {
    return cd_assemble(cdpolar_pair(modulus, argument), basis);
}

}  // namespace hyperanalytic
