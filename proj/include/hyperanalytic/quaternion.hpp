#pragma once

#include <cmath>
#include <complex>
#include <iosfwd>
#include <stdexcept>

namespace hyperanalytic {

using Complex = std::complex<double>;

/// Real quaternion q = w + x*i + y*j + z*k in double precision.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
    constexpr explicit Quaternion(double scalar) : w(scalar) {}

    static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr double scalar() const { return w; }
    constexpr Quaternion vector() const { return {0.0, x, y, z}; }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        w += o.w; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        w -= o.w; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }
    constexpr Quaternion& operator/=(double s) {
        w /= s; x /= s; y /= s; z /= s;
        return *this;
    }

    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& q) { return {-q.w, -q.x, -q.y, -q.z}; }
constexpr Quaternion operator*(Quaternion q, double s) { return q *= s; }
constexpr Quaternion operator*(double s, Quaternion q) { return q *= s; }
constexpr Quaternion operator/(Quaternion q, double s) { return q /= s; }

/// Hamilton product. Not commutative.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {
        p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
    };
}

constexpr Quaternion multiply(const Quaternion& p, const Quaternion& q) { return p * q; }

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

/// Squared modulus a^2 + b^2 + c^2 + d^2 (q times its conjugate).
constexpr double norm(const Quaternion& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }

inline double abs(const Quaternion& q) { return std::hypot(std::hypot(q.w, q.x), std::hypot(q.y, q.z)); }

/// Euclidean inner product on R^4.
constexpr double dot(const Quaternion& p, const Quaternion& q) {
    return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z;
}

inline bool is_finite(const Quaternion& q) {
    return std::isfinite(q.w) && std::isfinite(q.x) && std::isfinite(q.y) && std::isfinite(q.z);
}

/// Throws std::domain_error for the zero quaternion.
Quaternion inverse(const Quaternion& q);

struct ConjNormInverse {
    Quaternion conjugate;
    double norm;
    Quaternion inverse;
};

ConjNormInverse conj_norm_inverse(const Quaternion& q);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// A quaternion with zero scalar part and unit modulus; a root of -1.
class UnitPureQuaternion {
public:
    static constexpr double kUnitTolerance = 1e-12;

    /// Throws std::invalid_argument unless q is pure and unit to within kUnitTolerance.
    explicit UnitPureQuaternion(const Quaternion& q);

    /// Normalizes (x, y, z); throws for the zero vector.
    static UnitPureQuaternion normalized(double x, double y, double z);

    static UnitPureQuaternion i() { return UnitPureQuaternion(Quaternion::i()); }
    static UnitPureQuaternion j() { return UnitPureQuaternion(Quaternion::j()); }
    static UnitPureQuaternion k() { return UnitPureQuaternion(Quaternion::k()); }

    const Quaternion& value() const { return q_; }
    operator const Quaternion&() const { return q_; }

private:
    Quaternion q_;
};

/// Orthonormal basis (1, xi, mu, xi*mu) of the quaternions. xi is the
/// embedding axis for complex signals, mu the transform axis.
class QuaternionBasis {
public:
    static constexpr double kOrthogonalityTolerance = 1e-12;

    /// Throws std::invalid_argument if S(xi*mu) != 0.
    QuaternionBasis(UnitPureQuaternion xi, UnitPureQuaternion mu);

    /// (1, i, j, k): xi = i, mu = j.
    static QuaternionBasis standard();

    const UnitPureQuaternion& xi() const { return xi_; }
    const UnitPureQuaternion& mu() const { return mu_; }
    const Quaternion& ximu() const { return ximu_; }

    /// Coordinates of q on (1, xi, mu, xi*mu).
    Quaternion coordinates(const Quaternion& q) const;
    /// Inverse of coordinates().
    Quaternion from_coordinates(const Quaternion& c) const;

    /// Embeds a complex number c = re + im*xi.
    Quaternion embed(Complex c) const;

private:
    UnitPureQuaternion xi_;
    UnitPureQuaternion mu_;
    Quaternion ximu_;
};

/// Cayley-Dickson form q = z1 + z2*mu with z1, z2 in the (1, xi) plane.
/// In the standard basis z1 = a + b*i and z2 = c + d*i.
struct ComplexPair {
    Complex z1;
    Complex z2;
};

ComplexPair cd_split(const Quaternion& q, const QuaternionBasis& basis = QuaternionBasis::standard());
Quaternion cd_assemble(const ComplexPair& pair, const QuaternionBasis& basis = QuaternionBasis::standard());

/// Raised by cdpolar when z1^2 + z2^2 vanishes: the complex modulus is zero
/// although q is not, and no polar form exists.
class DegeneratePolarForm : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// q = A exp(B mu) with complex modulus A and complex argument B, read
/// componentwise as z1 = A cos(B), z2 = A sin(B).
struct CdPolar {
    Complex modulus;
    Complex argument;
};

/// Relative threshold on |z1^2 + z2^2| / |q|^2 below which cdpolar refuses.
inline constexpr double kPolarDegeneracyThreshold = 1e-12;

/// Canonical output: Re(A) >= 0, and Im(A) >= 0 when Re(A) == 0; Re(B) in (-pi, pi].
/// q == 0 gives (0, 0).
CdPolar cdpolar(const ComplexPair& pair);
CdPolar cdpolar(const Quaternion& q, const QuaternionBasis& basis = QuaternionBasis::standard());

ComplexPair cdpolar_pair(Complex modulus, Complex argument);
Quaternion cdpolar_inverse(Complex modulus, Complex argument,
                           const QuaternionBasis& basis = QuaternionBasis::standard());

}  // namespace hyperanalytic
