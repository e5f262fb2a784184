#pragma once

#include <array>
#include <string>
#include <string_view>

#include "hyperanalytic/analytic.hpp"

namespace hyperanalytic {

/// Zero-lag cross-correlations of (z_r, z_i, o_r, o_i), each sum_n a[n] b[n] T.
/// No mean removal and no 1/N: the signals are treated as deterministic.
struct Covariance4 {
    enum Component : std::size_t { zr = 0, zi = 1, orr = 2, oi = 3 };

    std::array<std::array<double, 4>, 4> m{};

    double operator()(std::size_t r, std::size_t c) const { return m[r][c]; }
    double trace() const { return m[0][0] + m[1][1] + m[2][2] + m[3][3]; }
};

Covariance4 covariance(const HyperanalyticSignal& h);

enum class Properness { c_mu_proper, c_mu_superproper, unstructured, degenerate };

std::string_view to_string(Properness p);

struct PropernessReport {
    double alpha = 0.0;  // C_{z_r z_r}
    double omega = 0.0;  // C_{z_i z_i}
    double beta = 0.0;   // C_{z_i o_r}
    double gamma = 0.0;  // C_{z_r z_i}
    Properness classification = Properness::degenerate;
    double tolerance = 0.0;
    double energy = 0.0;  // trace, the scale for every tolerance
    /// Largest relative deviation among the checked predicates, and which one.
    std::string worst_predicate;
    double worst_deviation = 0.0;
};

inline constexpr double kDefaultPropernessTolerance = 1e-6;

/// C^mu-proper when, relative to the trace energy E,
///   C_{z_r o_r} = C_{z_i o_i} = 0,  C_{z_r z_r} = C_{o_r o_r},  C_{z_i z_i} = C_{o_i o_i},
///   C_{z_i o_r} = C_{z_r o_i},  C_{o_r o_i} = -C_{z_r z_i}
/// all hold within tol * E; superproper when additionally gamma = 0 and alpha = omega.
/// A zero matrix is reported as degenerate. Throws std::invalid_argument for tol <= 0.
PropernessReport classify(const Covariance4& c, double tol = kDefaultPropernessTolerance);

}  // namespace hyperanalytic
