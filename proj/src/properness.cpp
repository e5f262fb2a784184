#include "hyperanalytic/properness.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hyperanalytic {

Covariance4 covariance(const HyperanalyticSignal& h) {
    const auto parts = simplex_perplex(h);
    const std::array<std::vector<double>, 4> comps = {
        real_part(parts.simplex), imag_part(parts.simplex),
        real_part(parts.orthogonal), imag_part(parts.orthogonal),
    };
    const double period = h.h.sample_period();
    Covariance4 c;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t col = r; col < 4; ++col) {
            double acc = 0.0;
            for (std::size_t n = 0; n < comps[r].size(); ++n) {
                acc += comps[r][n] * comps[col][n];
            }
            c.m[r][col] = acc * period;
            c.m[col][r] = c.m[r][col];
        }
    }
    return c;
}

std::string_view to_string(Properness p) {
    switch (p) {
        case Properness::c_mu_proper: return "c_mu_proper";
        case Properness::c_mu_superproper: return "c_mu_superproper";
        case Properness::unstructured: return "unstructured";
        case Properness::degenerate: return "degenerate";
    }
    return "unknown";
}

PropernessReport classify(const Covariance4& c, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("properness tolerance must be positive");
    }
    using C = Covariance4;
    PropernessReport report;
    report.alpha = c(C::zr, C::zr);
    report.omega = c(C::zi, C::zi);
    report.beta = c(C::zi, C::orr);
    report.gamma = c(C::zr, C::zi);
    report.tolerance = tol;
    report.energy = c.trace();
    if (report.energy == 0.0) {
        report.classification = Properness::degenerate;
        return report;
    }

    const double e = report.energy;
    const std::pair<const char*, double> proper_checks[] = {
        {"C_zr_or = 0", c(C::zr, C::orr)},
        {"C_zi_oi = 0", c(C::zi, C::oi)},
        {"C_zr_zr = C_or_or", c(C::zr, C::zr) - c(C::orr, C::orr)},
        {"C_zi_zi = C_oi_oi", c(C::zi, C::zi) - c(C::oi, C::oi)},
        {"C_zi_or = C_zr_oi", c(C::zi, C::orr) - c(C::zr, C::oi)},
        {"C_or_oi = -C_zr_zi", c(C::orr, C::oi) + c(C::zr, C::zi)},
    };
    const std::pair<const char*, double> super_checks[] = {
        {"gamma = 0", report.gamma},
        {"alpha = omega", report.alpha - report.omega},
    };

    bool proper = true;
    for (const auto& [name, diff] : proper_checks) {
        const double dev = std::abs(diff) / e;
        if (dev > report.worst_deviation || report.worst_predicate.empty()) {
            report.worst_deviation = dev;
            report.worst_predicate = name;
        }
        proper = proper && dev <= tol;
    }
    if (!proper) {
        report.classification = Properness::unstructured;
        return report;
    }
    bool super = true;
    for (const auto& [name, diff] : super_checks) {
        const double dev = std::abs(diff) / e;
        if (dev > report.worst_deviation) {
            report.worst_deviation = dev;
            report.worst_predicate = name;
        }
        super = super && dev <= tol;
    }
    report.classification = super ? Properness::c_mu_superproper : Properness::c_mu_proper;
    return report;
}

}  // namespace hyperanalytic
