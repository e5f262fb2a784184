#include "hyperanalytic/signal.hpp"

namespace hyperanalytic {

std::vector<double> real_part(const ComplexSignal& z) {
    std::vector<double> out;
    out.reserve(z.size());
    for (const auto& v : z) {
        out.push_back(v.real());
    }
    return out;
}

std::vector<double> imag_part(const ComplexSignal& z) {
    std::vector<double> out;
    out.reserve(z.size());
    for (const auto& v : z) {
        out.push_back(v.imag());
    }
    return out;
}

QuaternionSignal embed(const ComplexSignal& z, const QuaternionBasis& basis) {
    std::vector<Quaternion> out;
    out.reserve(z.size());
    for (const auto& v : z) {
        out.push_back(basis.embed(v));
    }
    return QuaternionSignal(std::move(out), z.sample_period());
}

}  // namespace hyperanalytic
