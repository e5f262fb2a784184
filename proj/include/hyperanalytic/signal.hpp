#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperanalytic/quaternion.hpp"

namespace hyperanalytic {

inline bool is_finite(double v) { return std::isfinite(v); }
inline bool is_finite(const Complex& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

/// Uniformly sampled finite sequence. Length (>= 2) and values are fixed at
/// construction; non-finite samples are rejected.
template <typename T>
class Signal {
public:
    static constexpr std::size_t kMinLength = 2;

    explicit Signal(std::vector<T> samples, double sample_period = 1.0)
        : samples_(std::move(samples)), sample_period_(sample_period) {
        if (samples_.size() < kMinLength) {
            throw std::invalid_argument("signal needs at least " + std::to_string(kMinLength) +
                                        " samples, got " + std::to_string(samples_.size()));
        }
        if (!(sample_period_ > 0.0) || !std::isfinite(sample_period_)) {
            throw std::invalid_argument("sample period must be positive and finite");
        }
        for (std::size_t n = 0; n < samples_.size(); ++n) {
            if (!is_finite(samples_[n])) {
                throw std::invalid_argument("non-finite sample at index " + std::to_string(n));
            }
        }
    }

    std::size_t size() const { return samples_.size(); }
    double sample_period() const { return sample_period_; }

    std::span<const T> samples() const { return samples_; }
    const T& operator[](std::size_t n) const { return samples_[n]; }

    auto begin() const { return samples_.begin(); }
    auto end() const { return samples_.end(); }

private:
    std::vector<T> samples_;
    double sample_period_;
};

using RealSignal = Signal<double>;
using ComplexSignal = Signal<Complex>;
using QuaternionSignal = Signal<Quaternion>;

std::vector<double> real_part(const ComplexSignal& z);
std::vector<double> imag_part(const ComplexSignal& z);

/// z[n] = z_r[n] + xi * z_i[n].
QuaternionSignal embed(const ComplexSignal& z, const QuaternionBasis& basis = QuaternionBasis::standard());

}  // namespace hyperanalytic
