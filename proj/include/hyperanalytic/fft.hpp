#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "hyperanalytic/quaternion.hpp"

namespace hyperanalytic {

enum class Direction { forward, inverse };

/// Precomputed complex DFT of one length. Lengths whose prime factors are all
/// small run a mixed-radix decimation-in-time recursion; lengths with a large
/// prime factor go through Bluestein's chirp-z convolution on a power-of-two
/// sub-plan. Immutable after construction and safe to share between threads.
class FftPlan {
public:
    explicit FftPlan(std::size_t n);
    ~FftPlan();
    FftPlan(FftPlan&&) noexcept;
    FftPlan& operator=(FftPlan&&) noexcept;

    std::size_t size() const { return n_; }
    bool uses_bluestein() const { return bluestein_ != nullptr; }
    const std::vector<std::size_t>& factors() const { return factors_; }

    /// Un-normalized transform with kernel exp(-+ 2 pi i k n / N). `in` and
    /// `out` must both have size() elements and must not alias.
    void execute(std::span<const Complex> in, std::span<Complex> out, Direction dir) const;

private:
    struct Bluestein;

    void recurse(const Complex* in, Complex* out, std::size_t n, std::size_t stride, std::size_t stage,
                 bool inverse, Complex* scratch) const;

    std::size_t n_;
    std::vector<std::size_t> factors_;
    std::vector<Complex> twiddles_;  // exp(-2 pi i j / n)
    std::size_t max_factor_ = 1;
    std::unique_ptr<Bluestein> bluestein_;
};

/// Largest prime factor handled by the direct radix-p butterflies.
inline constexpr std::size_t kMaxDirectRadix = 31;

/// Shared plan for length n from a process-wide cache.
const FftPlan& plan_for(std::size_t n);

/// Forward DFT is un-normalized; the inverse carries 1/N.
std::vector<Complex> fft(std::span<const Complex> x, Direction dir = Direction::forward);

}  // namespace hyperanalytic
