#include "hyperanalytic/fft.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace hyperanalytic {

namespace {

/// exp(-2 pi i num / den) with the angle reduced in integers first.
Complex root_of_unity(std::size_t num, std::size_t den) {
    num %= den;
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    return std::polar(1.0, angle);
}

std::vector<std::size_t> factorize(std::size_t n) {
    std::vector<std::size_t> out;
    while (n % 4 == 0) {
        out.push_back(4);
        n /= 4;
    }
    if (n % 2 == 0) {
        out.push_back(2);
        n /= 2;
    }
    for (std::size_t p = 3; p * p <= n; p += 2) {
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

}  // namespace

struct FftPlan::Bluestein {
    std::size_t padded;
    std::unique_ptr<FftPlan> sub;
    std::vector<Complex> chirp;           // exp(-i pi k^2 / n)
    std::vector<Complex> kernel_forward;  // FFT of conj(chirp), zero-padded and wrapped
    std::vector<Complex> kernel_inverse;  // FFT of chirp, same layout

    explicit Bluestein(std::size_t n) : padded(std::bit_ceil(2 * n - 1)), sub(std::make_unique<FftPlan>(padded)) {
        chirp.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            // k^2 mod 2n keeps the angle small and exact.
            const std::size_t k2 = (k * k) % (2 * n);
            chirp[k] = root_of_unity(k2, 2 * n);
        }
        std::vector<Complex> b(padded);
        auto build = [&](bool conjugate, std::vector<Complex>& dest) {
            std::fill(b.begin(), b.end(), Complex{});
            for (std::size_t k = 0; k < n; ++k) {
                const Complex v = conjugate ? std::conj(chirp[k]) : chirp[k];
                b[k] = v;
                if (k != 0) {
                    b[padded - k] = v;
                }
            }
            dest.resize(padded);
            sub->execute(b, dest, Direction::forward);
        };
        build(true, kernel_forward);
        build(false, kernel_inverse);
    }

    void run(std::span<const Complex> in, std::span<Complex> out, bool inverse) const {
        const std::size_t n = chirp.size();
        std::vector<Complex> a(padded);
        for (std::size_t k = 0; k < n; ++k) {
            a[k] = in[k] * (inverse ? std::conj(chirp[k]) : chirp[k]);
        }
        std::vector<Complex> spec(padded);
        sub->execute(a, spec, Direction::forward);
        const auto& kernel = inverse ? kernel_inverse : kernel_forward;
        for (std::size_t k = 0; k < padded; ++k) {
            spec[k] *= kernel[k];
        }
        sub->execute(spec, a, Direction::inverse);
        const double scale = 1.0 / static_cast<double>(padded);
        for (std::size_t k = 0; k < n; ++k) {
            out[k] = a[k] * scale * (inverse ? std::conj(chirp[k]) : chirp[k]);
        }
    }
};

FftPlan::FftPlan(std::size_t n) : n_(n) {
    if (n == 0) {
        throw std::invalid_argument("FFT length must be positive");
    }
    factors_ = factorize(n);
    for (std::size_t f : factors_) {
        max_factor_ = std::max(max_factor_, f);
    }
    if (max_factor_ > kMaxDirectRadix) {
        bluestein_ = std::make_unique<Bluestein>(n);
        return;
    }
    twiddles_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        twiddles_[j] = root_of_unity(j, n);
    }
}

FftPlan::~FftPlan() = default;
FftPlan::FftPlan(FftPlan&&) noexcept = default;
FftPlan& FftPlan::operator=(FftPlan&&) noexcept = default;

void FftPlan::execute(std::span<const Complex> in, std::span<Complex> out, Direction dir) const {
    if (in.size() != n_ || out.size() != n_) {
        throw std::invalid_argument("FFT buffer length does not match plan length");
    }
    const bool inverse = dir == Direction::inverse;
    if (bluestein_) {
        bluestein_->run(in, out, inverse);
        return;
    }
    std::vector<Complex> scratch(max_factor_);
    recurse(in.data(), out.data(), n_, 1, 0, inverse, scratch.data());
}

void FftPlan::recurse(const Complex* in, Complex* out, std::size_t n, std::size_t stride, std::size_t stage,
                      bool inverse, Complex* scratch) const {
    if (n == 1) {
        out[0] = in[0];
        return;
    }
    const std::size_t p = factors_[stage];
    const std::size_t m = n / p;
    for (std::size_t q = 0; q < p; ++q) {
        recurse(in + q * stride, out + q * m, m, stride * p, stage + 1, inverse, scratch);
    }

    const std::size_t step = n_ / n;  // W_n^x = W_N^(x * step)
    auto twiddle = [&](std::size_t index) {
        const Complex w = twiddles_[index % n_];
        return inverse ? std::conj(w) : w;
    };

    if (p == 2) {
        for (std::size_t k = 0; k < m; ++k) {
            const Complex t0 = out[k];
            const Complex t1 = out[m + k] * twiddle(k * step);
            out[k] = t0 + t1;
            out[m + k] = t0 - t1;
        }
        return;
    }
    if (p == 4) {
        // -i for forward, +i for inverse
        const Complex rot = inverse ? Complex{0.0, 1.0} : Complex{0.0, -1.0};
        for (std::size_t k = 0; k < m; ++k) {
            const Complex t0 = out[k];
            const Complex t1 = out[m + k] * twiddle(k * step);
            const Complex t2 = out[2 * m + k] * twiddle(2 * k * step);
            const Complex t3 = out[3 * m + k] * twiddle(3 * k * step);
            const Complex s02 = t0 + t2;
            const Complex d02 = t0 - t2;
            const Complex s13 = t1 + t3;
            const Complex d13 = (t1 - t3) * rot;
            out[k] = s02 + s13;
            out[m + k] = d02 + d13;
            out[2 * m + k] = s02 - s13;
            out[3 * m + k] = d02 - d13;
        }
        return;
    }

    const std::size_t radix_step = n_ / p;  // W_p^x = W_N^(x * radix_step)
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t q = 0; q < p; ++q) {
            scratch[q] = out[q * m + k] * twiddle(q * k * step);
        }
        for (std::size_t r = 0; r < p; ++r) {
            Complex acc = scratch[0];
            for (std::size_t q = 1; q < p; ++q) {
                acc += scratch[q] * twiddle(((q * r) % p) * radix_step);
            }
            out[r * m + k] = acc;
        }
    }
}

const FftPlan& plan_for(std::size_t n) {
    static std::mutex mutex;
    static std::map<std::size_t, std::unique_ptr<const FftPlan>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) {
        slot = std::make_unique<const FftPlan>(n);
    }
    return *slot;
}

std::vector<Complex> fft(std::span<const Complex> x, Direction dir) {
    if (x.empty()) {
        throw std::invalid_argument("cannot transform an empty sequence");
    }
    std::vector<Complex> out(x.size());
    plan_for(x.size()).execute(x, out, dir);
    if (dir == Direction::inverse) {
        const double scale = 1.0 / static_cast<double>(x.size());
        for (auto& v : out) {
            v *= scale;
        }
    }
    return out;
}

}  // namespace hyperanalytic
