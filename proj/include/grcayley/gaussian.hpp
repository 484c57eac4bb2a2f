#ifndef GRCAYLEY_GAUSSIAN_HPP
#define GRCAYLEY_GAUSSIAN_HPP

#include <cstdint>
#include <ostream>

namespace grc {

/// Exact a + bi. Only the four operations the character sums need.
struct GaussianInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    friend constexpr GaussianInt operator+(GaussianInt a, GaussianInt b) noexcept { return {a.re + b.re, a.im + b.im}; }
    friend constexpr GaussianInt operator*(GaussianInt a, GaussianInt b) noexcept {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    constexpr GaussianInt conj() const noexcept { return {re, -im}; }
    constexpr std::int64_t norm() const noexcept { return re * re + im * im; }

    constexpr bool operator==(const GaussianInt&) const = default;

    /// i^k
    static constexpr GaussianInt unit_power(std::uint64_t k) noexcept {
        switch (k % 4) {
            case 0: return {1, 0};
            case 1: return {0, 1};
            case 2: return {-1, 0};
            default: return {0, -1};
        }
    }
};

inline std::ostream& operator<<(std::ostream& os, const GaussianInt& z) {
    return os << z.re << (z.im < 0 ? " - " : " + ") << (z.im < 0 ? -z.im : z.im) << "i";
}

}  // namespace grc

#endif  // GRCAYLEY_GAUSSIAN_HPP
