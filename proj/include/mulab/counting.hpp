#pragma once

// mu(A, B, C) = #{(a, b, c) in A x B x C : a = b + c}, by three routes:
//   direct        iterate B x C and look b + c up in the indicator of A
//   convolution   <1_A, 1_B * 1_C>
//   fourier       N^2 sum_t conj(1_A^(t)) 1_B^(t) 1_C^(t)
// Multisets count each triple with the product of its multiplicities.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string_view>

#include "mulab/fourier.hpp"
#include "mulab/subset.hpp"

namespace mulab {

enum class Route { direct, convolution, fourier };

std::string_view to_string(Route r) noexcept;

struct MuResult {
    std::uint64_t count = 0;
    Route route = Route::direct;
    /// Distance of the floating-point value from `count` before rounding (0 for the direct route).
    double residual = 0.0;
};

/// Rounded routes fail when residual > kRoundingTolerance * max(1, count).
inline constexpr double kRoundingTolerance = 1e-6;

class RoundingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

MuResult mu_direct(const Subset& a, const Subset& b, const Subset& c, kernels::Exec exec = kernels::Exec::serial);
MuResult mu_convolution(const Subset& a, const Subset& b, const Subset& c, const TransformOptions& opts = {});
MuResult mu_fourier(const Subset& a, const Subset& b, const Subset& c, const TransformOptions& opts = {});

/// sum_x f(x) h(x), unnormalized.
double inner_product(const DenseFunction& f, const DenseFunction& h);

/// The fourier route split into the trivial-character term |A||B||C|/N and the rest.
struct SpectralSplit {
    double principal = 0.0;
    std::complex<double> nonprincipal;
};

SpectralSplit spectral_split(const Subset& a, const Subset& b, const Subset& c, const TransformOptions& opts = {});

}  // namespace mulab
