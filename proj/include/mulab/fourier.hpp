#pragma once

// Fourier analysis on Z(m1) x ... x Z(mk) with expectation normalization:
//
//   f^(t) = (1/N) sum_x f(x) conj(chi_t(x)),   chi_t(x) = prod_j exp(2 pi i t_j x_j / m_j)
//   f(x)  = sum_t f^(t) chi_t(x)
//
// Character t uses the same mixed-radix index as elements. On Z2^n the characters
// are the real parities (-1)^popcount(t & x) and the transform is a scaled WHT.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "mulab/group.hpp"
#include "mulab/kernels.hpp"

namespace mulab {

class Subset;

struct DenseFunction {
    GroupSpec group;
    std::vector<double> values;

    static DenseFunction zeros(GroupSpec g, std::uint64_t dense_cap = kDefaultDenseCap);
    static DenseFunction constant(GroupSpec g, double value, std::uint64_t dense_cap = kDefaultDenseCap);
};

struct Spectrum {
    GroupSpec group;
    std::vector<std::complex<double>> coeffs;
};

struct TransformOptions {
    std::uint64_t dense_cap = kDefaultDenseCap;
    kernels::Exec exec = kernels::Exec::serial;
    /// Skip the WHT fast path on boolean groups (used to cross-check the two paths).
    bool force_generic = false;
};

/// Imaginary parts of an inverse transform are discarded up to this tolerance, scaled by max(1, max|value|).
inline constexpr double kInverseImagTolerance = 1e-10;
/// Convolution outputs within this distance of an integer (scaled the same way) are snapped to it.
inline constexpr double kConvolutionTolerance = 1e-9;

/// Throws std::length_error when N exceeds the dense cap.
Spectrum forward(const DenseFunction& f, const TransformOptions& opts = {});
/// Forward transform of a complex-valued function.
Spectrum forward(const GroupSpec& g, std::span<const std::complex<double>> values, const TransformOptions& opts = {});

/// Throws std::domain_error if the result carries a non-negligible imaginary part.
DenseFunction inverse(const Spectrum& s, const TransformOptions& opts = {});
std::vector<std::complex<double>> inverse_complex(const Spectrum& s, const TransformOptions& opts = {});

/// (f * h)(x) = sum_y f(y) h(x - y), computed through the convolution theorem.
DenseFunction convolve(const DenseFunction& f, const DenseFunction& h, const TransformOptions& opts = {});

/// chi_t evaluated at every element.
std::vector<std::complex<double>> character(const GroupSpec& g, std::uint64_t t);

struct MaxCoefficient {
    double value = 0.0;
    std::uint64_t argmax = 0;
};

/// max over t != 0 of |1_A^(t)|, smallest index on ties. Multisets use their multiplicity vector.
MaxCoefficient max_nonprincipal_coeff(const Subset& a, const TransformOptions& opts = {});

}  // namespace mulab
