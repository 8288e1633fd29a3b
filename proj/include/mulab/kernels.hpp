#pragma once

// Inner-loop kernels. Every kernel has a serial reference in `serial::` and an
// OpenMP version in `omp::`; the two produce bit-identical output because each
// output element is computed by the same sequence of floating-point operations.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "mulab/group.hpp"

namespace mulab::kernels {

enum class Exec { serial, parallel };

/// Precomputed twiddles for length-m cyclic transforms along one axis.
class CyclicPlan {
public:
    /// sign = -1 for the forward (conjugated) direction, +1 for the inverse.
    CyclicPlan(std::uint64_t modulus, int sign);

    std::uint64_t modulus() const noexcept { return modulus_; }

    /// In-place transform of one strided line: out[t] = sum_x in[x] * exp(sign*2*pi*i*t*x/m).
    /// `scratch` must hold at least m values.
    void run(std::complex<double>* line, std::uint64_t stride, std::complex<double>* scratch) const;

private:
    std::uint64_t modulus_;
    bool radix2_;
    std::vector<std::complex<double>> twiddle_;
    std::vector<std::uint64_t> bitrev_;
};

/// Weighted indicator of a subset, as the kernels see it.
struct WeightedSet {
    std::span<const std::uint64_t> elements;
    std::span<const std::uint64_t> weights;  // empty means every weight is 1

    std::uint64_t weight(std::size_t i) const noexcept { return weights.empty() ? 1 : weights[i]; }
};

namespace serial {

/// Unnormalized in-place Walsh-Hadamard transform; size must be a power of two.
void wht(std::span<double> data);

/// Applies `plan` along one axis of a mixed-radix array.
void transform_axis(std::span<std::complex<double>> data, const CyclicPlan& plan, std::uint64_t stride);

/// sum over (b, c) in B x C of wB(b) * wC(c) * weightA[b + c].
std::uint64_t triple_count(const GroupSpec& g, std::span<const std::uint64_t> weight_a, WeightedSet b,
                           WeightedSet c);

}  // namespace serial

namespace omp {

void wht(std::span<double> data);
void transform_axis(std::span<std::complex<double>> data, const CyclicPlan& plan, std::uint64_t stride);
std::uint64_t triple_count(const GroupSpec& g, std::span<const std::uint64_t> weight_a, WeightedSet b,
                           WeightedSet c);

}  // namespace omp

void wht(std::span<double> data, Exec exec);
void transform_axis(std::span<std::complex<double>> data, const CyclicPlan& plan, std::uint64_t stride,
                    Exec exec);
std::uint64_t triple_count(const GroupSpec& g, std::span<const std::uint64_t> weight_a, WeightedSet b,
                           WeightedSet c, Exec exec);

}  // namespace mulab::kernels
