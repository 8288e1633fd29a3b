#include "mulab/kernels.hpp"

#include <bit>
#include <numbers>
#include <stdexcept>

namespace mulab::kernels {

CyclicPlan::CyclicPlan(std::uint64_t modulus, int sign)
    : modulus_(modulus), radix2_(std::has_single_bit(modulus)) {
    const double base = sign * 2.0 * std::numbers::pi / static_cast<double>(modulus);
    const std::uint64_t count = radix2_ ? modulus / 2 : modulus;
    twiddle_.resize(count);
    for (std::uint64_t k = 0; k < count; ++k) {
        twiddle_[k] = std::polar(1.0, base * static_cast<double>(k));
    }
    if (radix2_) {
        const int log_m = std::countr_zero(modulus);
        bitrev_.resize(modulus);
        for (std::uint64_t i = 0; i < modulus; ++i) {
            std::uint64_t r = 0;
            for (int b = 0; b < log_m; ++b) r |= ((i >> b) & 1U) << (log_m - 1 - b);
            bitrev_[i] = r;
        }
    }
}

void CyclicPlan::run(std::complex<double>* line, std::uint64_t stride, std::complex<double>* scratch) const {
    const std::uint64_t m = modulus_;
    if (radix2_) {
        for (std::uint64_t i = 0; i < m; ++i) scratch[bitrev_[i]] = line[i * stride];
        for (std::uint64_t len = 2; len <= m; len <<= 1) {
            const std::uint64_t half = len / 2;
            const std::uint64_t step = m / len;
            for (std::uint64_t start = 0; start < m; start += len) {
                for (std::uint64_t j = 0; j < half; ++j) {
                    const auto u = scratch[start + j];
                    const auto v = scratch[start + j + half] * twiddle_[j * step];
                    scratch[start + j] = u + v;
                    scratch[start + j + half] = u - v;
                }
            }
        }
    } else {
        for (std::uint64_t t = 0; t < m; ++t) {
            std::complex<double> acc{};
            for (std::uint64_t x = 0; x < m; ++x) acc += line[x * stride] * twiddle_[(t * x) % m];
            scratch[t] = acc;
        }
    }
    for (std::uint64_t i = 0; i < m; ++i) line[i * stride] = scratch[i];
}

namespace {

void require_pow2(std::size_t n) {
    if (!std::has_single_bit(n)) throw std::invalid_argument("WHT length must be a power of two");
}

void check_axis(std::size_t n, const CyclicPlan& plan, std::uint64_t stride) {
    if (stride == 0 || n % (plan.modulus() * stride) != 0) {
        throw std::invalid_argument("axis stride does not divide the array");
    }
}

}  // namespace

namespace serial {

void wht(std::span<double> data) {
    const std::size_t n = data.size();
    require_pow2(n);
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                const double x = data[j];
                const double y = data[j + h];
                data[j] = x + y;
                data[j + h] = x - y;
            }
        }
    }
}

void transform_axis(std::span<std::complex<double>> data, const CyclicPlan& plan, std::uint64_t stride) {
    check_axis(data.size(), plan, stride);
    const std::uint64_t m = plan.modulus();
    const std::uint64_t block = m * stride;
    std::vector<std::complex<double>> scratch(m);
    for (std::uint64_t outer = 0; outer < data.size(); outer += block) {
        for (std::uint64_t inner = 0; inner < stride; ++inner) {
            plan.run(data.data() + outer + inner, stride, scratch.data());
        }
    }
}

std::uint64_t triple_count(const GroupSpec& g, std::span<const std::uint64_t> weight_a, WeightedSet b,
                           WeightedSet c) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < b.elements.size(); ++i) {
        std::uint64_t row = 0;
        for (std::size_t j = 0; j < c.elements.size(); ++j) {
            row += c.weight(j) * weight_a[add_unchecked(g, b.elements[i], c.elements[j])];
        }
        total += b.weight(i) * row;
    }
    return total;
}

}  // namespace serial

namespace omp {

void wht(std::span<double> data) {
    const std::size_t n = data.size();
    require_pow2(n);
    const std::int64_t pairs = static_cast<std::int64_t>(n / 2);
    double* v = data.data();
    for (unsigned s = 0; (std::size_t{1} << s) < n; ++s) {
        const std::size_t h = std::size_t{1} << s;
#pragma omp parallel for schedule(static)
        for (std::int64_t p = 0; p < pairs; ++p) {
            const std::size_t q = static_cast<std::size_t>(p);
            const std::size_t j = ((q >> s) << (s + 1)) | (q & (h - 1));
            const double x = v[j];
            const double y = v[j + h];
            v[j] = x + y;
            v[j + h] = x - y;
        }
    }
}

void transform_axis(std::span<std::complex<double>> data, const CyclicPlan& plan, std::uint64_t stride) {
    check_axis(data.size(), plan, stride);
    const std::uint64_t m = plan.modulus();
    const auto lines = static_cast<std::int64_t>(data.size() / m);
#pragma omp parallel
    {
        std::vector<std::complex<double>> scratch(m);
#pragma omp for schedule(static)
        for (std::int64_t l = 0; l < lines; ++l) {
            const auto line = static_cast<std::uint64_t>(l);
            const std::uint64_t offset = (line / stride) * m * stride + line % stride;
            plan.run(data.data() + offset, stride, scratch.data());
        }
    }
}

std::uint64_t triple_count(const GroupSpec& g, std::span<const std::uint64_t> weight_a, WeightedSet b,
                           WeightedSet c) {
    std::uint64_t total = 0;
    const auto rows = static_cast<std::int64_t>(b.elements.size());
#pragma omp parallel for schedule(static) reduction(+ : total)
    for (std::int64_t i = 0; i < rows; ++i) {
        const auto bi = static_cast<std::size_t>(i);
        std::uint64_t row = 0;
        for (std::size_t j = 0; j < c.elements.size(); ++j) {
            row += c.weight(j) * weight_a[add_unchecked(g, b.elements[bi], c.elements[j])];
        }
        total += b.weight(bi) * row;
    }
    return total;
}

}  // namespace omp

void wht(std::span<double> data, Exec exec) {
    exec == Exec::parallel ? omp::wht(data) : serial::wht(data);
}

void transform_axis(std::span<std::complex<double>> data, const CyclicPlan& plan, std::uint64_t stride,
                    Exec exec) {
    exec == Exec::parallel ? omp::transform_axis(data, plan, stride) : serial::transform_axis(data, plan, stride);
}

std::uint64_t triple_count(const GroupSpec& g, std::span<const std::uint64_t> weight_a, WeightedSet b,
                           WeightedSet c, Exec exec) {
    return exec == Exec::parallel ? omp::triple_count(g, weight_a, b, c) : serial::triple_count(g, weight_a, b, c);
}

}  // namespace mulab::kernels
