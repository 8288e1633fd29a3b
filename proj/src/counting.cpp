#include "mulab/counting.hpp"

#include <cmath>
#include <string>

namespace mulab {

namespace {

void check_groups(const Subset& a, const Subset& b, const Subset& c) {
    require_same_group(a.group(), b.group());
    require_same_group(a.group(), c.group());
}

MuResult round_count(double value, double distance_extra, Route route) {
    if (!(value > -0.5)) {
        throw RoundingError("negative triple count " + std::to_string(value) + " via " + std::string(to_string(route)));
    }
    const double rounded = std::round(value);
    const double residual = std::hypot(value - rounded, distance_extra);
    if (residual > kRoundingTolerance * std::max(1.0, rounded)) {
        throw RoundingError("triple count " + std::to_string(value) + " is not integral (residual " +
                            std::to_string(residual) + ") via " + std::string(to_string(route)));
    }
    return MuResult{static_cast<std::uint64_t>(rounded), route, residual};
}

}  // namespace

std::string_view to_string(Route r) noexcept {
    switch (r) {
        case Route::direct: return "direct";
        case Route::convolution: return "convolution";
        case Route::fourier: return "fourier";
    }
    return "unknown";
}

double inner_product(const DenseFunction& f, const DenseFunction& h) {
    require_same_group(f.group, h.group);
    if (f.values.size() != h.values.size()) throw std::invalid_argument("function lengths differ");
    double acc = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) acc += f.values[i] * h.values[i];
    return acc;
}

MuResult mu_direct(const Subset& a, const Subset& b, const Subset& c, kernels::Exec exec) {
    check_groups(a, b, c);
    const auto weight_a = a.weights();
    return MuResult{kernels::triple_count(a.group(), weight_a, b.view(), c.view(), exec), Route::direct, 0.0};
}

MuResult mu_convolution(const Subset& a, const Subset& b, const Subset& c, const TransformOptions& opts) {
    check_groups(a, b, c);
    a.group().require_dense(opts.dense_cap);
    const DenseFunction bc = convolve(b.indicator(), c.indicator(), opts);
    return round_count(inner_product(a.indicator(), bc), 0.0, Route::convolution);
}

SpectralSplit spectral_split(const Subset& a, const Subset& b, const Subset& c, const TransformOptions& opts) {
    check_groups(a, b, c);
    a.group().require_dense(opts.dense_cap);
    const Spectrum sa = forward(a.indicator(), opts);
    const Spectrum sb = forward(b.indicator(), opts);
    const Spectrum sc = forward(c.indicator(), opts);
    const double n = static_cast<double>(a.group().order());

    std::complex<double> rest{};
    for (std::size_t t = 1; t < sa.coeffs.size(); ++t) {
        rest += std::conj(sa.coeffs[t]) * sb.coeffs[t] * sc.coeffs[t];
    }
    SpectralSplit split;
    split.principal = static_cast<double>(a.size()) * static_cast<double>(b.size()) * static_cast<double>(c.size()) / n;
    split.nonprincipal = n * n * rest;
    return split;
}

MuResult mu_fourier(const Subset& a, const Subset& b, const Subset& c, const TransformOptions& opts) {
    const SpectralSplit split = spectral_split(a, b, c, opts);
    const std::complex<double> total = split.principal + split.nonprincipal;
    return round_count(total.real(), total.imag(), Route::fourier);
}

}  // namespace mulab
