#include "mulab/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "mulab/subset.hpp"

namespace mulab {

namespace {

using cplx = std::complex<double>;

constexpr double kTieTolerance = 1e-12;

bool use_wht(const GroupSpec& g, const TransformOptions& opts) {
    return g.is_boolean() && !opts.force_generic;
}

// Runs the per-axis cyclic transforms in place, first factor (largest stride) first.
void transform_all_axes(const GroupSpec& g, std::span<cplx> data, int sign, kernels::Exec exec) {
    std::map<std::uint64_t, kernels::CyclicPlan> plans;
    const auto& f = g.factors();
    std::uint64_t stride = g.order();
    for (auto m : f) {
        stride /= m;
        auto it = plans.try_emplace(m, m, sign).first;
        kernels::transform_axis(data, it->second, stride, exec);
    }
}

void wht_complex(std::span<cplx> data, kernels::Exec exec) {
    std::vector<double> re(data.size());
    std::vector<double> im(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        re[i] = data[i].real();
        im[i] = data[i].imag();
    }
    kernels::wht(re, exec);
    kernels::wht(im, exec);
    for (std::size_t i = 0; i < data.size(); ++i) data[i] = {re[i], im[i]};
}

double scale_of(std::span<const cplx> values) {
    double s = 1.0;
    for (const auto& v : values) s = std::max(s, std::abs(v.real()));
    return s;
}

}  // namespace

DenseFunction DenseFunction::zeros(GroupSpec g, std::uint64_t dense_cap) {
    g.require_dense(dense_cap);
    const auto n = g.order();
    return DenseFunction{std::move(g), std::vector<double>(n, 0.0)};
}

DenseFunction DenseFunction::constant(GroupSpec g, double value, std::uint64_t dense_cap) {
    g.require_dense(dense_cap);
    const auto n = g.order();
    return DenseFunction{std::move(g), std::vector<double>(n, value)};
}

Spectrum forward(const DenseFunction& f, const TransformOptions& opts) {
    f.group.require_dense(opts.dense_cap);
    if (f.values.size() != f.group.order()) throw std::invalid_argument("function length differs from group order");
    const double inv_n = 1.0 / static_cast<double>(f.group.order());
    Spectrum s{f.group, {}};
    if (use_wht(f.group, opts)) {
        std::vector<double> work = f.values;
        kernels::wht(work, opts.exec);
        s.coeffs.resize(work.size());
        std::transform(work.begin(), work.end(), s.coeffs.begin(), [inv_n](double v) { return cplx{v * inv_n, 0.0}; });
        return s;
    }
    s.coeffs.assign(f.values.begin(), f.values.end());
    transform_all_axes(f.group, s.coeffs, -1, opts.exec);
    for (auto& c : s.coeffs) c *= inv_n;
    return s;
}

Spectrum forward(const GroupSpec& g, std::span<const cplx> values, const TransformOptions& opts) {
    g.require_dense(opts.dense_cap);
    if (values.size() != g.order()) throw std::invalid_argument("function length differs from group order");
    Spectrum s{g, {values.begin(), values.end()}};
    if (use_wht(g, opts)) {
        wht_complex(s.coeffs, opts.exec);
    } else {
        transform_all_axes(g, s.coeffs, -1, opts.exec);
    }
    const double inv_n = 1.0 / static_cast<double>(g.order());
    for (auto& c : s.coeffs) c *= inv_n;
    return s;
}

std::vector<cplx> inverse_complex(const Spectrum& s, const TransformOptions& opts) {
    s.group.require_dense(opts.dense_cap);
    if (s.coeffs.size() != s.group.order()) throw std::invalid_argument("spectrum length differs from group order");
    std::vector<cplx> out = s.coeffs;
    if (use_wht(s.group, opts)) {
        wht_complex(out, opts.exec);
    } else {
        transform_all_axes(s.group, out, +1, opts.exec);
    }
    return out;
}

DenseFunction inverse(const Spectrum& s, const TransformOptions& opts) {
    const auto values = inverse_complex(s, opts);
    const double tol = kInverseImagTolerance * scale_of(values);
    DenseFunction f{s.group, std::vector<double>(values.size())};
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (std::abs(values[i].imag()) > tol) {
            throw std::domain_error("inverse transform has imaginary residue " +
                                    std::to_string(std::abs(values[i].imag())) + " at index " + std::to_string(i));
        }
        f.values[i] = values[i].real();
    }
    return f;
}

DenseFunction convolve(const DenseFunction& f, const DenseFunction& h, const TransformOptions& opts) {
    require_same_group(f.group, h.group);
    f.group.require_dense(opts.dense_cap);
    const auto n = f.group.order();
    if (f.values.size() != n || h.values.size() != n) {
        throw std::invalid_argument("function length differs from group order");
    }

    DenseFunction out{f.group, {}};
    if (use_wht(f.group, opts)) {
        std::vector<double> a = f.values;
        std::vector<double> b = h.values;
        kernels::wht(a, opts.exec);
        kernels::wht(b, opts.exec);
        for (std::size_t i = 0; i < n; ++i) a[i] *= b[i];
        kernels::wht(a, opts.exec);
        const double inv_n = 1.0 / static_cast<double>(n);
        for (auto& v : a) v *= inv_n;
        out.values = std::move(a);
    } else {
        Spectrum sf = forward(f, opts);
        const Spectrum sh = forward(h, opts);
        const double scale = static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) sf.coeffs[i] *= scale * sh.coeffs[i];
        const auto values = inverse_complex(sf, opts);
        const double tol = kConvolutionTolerance * scale_of(values);
        out.values.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (std::abs(values[i].imag()) > tol) {
                throw std::domain_error("convolution has imaginary residue at index " + std::to_string(i));
            }
            out.values[i] = values[i].real();
        }
    }

    double mag = 1.0;
    for (double v : out.values) mag = std::max(mag, std::abs(v));
    const double snap = kConvolutionTolerance * mag;
    for (auto& v : out.values) {
        const double r = std::round(v);
        if (std::abs(v - r) <= snap) v = r;
    }
    return out;
}

std::vector<cplx> character(const GroupSpec& g, std::uint64_t t) {
    const auto tc = decode(g, Element{t});
    const auto& f = g.factors();
    std::vector<cplx> out(g.order());
    for (std::uint64_t x = 0; x < g.order(); ++x) {
        const auto xc = decode(g, Element{x});
        double phase = 0.0;
        for (std::size_t j = 0; j < f.size(); ++j) {
            // Reduce t_j * x_j mod m_j before converting to keep the angle exact for small moduli.
            const std::uint64_t r = (tc[j] * xc[j]) % f[j];
            phase += static_cast<double>(r) / static_cast<double>(f[j]);
        }
        out[x] = std::polar(1.0, 2.0 * std::numbers::pi * phase);
    }
    return out;
}

MaxCoefficient max_nonprincipal_coeff(const Subset& a, const TransformOptions& opts) {
    const GroupSpec& g = a.group();
    if (g.order() < 2) throw std::domain_error("group has no non-principal characters");
    g.require_dense(opts.dense_cap);
    const auto weights = a.weights();
    const double inv_n = 1.0 / static_cast<double>(g.order());

    MaxCoefficient best;
    if (use_wht(g, opts)) {
        std::vector<double> work(weights.begin(), weights.end());
        kernels::wht(work, opts.exec);
        for (std::size_t t = 1; t < work.size(); ++t) {
            const double v = std::abs(work[t]) * inv_n;
            if (v > best.value) best = {v, t};
        }
    } else {
        DenseFunction f{g, std::vector<double>(weights.begin(), weights.end())};
        const Spectrum s = forward(f, opts);
        for (std::size_t t = 1; t < s.coeffs.size(); ++t) {
            // Conjugate pairs agree only up to rounding; treat near-equal magnitudes as ties.
            const double v = std::abs(s.coeffs[t]);
            if (v > best.value + kTieTolerance) best = {v, t};
        }
    }
    if (best.argmax == 0) best.argmax = 1;
    return best;
}

}  // namespace mulab
