#pragma once

// Closed-form bounds and reference curves for mu. All logarithms are natural.
// Exponents are alpha = log_N |A| and beta = log_N |B|.

#include <cmath>
#include <cstdint>
#include <optional>

namespace mulab::bounds {

inline constexpr double kDefaultConstant = 4.0;

/// 2*sqrt(2) + h, the sharpened leading constant.
inline double sharpened_constant(double h) { return 2.0 * std::sqrt(2.0) + h; }

/// log_N(m); 0 for m = 0. Base-2 logarithms keep powers of two exact.
double exponent(double n, double m);

/// m^3 / N + constant * m^{3/2} sqrt(ln N)
double main_bound(double n, double m, double constant = kDefaultConstant);

/// mA mB mC / N + constant * sqrt(ln N * mA mB mC)
double general_bound(double n, double m_a, double m_b, double m_c, double constant = kDefaultConstant);

/// (2/N) sqrt(2 (1 + epsilon) ln N * min(m, N - m))
double hayes_coeff_bound(double n, double m, double epsilon = 1.0);

struct KiltzValue {
    double value = 0.0;
    bool in_regime = false;  // alpha <= 1/4
    bool defined = true;     // false for m = 0
};

/// m^{1 + 2 alpha}
KiltzValue kiltz_bound(double n, double m);

/// c / (2 alpha + beta - 2) * mA mB^2 / N when 2 alpha + beta > 2 + 1/ln(ln N); nullopt otherwise.
std::optional<double> alon_bound(double n, double m_a, double m_b, double alon_constant = 1.0);

/// max(m, m^3 / N); a reference curve only.
double conjecture_curve(double n, double m);

struct BoundInputs {
    std::uint64_t n = 2;
    std::uint64_t m_a = 0;
    std::uint64_t m_b = 0;
    std::uint64_t m_c = 0;
    double epsilon = 1.0;
    std::optional<double> h;  // when set, main/general bounds use 2*sqrt(2) + h instead of 4
    double alon_constant = 1.0;

    /// Throws std::invalid_argument on N < 2, sizes above N, epsilon <= 0, h < 0 or alon_constant <= 0.
    void validate() const;
};

struct BoundReport {
    double alpha = 0.0;
    double beta = 0.0;
    double constant = kDefaultConstant;
    double main_bound = 0.0;
    double general_bound = 0.0;
    double hayes_coeff_bound = 0.0;
    double kiltz_bound = 0.0;
    bool kiltz_in_regime = false;
    std::optional<double> alon_bound;
    bool alon_constant_unknown = true;
    double conjecture_curve = 0.0;
    bool cubic_term_dominates = false;  // m^3/N >= constant * m^{3/2} sqrt(ln N)
};

BoundReport evaluate(const BoundInputs& in);

}  // namespace mulab::bounds
