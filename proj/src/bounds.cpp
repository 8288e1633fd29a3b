#include "mulab/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace mulab::bounds {

double exponent(double n, double m) {
    if (m <= 0.0) return 0.0;
    return std::log2(m) / std::log2(n);
}

double main_bound(double n, double m, double constant) {
    return m * m * m / n + constant * std::pow(m, 1.5) * std::sqrt(std::log(n));
}

double general_bound(double n, double m_a, double m_b, double m_c, double constant) {
    if (m_a == m_b && m_b == m_c) return main_bound(n, m_a, constant);
    const double prod = m_a * m_b * m_c;
    return prod / n + constant * std::sqrt(std::log(n) * prod);
}

double hayes_coeff_bound(double n, double m, double epsilon) {
    const double m_prime = std::max(0.0, std::min(m, n - m));
    return (2.0 / n) * std::sqrt(2.0 * (1.0 + epsilon) * std::log(n) * m_prime);
}

KiltzValue kiltz_bound(double n, double m) {
    if (m <= 0.0) return {0.0, false, false};
    const double alpha = exponent(n, m);
    return {std::pow(m, 1.0 + 2.0 * alpha), alpha <= 0.25, true};
}

std::optional<double> alon_bound(double n, double m_a, double m_b, double alon_constant) {
    if (m_a <= 0.0 || m_b <= 0.0) return std::nullopt;
    const double lnln = std::log(std::log(n));
    if (!(lnln > 0.0)) return std::nullopt;
    const double gap = 2.0 * exponent(n, m_a) + exponent(n, m_b) - 2.0;
    if (!(gap > 1.0 / lnln)) return std::nullopt;
    return alon_constant / gap * m_a * m_b * m_b / n;
}

double conjecture_curve(double n, double m) { return std::max(m, m * m * m / n); }

void BoundInputs::validate() const {
    if (n < 2) throw std::invalid_argument("group order must be at least 2");
    if (m_a > n || m_b > n || m_c > n) throw std::invalid_argument("subset size exceeds group order");
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    if (h && !(*h >= 0.0)) throw std::invalid_argument("h must be non-negative");
    if (!(alon_constant > 0.0)) throw std::invalid_argument("alon constant must be positive");
}

BoundReport evaluate(const BoundInputs& in) {
    in.validate();
    const auto n = static_cast<double>(in.n);
    const auto ma = static_cast<double>(in.m_a);
    const auto mb = static_cast<double>(in.m_b);
    const auto mc = static_cast<double>(in.m_c);

    BoundReport r;
    r.alpha = exponent(n, ma);
    r.beta = exponent(n, mb);
    r.constant = in.h ? sharpened_constant(*in.h) : kDefaultConstant;
    r.main_bound = main_bound(n, ma, r.constant);
    r.general_bound = general_bound(n, ma, mb, mc, r.constant);
    r.hayes_coeff_bound = hayes_coeff_bound(n, ma, in.epsilon);
    const auto k = kiltz_bound(n, ma);
    r.kiltz_bound = k.value;
    r.kiltz_in_regime = k.in_regime;
    r.alon_bound = alon_bound(n, ma, mb, in.alon_constant);
    r.conjecture_curve = conjecture_curve(n, ma);
    r.cubic_term_dominates = ma * ma * ma / n >= r.constant * std::pow(ma, 1.5) * std::sqrt(std::log(n));
    return r;
}

}  // namespace mulab::bounds
