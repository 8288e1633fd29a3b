#include "mulab/group.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace mulab {

namespace {

void check_index(const GroupSpec& g, Element x) {
    if (!g.contains(x)) {
        throw std::out_of_range("element index " + std::to_string(x.index) +
                                " out of range for group of order " + std::to_string(g.order()));
    }
}

std::uint64_t parse_u64(std::string_view text, std::string_view whole) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("malformed group spec '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

GroupSpec::GroupSpec(std::vector<std::uint64_t> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) {
        throw std::invalid_argument("group needs at least one cyclic factor");
    }
    for (auto m : factors_) {
        if (m < 2) {
            throw std::invalid_argument("cyclic modulus " + std::to_string(m) + " is below 2");
        }
        if (order_ > std::numeric_limits<std::uint64_t>::max() / m) {
            throw std::invalid_argument("group order overflows 64 bits");
        }
        order_ *= m;
        boolean_ = boolean_ && m == 2;
    }
}

std::string GroupSpec::to_string() const {
    if (boolean_) {
        return "Z2^" + std::to_string(factors_.size());
    }
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += 'x';
        out += "Z(" + std::to_string(factors_[i]) + ")";
    }
    return out;
}

void GroupSpec::require_dense(std::uint64_t cap) const {
    if (order_ > cap) {
        throw std::length_error("group order " + std::to_string(order_) + " exceeds dense cap " +
                                std::to_string(cap));
    }
}

GroupSpec parse_group_spec(std::string_view text) {
    std::vector<std::uint64_t> factors;
    std::string_view rest = text;
    auto bad = [&] { return std::invalid_argument("malformed group spec '" + std::string(text) + "'"); };

    while (true) {
        auto sep = rest.find('x');
        std::string_view term = rest.substr(0, sep);
        if (term.starts_with("Z2^")) {
            std::uint64_t n = parse_u64(term.substr(3), text);
            if (n < 1 || n > 64) throw bad();
            factors.insert(factors.end(), n, 2);
        } else if (term.starts_with("Z(") && term.ends_with(")") && term.size() > 3) {
            factors.push_back(parse_u64(term.substr(2, term.size() - 3), text));
        } else {
            throw bad();
        }
        if (sep == std::string_view::npos) break;
        rest = rest.substr(sep + 1);
    }
    return GroupSpec(std::move(factors));
}

std::uint64_t add_unchecked(const GroupSpec& g, std::uint64_t x, std::uint64_t y) noexcept {
    if (g.is_boolean()) return x ^ y;
    const auto& f = g.factors();
    std::uint64_t out = 0;
    std::uint64_t place = 1;
    for (std::size_t i = f.size(); i-- > 0;) {
        const std::uint64_t m = f[i];
        std::uint64_t d = x % m + y % m;
        if (d >= m) d -= m;
        out += d * place;
        place *= m;
        x /= m;
        y /= m;
    }
    return out;
}

std::uint64_t sub_unchecked(const GroupSpec& g, std::uint64_t x, std::uint64_t y) noexcept {
    if (g.is_boolean()) return x ^ y;
    const auto& f = g.factors();
    std::uint64_t out = 0;
    std::uint64_t place = 1;
    for (std::size_t i = f.size(); i-- > 0;) {
        const std::uint64_t m = f[i];
        const std::uint64_t a = x % m;
        const std::uint64_t b = y % m;
        out += (a >= b ? a - b : a + m - b) * place;
        place *= m;
        x /= m;
        y /= m;
    }
    return out;
}

Element add(const GroupSpec& g, Element x, Element y) {
    check_index(g, x);
    check_index(g, y);
    return Element{add_unchecked(g, x.index, y.index)};
}

Element neg(const GroupSpec& g, Element x) {
    check_index(g, x);
    return Element{sub_unchecked(g, 0, x.index)};
}

Element sub(const GroupSpec& g, Element x, Element y) {
    check_index(g, x);
    check_index(g, y);
    return Element{sub_unchecked(g, x.index, y.index)};
}

std::vector<std::uint64_t> decode(const GroupSpec& g, Element x) {
    check_index(g, x);
    const auto& f = g.factors();
    std::vector<std::uint64_t> coords(f.size());
    std::uint64_t v = x.index;
    for (std::size_t i = f.size(); i-- > 0;) {
        coords[i] = v % f[i];
        v /= f[i];
    }
    return coords;
}

Element encode(const GroupSpec& g, std::span<const std::uint64_t> coords) {
    const auto& f = g.factors();
    if (coords.size() != f.size()) {
        throw std::invalid_argument("coordinate tuple has wrong length");
    }
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (coords[i] >= f[i]) throw std::out_of_range("coordinate out of range");
        v = v * f[i] + coords[i];
    }
    return Element{v};
}

}  // namespace mulab
