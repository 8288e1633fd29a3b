#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mulab {

/// Dense vectors of length N are refused above this order unless the caller raises the cap.
inline constexpr std::uint64_t kDefaultDenseCap = std::uint64_t{1} << 26;

/// A group element, stored as its mixed-radix index with the first factor most significant.
struct Element {
    std::uint64_t index = 0;

    friend constexpr auto operator<=>(Element, Element) = default;
};

/// Finite abelian group Z(m1) x ... x Z(mk).
class GroupSpec {
public:
    /// Throws std::invalid_argument on an empty factor list, a factor below 2,
    /// or an order that does not fit in 64 bits.
    explicit GroupSpec(std::vector<std::uint64_t> factors);

    const std::vector<std::uint64_t>& factors() const noexcept { return factors_; }
    std::uint64_t order() const noexcept { return order_; }
    bool is_boolean() const noexcept { return boolean_; }
    std::size_t rank() const noexcept { return factors_.size(); }

    /// Number of bits of a boolean group; 0 otherwise.
    unsigned bits() const noexcept { return boolean_ ? static_cast<unsigned>(factors_.size()) : 0U; }

    bool contains(Element x) const noexcept { return x.index < order_; }

    /// Canonical spec string: `Z2^n` for boolean groups, `Z(m1)xZ(m2)...` otherwise.
    std::string to_string() const;

    /// Throws std::length_error when N exceeds `cap`.
    void require_dense(std::uint64_t cap = kDefaultDenseCap) const;

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.factors_ == b.factors_; }

private:
    std::vector<std::uint64_t> factors_;
    std::uint64_t order_ = 1;
    bool boolean_ = true;
};

/// Parses `Z2^<n>`, `Z(<m>)` and `x`-separated products of those.
GroupSpec parse_group_spec(std::string_view text);

Element add(const GroupSpec& g, Element x, Element y);
Element neg(const GroupSpec& g, Element x);
Element sub(const GroupSpec& g, Element x, Element y);

std::vector<std::uint64_t> decode(const GroupSpec& g, Element x);
Element encode(const GroupSpec& g, std::span<const std::uint64_t> coords);

/// Unchecked index arithmetic for inner loops; callers guarantee x, y < N.
std::uint64_t add_unchecked(const GroupSpec& g, std::uint64_t x, std::uint64_t y) noexcept;
std::uint64_t sub_unchecked(const GroupSpec& g, std::uint64_t x, std::uint64_t y) noexcept;

}  // namespace mulab
