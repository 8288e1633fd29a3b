#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mulab/group.hpp"
#include "mulab/kernels.hpp"

namespace mulab {

struct DenseFunction;

enum class SubsetMode { set, multiset };

/// Subset of a group, or a multiset when drawn with replacement.
/// Elements are kept sorted and distinct; a multiset carries one multiplicity per element.
class Subset {
public:
    /// Set mode rejects duplicate indices; multiset mode folds them into multiplicities.
    /// Throws std::out_of_range for indices >= N.
    static Subset from_indices(GroupSpec g, std::vector<std::uint64_t> indices, SubsetMode mode = SubsetMode::set);
    static Subset full(GroupSpec g);
    static Subset empty(GroupSpec g);

    const GroupSpec& group() const noexcept { return group_; }
    std::span<const std::uint64_t> elements() const noexcept { return elements_; }
    std::span<const std::uint64_t> multiplicities() const noexcept { return multiplicities_; }
    bool is_multiset() const noexcept { return mode_ == SubsetMode::multiset; }

    /// m: the number of distinct elements in set mode, total multiplicity in multiset mode.
    std::uint64_t size() const noexcept { return size_; }
    std::size_t distinct() const noexcept { return elements_.size(); }
    bool contains(std::uint64_t index) const;

    /// Dense weight vector of length N (0/1 in set mode).
    std::vector<std::uint64_t> weights() const;
    DenseFunction indicator() const;
    kernels::WeightedSet view() const noexcept { return {elements_, multiplicities_}; }

    /// One index per line, each repeated by its multiplicity.
    std::vector<std::uint64_t> expanded() const;

    friend bool operator==(const Subset&, const Subset&) = default;

private:
    Subset(GroupSpec g, SubsetMode mode) : group_(std::move(g)), mode_(mode) {}

    GroupSpec group_;
    SubsetMode mode_;
    std::vector<std::uint64_t> elements_;
    std::vector<std::uint64_t> multiplicities_;
    std::uint64_t size_ = 0;
};

/// Thrown when a subset file cannot be parsed; the message names the file and line.
class SubsetFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Decimal indices, one per line; `#` starts a comment; blank lines are skipped.
Subset read_subset(std::istream& in, const GroupSpec& g, SubsetMode mode, const std::string& source_name);
Subset read_subset_file(const std::filesystem::path& path, const GroupSpec& g, SubsetMode mode = SubsetMode::set);
void write_subset(std::ostream& out, const Subset& s);

/// Throws std::invalid_argument unless every argument lives in the same group.
void require_same_group(const GroupSpec& a, const GroupSpec& b);

}  // namespace mulab
