#include "mulab/subset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "mulab/fourier.hpp"

namespace mulab {

void require_same_group(const GroupSpec& a, const GroupSpec& b) {
    if (!(a == b)) {
        throw std::invalid_argument("group mismatch: " + a.to_string() + " vs " + b.to_string());
    }
}

Subset Subset::from_indices(GroupSpec g, std::vector<std::uint64_t> indices, SubsetMode mode) {
    for (auto v : indices) {
        if (v >= g.order()) {
            throw std::out_of_range("element index " + std::to_string(v) + " out of range for group of order " +
                                    std::to_string(g.order()));
        }
    }
    std::sort(indices.begin(), indices.end());
    Subset s(std::move(g), mode);
    s.size_ = indices.size();
    if (mode == SubsetMode::set) {
        if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
            throw std::invalid_argument("duplicate element in set-mode subset");
        }
        s.elements_ = std::move(indices);
        return s;
    }
    for (std::size_t i = 0; i < indices.size();) {
        std::size_t j = i;
        while (j < indices.size() && indices[j] == indices[i]) ++j;
        s.elements_.push_back(indices[i]);
        s.multiplicities_.push_back(j - i);
        i = j;
    }
    return s;
}

Subset Subset::full(GroupSpec g) {
    std::vector<std::uint64_t> all(g.order());
    for (std::uint64_t i = 0; i < all.size(); ++i) all[i] = i;
    return from_indices(std::move(g), std::move(all));
}

Subset Subset::empty(GroupSpec g) { return from_indices(std::move(g), {}); }

bool Subset::contains(std::uint64_t index) const {
    return std::binary_search(elements_.begin(), elements_.end(), index);
}

std::vector<std::uint64_t> Subset::weights() const {
    std::vector<std::uint64_t> w(group_.order(), 0);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        w[elements_[i]] = multiplicities_.empty() ? 1 : multiplicities_[i];
    }
    return w;
}

DenseFunction Subset::indicator() const {
    const auto w = weights();
    return DenseFunction{group_, std::vector<double>(w.begin(), w.end())};
}

std::vector<std::uint64_t> Subset::expanded() const {
    std::vector<std::uint64_t> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        out.insert(out.end(), multiplicities_.empty() ? 1 : multiplicities_[i], elements_[i]);
    }
    return out;
}

Subset read_subset(std::istream& in, const GroupSpec& g, SubsetMode mode, const std::string& source_name) {
    std::vector<std::uint64_t> indices;
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& what) {
        return SubsetFileError(source_name + ":" + std::to_string(line_no) + ": " + what);
    };
    std::vector<bool> seen(mode == SubsetMode::set ? g.order() : 0, false);

    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        const std::string_view token(line.data() + first, last - first + 1);

        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw fail("not a decimal element index: '" + std::string(token) + "'");
        }
        if (v >= g.order()) {
            throw fail("element index " + std::to_string(v) + " out of range for group of order " +
                       std::to_string(g.order()));
        }
        if (mode == SubsetMode::set) {
            if (seen[v]) throw fail("duplicate element " + std::to_string(v));
            seen[v] = true;
        }
        indices.push_back(v);
    }
    return Subset::from_indices(g, std::move(indices), mode);
}

Subset read_subset_file(const std::filesystem::path& path, const GroupSpec& g, SubsetMode mode) {
    std::ifstream in(path);
    if (!in) throw SubsetFileError(path.string() + ": cannot open file");
    return read_subset(in, g, mode, path.string());
}

void write_subset(std::ostream& out, const Subset& s) {
    for (auto v : s.expanded()) out << v << '\n';
}

}  // namespace mulab
