#include "gapower/blade.hpp"

#include <algorithm>
#include <sstream>

#include "gapower/errors.hpp"

namespace gapower {

namespace {

void validate(const std::vector<unsigned>& idx) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] == 0)
            throw InvalidInput("blade indices are 1-based, got 0");
        if (i > 0 && idx[i] <= idx[i - 1])
            throw InvalidInput("blade indices must be strictly ascending");
    }
}

} // namespace

Blade::Blade(std::span<const unsigned> indices)
    : indices_(indices.begin(), indices.end()) {
    validate(indices_);
}

Blade::Blade(std::initializer_list<unsigned> indices)
    : indices_(indices) {
    validate(indices_);
}

Blade Blade::vector(unsigned p) { return Blade{p}; }

Blade Blade::bivector(unsigned p, unsigned q) { return Blade{p, q}; }

std::strong_ordering Blade::operator<=>(const Blade& other) const noexcept {
    if (auto c = indices_.size() <=> other.indices_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(
        indices_.begin(), indices_.end(),
        other.indices_.begin(), other.indices_.end());
}

std::string Blade::str() const {
    if (indices_.empty()) return "1";
    const bool wide = indices_.back() > 9;
    std::ostringstream os;
    os << (wide ? "s{" : "s");
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (wide && i > 0) os << ',';
        os << indices_[i];
    }
    if (wide) os << '}';
    return os.str();
}

std::pair<Blade, int> blade_product(const Blade& a, const Blade& b) {
    const auto& av = a.indices();
    const auto& bv = b.indices();

    // Sign of the permutation that interleaves the two ascending runs:
    // each element of b crosses every larger element of a. Equal elements
    // land adjacent and contract with +1 (unit axes).
    int swaps = 0;
    {
        std::size_t ia = 0; // first a-index strictly greater than bv[ib]
        for (std::size_t ib = 0; ib < bv.size(); ++ib) {
            while (ia < av.size() && av[ia] <= bv[ib]) ++ia;
            swaps += static_cast<int>(av.size() - ia);
        }
    }

    std::vector<unsigned> out;
    out.reserve(av.size() + bv.size());
    std::size_t i = 0, j = 0;
    while (i < av.size() && j < bv.size()) {
        if (av[i] < bv[j]) out.push_back(av[i++]);
        else if (av[i] > bv[j]) out.push_back(bv[j++]);
        else { ++i; ++j; }
    }
    out.insert(out.end(), av.begin() + static_cast<std::ptrdiff_t>(i), av.end());
    out.insert(out.end(), bv.begin() + static_cast<std::ptrdiff_t>(j), bv.end());

    return {Blade(std::span<const unsigned>(out)), swaps % 2 ? -1 : 1};
}

} // namespace gapower
