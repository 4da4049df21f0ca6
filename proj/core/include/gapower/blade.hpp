#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gapower {

/// Basis blade of a real Euclidean Clifford algebra: an ordered product of
/// distinct unit basis vectors, identified by its index set.
///
/// Indices are harmonic orders, 1-based. Canonical storage is strictly
/// ascending; orientation signs live with coefficients, never in the blade.
/// The empty index set is the scalar unit.
class Blade {
public:
    /// Scalar unit (empty index set, grade 0).
    Blade() = default;

    /// Canonical blade from strictly ascending indices, all >= 1.
    /// Throws InvalidInput if the sequence is not strictly ascending or
    /// contains 0.
    explicit Blade(std::span<const unsigned> indices);
    Blade(std::initializer_list<unsigned> indices);

    static Blade scalar() { return Blade{}; }
    static Blade vector(unsigned p);
    /// Requires p < q; the (q, p) orientation is represented as -blade(p, q).
    static Blade bivector(unsigned p, unsigned q);

    unsigned grade() const noexcept { return static_cast<unsigned>(indices_.size()); }
    const std::vector<unsigned>& indices() const noexcept { return indices_; }
    /// Largest index, 0 for the scalar unit.
    unsigned max_index() const noexcept { return indices_.empty() ? 0 : indices_.back(); }

    bool operator==(const Blade&) const = default;
    /// Grade-major order, then lexicographic. Gives the conventional
    /// basis listing: 1, s1, s2, ..., s12, s13, ...
    std::strong_ordering operator<=>(const Blade& other) const noexcept;

    /// Rendering for diagnostics: "1", "s1", "s12", "s{2,11}".
    std::string str() const;

private:
    std::vector<unsigned> indices_;
};

/// Product of two basis blades under the Euclidean Clifford rule
/// (each basis vector squares to +1). Returns the canonical result blade and
/// the orientation sign, +1 or -1.
std::pair<Blade, int> blade_product(const Blade& a, const Blade& b);

} // namespace gapower
