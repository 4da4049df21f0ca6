#pragma once

#include <complex>
#include <map>
#include <set>
#include <span>
#include <string>

#include "gapower/blade.hpp"

namespace gapower {

/// Relative magnitude below which a stored term counts as arithmetic dust.
/// Applied by every operation, relative to the largest coefficient of the
/// result, so cancellation residue never accumulates.
inline constexpr double term_prune_rel = 1e-12;

/// Phase tag attached to one harmonic order: the phase angle of the voltage
/// harmonic at that order, radians in (-pi, pi]. The phase-referenced product
/// reads tags only for orders shared by both signals; orders outside that set
/// still need an entry (any value) so a forgotten tag is always an error.
struct PhasorTag {
    unsigned order;
    double alpha;
};

/// Order -> voltage phase angle, the lookup form of a tag list.
using PhaseTable = std::map<unsigned, double>;

/// Builds a PhaseTable, normalizing angles into (-pi, pi].
/// Throws InvalidInput on a duplicated order.
PhaseTable phase_table(std::span<const PhasorTag> tags);

/// Normalizes an angle into (-pi, pi].
double normalize_angle(double radians) noexcept;

/// Sparse element of the complex Clifford algebra over n anisotropic axes
/// (one axis per harmonic order). Terms map canonical blades to complex
/// coefficients; absent blades are zero.
///
/// Values are plain data: every operation returns a new object, so shared
/// instances are safe to read concurrently.
class Multivector {
public:
    using Terms = std::map<Blade, std::complex<double>>;

    /// Zero element of the algebra over indices 1..dimension.
    explicit Multivector(unsigned dimension) : dimension_(dimension) {}

    /// Single-term element. Throws InvalidInput if the blade does not fit.
    Multivector(unsigned dimension, const Blade& b, std::complex<double> c);

    unsigned dimension() const noexcept { return dimension_; }
    const Terms& terms() const noexcept { return terms_; }
    bool zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// Stored coefficient, zero for absent blades.
    std::complex<double> coefficient(const Blade& b) const;

    /// Construction helper: accumulates c onto blade b without pruning.
    /// Throws InvalidInput if an index exceeds the dimension.
    Multivector& add_term(const Blade& b, std::complex<double> c);

    /// Largest coefficient magnitude, 0 for the zero element.
    double max_coefficient() const noexcept;

    /// True when every stored term has the given grade (vacuously for zero).
    bool homogeneous(unsigned grade) const noexcept;

    /// Drops terms below term_prune_rel times the largest coefficient.
    Multivector pruned() const;

    std::string str() const;

private:
    unsigned dimension_ = 0;
    Terms terms_;
};

/// Elementwise sum/difference/scaling. Operands must share a dimension.
Multivector operator+(const Multivector& a, const Multivector& b);
Multivector operator-(const Multivector& a, const Multivector& b);
Multivector operator*(std::complex<double> c, const Multivector& m);

/// Classic geometric (Clifford) product, extended bilinearly over terms.
Multivector geometric_product(const Multivector& a, const Multivector& b);

/// Phase-referenced geometric product of two grade-1 elements.
///
/// Term pairs (p, q) with p > q and both orders in `common` pick up the
/// rotation exp(-2j(alpha_p - alpha_q)) from the tag table before the blade
/// product; every other pair multiplies classically. With all tagged phases
/// equal the rotation collapses to 1 and this is exactly geometric_product.
///
/// Preconditions: both operands homogeneous of grade 1; every stored order
/// tagged in `tags`. Violations throw InvalidInput.
Multivector generalized_product(const Multivector& a, const Multivector& b,
                                const PhaseTable& tags,
                                const std::set<unsigned>& common);

/// Reversion: grade-k terms scale by (-1)^(k(k-1)/2).
Multivector reverse(const Multivector& m);

/// Complex conjugation of every coefficient.
Multivector conjugate(const Multivector& m);

/// Projection onto the terms of one grade.
Multivector grade_part(const Multivector& m, unsigned grade);

/// Coefficient of the scalar blade.
std::complex<double> scalar_part(const Multivector& m);

/// Norm via the scalar part of m * conjugate(reverse(m)). For this algebra
/// that equals sqrt(sum of squared coefficient magnitudes). The grade-0
/// result must come out real and non-negative; a violation beyond rounding
/// signals an internal arithmetic bug and throws std::logic_error.
double norm(const Multivector& m);

} // namespace gapower
