#include "gapower/multivector.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "gapower/errors.hpp"

namespace gapower {

double normalize_angle(double radians) noexcept {
    double a = std::remainder(radians, 2.0 * std::numbers::pi);
    if (a <= -std::numbers::pi) a += 2.0 * std::numbers::pi;
    return a;
}

PhaseTable phase_table(std::span<const PhasorTag> tags) {
    PhaseTable t;
    for (const PhasorTag& tag : tags) {
        if (!t.emplace(tag.order, normalize_angle(tag.alpha)).second)
            throw InvalidInput("duplicate phase tag for order " +
                               std::to_string(tag.order));
    }
    return t;
}

Multivector::Multivector(unsigned dimension, const Blade& b,
                         std::complex<double> c)
    : dimension_(dimension) {
    add_term(b, c);
}

std::complex<double> Multivector::coefficient(const Blade& b) const {
    const auto it = terms_.find(b);
    return it == terms_.end() ? std::complex<double>{} : it->second;
}

Multivector& Multivector::add_term(const Blade& b, std::complex<double> c) {
    if (b.max_index() > dimension_)
        throw InvalidInput("blade " + b.str() + " does not fit dimension " +
                           std::to_string(dimension_));
    auto [it, inserted] = terms_.emplace(b, c);
    if (!inserted) it->second += c;
    if (it->second == std::complex<double>{}) terms_.erase(it);
    return *this;
}

double Multivector::max_coefficient() const noexcept {
    double best = 0.0;
    for (const auto& [b, c] : terms_) best = std::max(best, std::abs(c));
    return best;
}

bool Multivector::homogeneous(unsigned grade) const noexcept {
    for (const auto& [b, c] : terms_)
        if (b.grade() != grade) return false;
    return true;
}

Multivector Multivector::pruned() const {
    const double cut = term_prune_rel * max_coefficient();
    Multivector out(dimension_);
    for (const auto& [b, c] : terms_)
        if (std::abs(c) > cut) out.terms_.emplace(b, c);
    return out;
}

std::string Multivector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "j)";
        if (b.grade() > 0) os << b.str();
    }
    return os.str();
}

namespace {

void require_same_dimension(const Multivector& a, const Multivector& b) {
    if (a.dimension() != b.dimension())
        throw InvalidInput("dimension mismatch: " +
                           std::to_string(a.dimension()) + " vs " +
                           std::to_string(b.dimension()));
}

} // namespace

Multivector operator+(const Multivector& a, const Multivector& b) {
    require_same_dimension(a, b);
    Multivector out(a.dimension());
    for (const auto& [bl, c] : a.terms()) out.add_term(bl, c);
    for (const auto& [bl, c] : b.terms()) out.add_term(bl, c);
    return out.pruned();
}

Multivector operator-(const Multivector& a, const Multivector& b) {
    return a + (std::complex<double>{-1.0, 0.0} * b);
}

Multivector operator*(std::complex<double> c, const Multivector& m) {
    Multivector out(m.dimension());
    if (c == std::complex<double>{}) return out;
    for (const auto& [bl, coeff] : m.terms()) out.add_term(bl, c * coeff);
    return out;
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
    require_same_dimension(a, b);
    Multivector out(a.dimension());
    for (const auto& [ba, ca] : a.terms()) {
        for (const auto& [bb, cb] : b.terms()) {
            const auto [blade, sign] = blade_product(ba, bb);
            out.add_term(blade, static_cast<double>(sign) * ca * cb);
        }
    }
    return out.pruned();
}

Multivector generalized_product(const Multivector& a, const Multivector& b,
                                const PhaseTable& tags,
                                const std::set<unsigned>& common) {
    require_same_dimension(a, b);
    if (!a.homogeneous(1) || !b.homogeneous(1))
        throw InvalidInput("generalized product needs grade-1 operands");

    const auto tagged_order = [&tags](const Blade& bl) {
        const unsigned p = bl.indices().front();
        if (!tags.contains(p))
            throw InvalidInput("missing phase tag for order " +
                               std::to_string(p));
        return p;
    };

    Multivector out(a.dimension());
    for (const auto& [ba, ca] : a.terms()) {
        const unsigned p = tagged_order(ba);
        for (const auto& [bb, cb] : b.terms()) {
            const unsigned q = tagged_order(bb);
            std::complex<double> w = ca * cb;
            if (p > q && common.contains(p) && common.contains(q)) {
                const double d = tags.at(p) - tags.at(q);
                w *= std::exp(std::complex<double>{0.0, -2.0 * d});
            }
            const auto [blade, sign] = blade_product(ba, bb);
            out.add_term(blade, static_cast<double>(sign) * w);
        }
    }
    return out.pruned();
}

Multivector reverse(const Multivector& m) {
    Multivector out(m.dimension());
    for (const auto& [b, c] : m.terms()) {
        const unsigned k = b.grade();
        const bool flip = ((k * (k - 1)) / 2) % 2 != 0;
        out.add_term(b, flip ? -c : c);
    }
    return out;
}

Multivector conjugate(const Multivector& m) {
    Multivector out(m.dimension());
    for (const auto& [b, c] : m.terms()) out.add_term(b, std::conj(c));
    return out;
}

Multivector grade_part(const Multivector& m, unsigned grade) {
    Multivector out(m.dimension());
    for (const auto& [b, c] : m.terms())
        if (b.grade() == grade) out.add_term(b, c);
    return out;
}

std::complex<double> scalar_part(const Multivector& m) {
    return m.coefficient(Blade::scalar());
}

double norm(const Multivector& m) {
    const std::complex<double> g0 =
        scalar_part(geometric_product(m, conjugate(reverse(m))));
    const double bound = 1e-9 * (std::abs(g0) + 1.0);
    if (std::abs(g0.imag()) > bound || g0.real() < -bound)
        throw std::logic_error("norm lost positivity: " + m.str());
    return std::sqrt(std::max(0.0, g0.real()));
}

} // namespace gapower
