// Release acceptance gate. Runs every criterion against its reference
// values and prints one verdict line per criterion (details under a failing
// line). Exits 0 only when every criterion holds.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include "gapower/blade.hpp"
#include "gapower/compensation.hpp"
#include "gapower/multivector.hpp"
#include "gapower/power.hpp"
#include "gapower/spectrum.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/property_suites.hpp"

using namespace gapower;

namespace {

struct Criterion {
    std::string name;
    bool passed = true;
    std::vector<std::string> failures;

    void fail(const std::string& what) {
        passed = false;
        failures.push_back(what);
    }
};

// Reference values keep the precision they were published with; a computed
// value passes when it is within the stated relative tolerance or within
// half a unit of the reference's last printed decimal place, whichever is
// wider. `printed_decimals` may be negative for values quoted in units of a
// power of ten.
void check(Criterion& c, const std::string& label, double got, double want,
           double rel, int printed_decimals) {
    const double tol = std::max(rel * std::abs(want),
                                0.5 * std::pow(10.0, -printed_decimals));
    if (!(std::abs(got - want) <= tol)) {
        char buf[240];
        std::snprintf(buf, sizeof buf,
                      "%s: got %.6f, expected %.6f +/- %.4g (off by %.4g)",
                      label.c_str(), got, want, tol, std::abs(got - want));
        c.fail(buf);
    }
}

void check_abs(Criterion& c, const std::string& label, double got, double want,
               double tol) {
    if (!(std::abs(got - want) <= tol)) {
        char buf[240];
        std::snprintf(buf, sizeof buf,
                      "%s: got %.6f, expected %.6f +/- %.4g (off by %.4g)",
                      label.c_str(), got, want, tol, std::abs(got - want));
        c.fail(buf);
    }
}

void check_complex(Criterion& c, const std::string& label,
                   std::complex<double> got, std::complex<double> want,
                   double rel, int re_decimals, int im_decimals) {
    check(c, label + " (real)", got.real(), want.real(), rel, re_decimals);
    check(c, label + " (imag)", got.imag(), want.imag(), rel, im_decimals);
}

std::complex<double> dterm(const PowerMultivector& s, unsigned p, unsigned q) {
    return s.distortion_terms().at({p, q}).value;
}

Criterion criterion_1() {
    Criterion c{"1. nonlinear port A: headline magnitudes and all six "
                "distortion bivectors"};
    const Spectrum u = fix::voltage_a();
    const Spectrum i = fix::current_a();
    const PowerMultivector s = apparent_power(u, i);
    const PowerSummary m = magnitudes(s, u, i);

    check(c, "P [W]", m.active, 5196.15, 5e-4, 2);
    check(c, "|Q| [var]", m.reactive_abs(), 1000.0, 5e-4, 0);
    check(c, "D [VA]", m.distortion, 5099.0, 5e-4, 0);
    check(c, "S^2 [VA^2]", m.apparent * m.apparent, 5.4e7, 5e-4, -6);
    check(c, "|U|^2 [V^2]", u.rms() * u.rms(), 9e4, 5e-4, -4);
    check(c, "|I|^2 [A^2]", i.rms() * i.rms(), 600.0, 5e-4, 0);

    check_complex(c, "d(1,2)", dterm(s, 1, 2), {-3000.0, 1732.0}, 1e-3, 0, 0);
    check_complex(c, "d(1,3)", dterm(s, 1, 3), {1000.0, -1732.0}, 1e-3, 0, 0);
    check_complex(c, "d(2,3)", dterm(s, 2, 3), {0.0, -2000.0}, 1e-3, 0, 0);
    check_complex(c, "d(4,1)", dterm(s, 4, 1), {2000.0, 0.0}, 1e-3, 0, 0);
    check_complex(c, "d(4,2)", dterm(s, 4, 2), {0.0, 1000.0}, 1e-3, 0, 0);
    check_complex(c, "d(4,3)", dterm(s, 4, 3), {866.03, -500.0}, 1e-3, 2, 0);
    return c;
}

Criterion criterion_2() {
    Criterion c{"2. phase-reference variant B: magnitudes invariant, "
                "bivector components move"};
    const Spectrum ua = fix::voltage_a(), ia = fix::current_a();
    const Spectrum ub = fix::voltage_b(), ib = fix::current_b();
    const PowerMultivector sa = apparent_power(ua, ia);
    const PowerMultivector sb = apparent_power(ub, ib);
    const PowerSummary ma = magnitudes(sa, ua, ia);
    const PowerSummary mb = magnitudes(sb, ub, ib);

    check_abs(c, "P A vs B", mb.active, ma.active, 1e-9 * std::abs(ma.active));
    check_abs(c, "Q A vs B", mb.reactive_signed, ma.reactive_signed,
              1e-9 * std::abs(ma.reactive_signed));
    check_abs(c, "D A vs B", mb.distortion, ma.distortion,
              1e-9 * ma.distortion);
    check_abs(c, "S A vs B", mb.apparent, ma.apparent, 1e-9 * ma.apparent);

    check_complex(c, "d(1,2) B", dterm(sb, 1, 2), {-1732.0, 3000.0}, 1e-3, 0,
                  0);
    check_complex(c, "d(2,3) B", dterm(sb, 2, 3), {1000.0, -1732.0}, 1e-3, 0,
                  0);
    check_complex(c, "d(4,2) B", dterm(sb, 4, 2), {500.0, 866.03}, 1e-3, 0, 2);
    return c;
}

Criterion criterion_3() {
    Criterion c{"3. linear load: uncompensated multivector, quality index "
                "and power factor"};
    const Spectrum u = fix::voltage_lin();
    const Spectrum i = fix::current_lin();
    const PowerMultivector s = apparent_power(u, i);
    const PowerSummary m = magnitudes(s, u, i);
    const QualityIndex q = quality_index(s, m);

    check_complex(c, "scalar", s.scalar(), {5426.5, 3328.43}, 1e-3, 1, 2);
    check_complex(c, "d(1,2)", dterm(s, 1, 2), {-35.28, -2131.65}, 1e-3, 2, 2);
    check_complex(c, "d(1,3)", dterm(s, 1, 3), {-931.85, -2249.69}, 1e-3, 2,
                  2);
    check_complex(c, "d(2,3)", dterm(s, 2, 3), {-866.03, -1500.0}, 1e-3, 2, 0);
    check_abs(c, "|delta|", q.magnitude, 1.354, 0.005);
    check_abs(c, "PF", q.power_factor, 0.738, 0.005);
    return c;
}

Criterion criterion_4() {
    Criterion c{"4. compensator synthesis: optimal capacitor and fixed-pole "
                "LC bank values"};
    const Spectrum u = fix::voltage_lin();
    const Spectrum i = fix::current_lin();

    const ShuntCapacitor copt = optimal_shunt_capacitor(u, i);
    check(c, "C_opt [uF]", copt.farads * 1e6, 36.53, 1e-3, 2);

    const double poles[] = {1.2, 2.5, 4.5};
    const CompensatorDesign lc = fixed_pole_lc_design(u, i, poles);
    const double want_uF[] = {58.29, 23.35, 6.18};
    const double want_mH[] = {121.0, 69.0, 81.0};
    if (lc.elements().size() != 3) {
        c.fail("LC design should hold 3 branches, holds " +
               std::to_string(lc.elements().size()));
        return c;
    }
    for (int k = 0; k < 3; ++k) {
        const auto& branch = std::get<LcBranch>(lc.elements()[k]);
        check(c, "C_" + std::to_string(k + 1) + " [uF]", branch.farads * 1e6,
              want_uF[k], 5e-3, 2);
        check(c, "L_" + std::to_string(k + 1) + " [mH]", branch.henries * 1e3,
              want_mH[k], 5e-3, 0);
    }
    return c;
}

struct TableColumn {
    double i_rms, p, q, d12, d13, d23, s, delta, pf;
};

TableColumn table_column(const Spectrum& u, const Spectrum& i) {
    const PowerMultivector s = apparent_power(u, i);
    const PowerSummary m = magnitudes(s, u, i);
    const QualityIndex q = quality_index(s, m);
    return {i.rms(),
            m.active,
            m.reactive_signed,
            std::abs(dterm(s, 1, 2)),
            std::abs(dterm(s, 1, 3)),
            std::abs(dterm(s, 2, 3)),
            m.apparent,
            q.magnitude,
            q.power_factor};
}

Criterion criterion_5() {
    Criterion c{"5. compensation comparison table, all three columns "
                "(uncompensated / capacitor / LC bank)"};
    const Spectrum u = fix::voltage_lin();
    const Spectrum i = fix::current_lin();

    CompensatorDesign cap_design(u.omega());
    cap_design.add(optimal_shunt_capacitor(u, i));
    const double poles[] = {1.2, 2.5, 4.5};
    const CompensatorDesign lc_design = fixed_pole_lc_design(u, i, poles);

    const TableColumn before = table_column(u, i);
    const TableColumn cap =
        table_column(u, apply_compensator(u, i, cap_design));
    const TableColumn lc = table_column(u, apply_compensator(u, i, lc_design));

    struct Row {
        const char* name;
        double TableColumn::* field;
        double want[3];
        int decimals[3];
    };
    const Row rows[] = {
        {"I_load [A]", &TableColumn::i_rms, {24.5, 23.702, 18.708}, {1, 3, 3}},
        {"Q [var]", &TableColumn::q, {3328.43, 1606.83, 0.0}, {2, 2, 0}},
        {"|d(1,2)| [VA]",
         &TableColumn::d12,
         {2131.94, 2536.73, 1096.36},
         {2, 2, 2}},
        {"|d(1,3)| [VA]",
         &TableColumn::d13,
         {2435.05, 2890.84, 316.23},
         {2, 2, 2}},
        {"|d(2,3)| [VA]",
         &TableColumn::d23,
         {1732.05, 1934.25, 866.02},
         {2, 2, 2}},
        {"S [VA]", &TableColumn::s, {7348.47, 7110.69, 5612.0}, {2, 2, 0}},
        {"|delta|", &TableColumn::delta, {1.35, 1.31, 1.03}, {2, 2, 2}},
        {"PF", &TableColumn::pf, {0.74, 0.76, 0.97}, {2, 2, 2}},
    };
    const TableColumn* columns[] = {&before, &cap, &lc};
    const char* column_names[] = {"uncompensated", "capacitor", "LC bank"};

    for (const Row& row : rows)
        for (int k = 0; k < 3; ++k)
            check(c,
                  std::string(row.name) + " (" + column_names[k] + ")",
                  columns[k]->*row.field, row.want[k], 1e-3, row.decimals[k]);
    return c;
}

Criterion criterion_6() {
    Criterion c{"6. randomized property suites, 1000 cases each"};
    for (const props::SuiteResult& suite : props::run_all(1000, 20260817)) {
        if (!suite.passed()) {
            c.fail(suite.name + ": " + std::to_string(suite.failures) + "/" +
                   std::to_string(suite.cases) + " cases failed; first: " +
                   suite.detail);
        }
    }
    return c;
}

std::vector<Blade> all_blades(unsigned n) {
    std::vector<Blade> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<unsigned> indices;
        for (unsigned bit = 0; bit < n; ++bit)
            if (mask & (1u << bit)) indices.push_back(bit + 1);
        out.push_back(indices.empty()
                          ? Blade::scalar()
                          : Blade(std::span<const unsigned>(indices)));
    }
    return out;
}

Criterion criterion_7() {
    Criterion c{"7. kernel algebra: exhaustive blade signs, norm identity, "
                "involutions"};

    // Exhaustive product signs against the transposition-counting oracle.
    unsigned mismatches = 0;
    for (unsigned n = 1; n <= 5 && mismatches == 0; ++n) {
        const std::vector<Blade> blades = all_blades(n);
        for (const Blade& a : blades) {
            for (const Blade& b : blades) {
                const auto [blade, sign] = blade_product(a, b);
                const auto want = oracle::blade_product_by_transpositions(
                    {a.indices().begin(), a.indices().end()},
                    {b.indices().begin(), b.indices().end()});
                const bool same_indices =
                    std::equal(blade.indices().begin(), blade.indices().end(),
                               want.indices.begin(), want.indices.end());
                if (!same_indices || sign != want.sign) {
                    ++mismatches;
                    c.fail("blade product " + a.str() + " * " + b.str() +
                           " disagrees with the transposition oracle");
                    break;
                }
            }
            if (mismatches) break;
        }
    }

    // Norm against the direct coefficient sum, plus involutions.
    gen::Rng rng(7);
    for (int k = 0; k < 500; ++k) {
        const Multivector m = gen::mixed(rng, 6);
        double direct = 0.0;
        for (const auto& [blade, z] : m.terms()) direct += std::norm(z);
        const double via_algebra = norm(m) * norm(m);
        if (std::abs(via_algebra - direct) > 1e-12 * std::max(direct, 1.0)) {
            c.fail("norm^2 disagrees with the coefficient sum");
            break;
        }
        if (norm(reverse(reverse(m)) - m) != 0.0) {
            c.fail("reverse is not involutive");
            break;
        }
        if (norm(conjugate(conjugate(m)) - m) != 0.0) {
            c.fail("conjugate is not involutive");
            break;
        }
    }
    return c;
}

} // namespace

int main() {
    std::vector<Criterion> criteria;
    const auto guarded = [&](Criterion (*build)(), const char* name) {
        try {
            criteria.push_back(build());
        } catch (const std::exception& e) {
            Criterion c{name};
            c.fail(std::string("threw: ") + e.what());
            criteria.push_back(std::move(c));
        }
    };
    guarded(criterion_1, "1. nonlinear port A");
    guarded(criterion_2, "2. phase-reference variant B");
    guarded(criterion_3, "3. linear load");
    guarded(criterion_4, "4. compensator synthesis");
    guarded(criterion_5, "5. compensation comparison table");
    guarded(criterion_6, "6. randomized property suites");
    guarded(criterion_7, "7. kernel algebra");

    unsigned passed = 0;
    for (const Criterion& c : criteria) {
        std::printf("[%s] %s\n", c.passed ? "PASS" : "FAIL", c.name.c_str());
        for (const std::string& f : c.failures)
            std::printf("         %s\n", f.c_str());
        passed += c.passed ? 1 : 0;
    }
    std::printf("\n%u of %zu acceptance criteria passed.\n", passed,
                criteria.size());
    return passed == criteria.size() ? 0 : 1;
}
