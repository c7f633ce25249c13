// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hyperquot/combinat.hpp"
#include "hyperquot/curve_motives.hpp"
#include "hyperquot/epoly.hpp"
#include "hyperquot/formulas.hpp"
#include "hyperquot/smoothness.hpp"
#include "hyperquot/verify.hpp"

using namespace hq;

namespace {

struct Outcome {
    bool passed = true;
    std::size_t cases = 0;
    std::string detail;

    void record(const CheckResult& r, const std::string& context)
    {
        ++cases;
        if (!r.passed && passed) {
            passed = false;
            detail = context + ": " + r.detail;
        }
    }
    void require(bool ok, const std::string& context)
    {
        ++cases;
        if (!ok && passed) {
            passed = false;
            detail = context;
        }
    }
};

std::string describe(int g, const BundleSpec& b, const NestingProfile& p, const Window& w)
{
    std::string out = "g=" + std::to_string(g) + " degrees=(";
    for (std::size_t i = 0; i < b.degrees.size(); ++i)
        out += (i ? "," : "") + std::to_string(b.degrees[i]);
    return out + ") " + p.to_string() + " window=" + w.to_string();
}

// Every degree tuple with entries in {-2..2}.
std::vector<Degree> degree_tuples(int r)
{
    std::vector<Degree> out;
    Degree d(static_cast<std::size_t>(r), -2);
    for (;;) {
        out.push_back(d);
        std::size_t k = 0;
        while (k < d.size() && d[k] == 2)
            d[k++] = -2;
        if (k == d.size())
            break;
        ++d[k];
    }
    return out;
}

void for_each_grid_case(const std::function<void(int, const BundleSpec&, const NestingProfile&, const Window&)>& fn)
{
    for (int g = 0; g <= 3; ++g)
        for (int r = 1; r <= 3; ++r)
            for (const auto& p : all_profiles(r, 3))
                for (const auto& d : degree_tuples(r)) {
                    BundleSpec b{d};
                    Degree hi(static_cast<std::size_t>(p.length()), 4);
                    fn(g, b, p, make_window(b, p, hi));
                }
}

Outcome oracle_equivalence()
{
    Outcome out;
    for_each_grid_case([&](int g, const BundleSpec& b, const NestingProfile& p, const Window& w) {
        out.record(check_oracle(CurveSpec{g}, b, p, w), describe(g, b, p, w));
    });
    return out;
}

Outcome genus0_closed_form_identity()
{
    Outcome out;
    for (int r = 1; r <= 4; ++r)
        for (const auto& p : all_profiles(r, 3)) {
            Window w(Degree(static_cast<std::size_t>(p.length()), 0), Degree(static_cast<std::size_t>(p.length()), 5));
            out.record(check_genus0(p, w), describe(0, BundleSpec::trivial(r), p, w));
        }
    return out;
}

Outcome projective_space_quot()
{
    Outcome out;
    NestingProfile p(2, {1});
    auto series = genus0_closed_form(2, p, Window({0}, {6}));
    for (int d = 0; d <= 6; ++d) {
        EPoly expected;
        for (int k = 0; k <= 2 * d + 1; ++k)
            expected += EPoly::lefschetz(1).pow(k);
        out.require(series.coefficient({d}) == expected, "d=" + std::to_string(d) + " got " +
                                                             series.coefficient({d}).to_string());
    }
    return out;
}

Outcome euler_specialization()
{
    Outcome out;
    for_each_grid_case([&](int g, const BundleSpec& b, const NestingProfile& p, const Window& w) {
        out.record(check_euler(CurveSpec{g}, b, p, w), describe(g, b, p, w));
    });
    return out;
}

Outcome h_identity()
{
    Outcome out;
    for (int r = 1; r <= 6; ++r)
        for (const auto& p : all_profiles(r, 3))
            out.record(check_h_identity(p), p.to_string());
    return out;
}

Outcome irreducibility()
{
    Outcome out;
    for (int r = 1; r <= 4; ++r)
        for (const auto& p : all_profiles(r, 3)) {
            Window w(Degree(static_cast<std::size_t>(p.length()), 0), Degree(static_cast<std::size_t>(p.length()), 5));
            out.record(check_b0(p, w), describe(0, BundleSpec::trivial(r), p, w));
        }
    return out;
}

// Genus 0 bundles with every degree gap at most 1, each certified Smooth.
template <typename Check>
Outcome smooth_genus0_cases(Check check)
{
    Outcome out;
    for (int r = 1; r <= 3; ++r)
        for (const auto& p : all_profiles(r, 2))
            for (int base = -1; base <= 1; ++base)
                for (int ones = 0; ones < r; ++ones) {
                    Degree d(static_cast<std::size_t>(r), base);
                    for (int k = r - ones; k < r; ++k)
                        ++d[static_cast<std::size_t>(k)];
                    BundleSpec b{d};
                    CurveSpec c{0};
                    if (!smoothness_status(c, b, p).smooth()) {
                        out.require(false, "not certified smooth: " + describe(0, b, p, Window({0}, {0})));
                        continue;
                    }
                    Window w = make_window(b, p, Degree(static_cast<std::size_t>(p.length()), 4));
                    out.record(check(c, b, p, w), describe(0, b, p, w));
                }
    return out;
}

Outcome dimension_consistency()
{
    return smooth_genus0_cases([](const CurveSpec& c, const BundleSpec& b, const NestingProfile& p, const Window& w) {
        return check_dimension(c, b, p, w);
    });
}

Outcome poincare_duality()
{
    return smooth_genus0_cases([](const CurveSpec& c, const BundleSpec& b, const NestingProfile& p, const Window& w) {
        return check_duality(c, b, p, w);
    });
}

Outcome zeta_structure()
{
    Outcome out;
    for (int g = 0; g <= 5; ++g)
        out.require(zeta_rationality_check(g, 2 * g + 10), "rationality g=" + std::to_string(g));
    for (int g = 0; g <= 3; ++g)
        out.record(check_zeta(g, 8), "g=" + std::to_string(g));
    return out;
}

Outcome specialization_anchors()
{
    Outcome out;
    EPoly p1 = EPoly::monomial(0, 0, 1) + EPoly::lefschetz(1);
    out.require(specialize_chi_y(p1) == LaurentPoly::from_terms({{0, 1}, {1, 1}}), "chi_y(P^1) = 1 + y");
    for (int g = 0; g <= 5; ++g) {
        EPoly c = curve_class(g);
        out.require(specialize_poincare(c) == LaurentPoly::from_terms({{0, 1}, {1, 2 * g}, {2, 1}}),
                    "P(C_" + std::to_string(g) + ") = " + specialize_poincare(c).to_string('z'));
        out.require(specialize_euler(c) == Integer(2 - 2 * g), "e(C_" + std::to_string(g) + ")");
    }
    return out;
}

} // namespace

int main()
{
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"oracle equivalence", oracle_equivalence},
        {"genus-0 closed form", genus0_closed_form_identity},
        {"Quot of O^2 on P^1 is P^{2d+1}", projective_space_quot},
        {"Euler specialization", euler_specialization},
        {"exponent-function identity", h_identity},
        {"irreducibility (b0 = 1)", irreducibility},
        {"dimension consistency", dimension_consistency},
        {"Poincare duality", poincare_duality},
        {"zeta structure", zeta_structure},
        {"specialization anchors", specialization_anchors},
    };
    bool all = true;
    int index = 1;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %d %s (%zu cases, %.1fs)%s%s\n", o.passed ? "PASS" : "FAIL", index, c.name, o.cases, secs,
                    o.detail.empty() ? "" : " ", o.detail.c_str());
        std::fflush(stdout);
        all = all && o.passed;
        ++index;
    }
    return all ? 0 : 1;
}
