#include "hyperquot/verify.hpp"

#include <algorithm>
#include <sstream>

#include "hyperquot/curve_motives.hpp"
#include "hyperquot/formulas.hpp"
#include "hyperquot/oracle.hpp"

namespace hq {

namespace {

std::string context(const CurveSpec& curve, const BundleSpec& bundle, const NestingProfile& profile,
                    const Window& window)
{
    std::ostringstream os;
    os << "g=" << curve.genus << " degrees=(";
    for (std::size_t i = 0; i < bundle.degrees.size(); ++i)
        os << (i ? "," : "") << bundle.degrees[i];
    os << ") " << profile.to_string() << " window=" << window.to_string();
    return os.str();
}

std::string degree_string(const Degree& d)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < d.size(); ++i)
        os << (i ? "," : "") << d[i];
    os << ")";
    return os.str();
}

// Coefficientwise comparison over the whole window.
CheckResult compare(const MSeries& lhs, const MSeries& rhs, const std::string& lhs_name, const std::string& rhs_name,
                    const std::string& where)
{
    CheckResult result;
    for (std::size_t k = 0; k < lhs.window().cell_count(); ++k) {
        Degree d = lhs.window().degree_at(k);
        const EPoly& a = lhs.coefficient(d);
        const EPoly& b = rhs.coefficient(d);
        ++result.checked;
        if (!(a == b))
            return CheckResult::failure(where + " at d=" + degree_string(d) + ": " + lhs_name + " = " + a.to_string() +
                                            ", " + rhs_name + " = " + b.to_string(),
                                        result.checked);
    }
    return result;
}

} // namespace

CheckResult check_oracle(const CurveSpec& curve, const BundleSpec& bundle, const NestingProfile& profile,
                         const Window& window)
{
    return compare(motivic_partition_function(curve, bundle, profile, window),
                   oracle_partition_function(curve, bundle, profile, window), "formula", "oracle",
                   context(curve, bundle, profile, window));
}

CheckResult check_genus0(const NestingProfile& profile, const Window& window)
{
    const auto bundle = BundleSpec::trivial(profile.rank());
    return compare(motivic_partition_function(CurveSpec{0}, bundle, profile, window),
                   genus0_closed_form(profile.rank(), profile, window), "general formula", "genus-0 product",
                   context(CurveSpec{0}, bundle, profile, window));
}

CheckResult check_euler(const CurveSpec& curve, const BundleSpec& bundle, const NestingProfile& profile,
                        const Window& window)
{
    auto motivic = motivic_partition_function(curve, bundle, profile, window);
    auto specialized = motivic.map([](const EPoly& c) { return EPoly(specialize_euler(c)); });
    return compare(specialized, euler_partition_function(curve, bundle, profile, window), "e(motivic)",
                   "euler formula", context(curve, bundle, profile, window));
}

CheckResult check_h_identity(const NestingProfile& profile)
{
    if (!h_identity_check(profile))
        return CheckResult::failure("h-identity fails for " + profile.to_string(), 1);
    return {true, 1, {}};
}

namespace {

CheckResult check_coefficients(const CurveSpec& curve, const BundleSpec& bundle, const NestingProfile& profile,
                               const Window& window, bool palindromes)
{
    CheckResult result;
    const auto where = context(curve, bundle, profile, window);
    auto series = motivic_partition_function(curve, bundle, profile, window);
    series.for_each_term([&](const Degree& d, const EPoly& c) {
        if (!result.passed)
            return;
        ++result.checked;
        long long vd = virtual_dimension(profile, d, curve.genus, bundle.total_degree());
        if (!c.has_nonnegative_exponents()) {
            result = CheckResult::failure(where + " at d=" + degree_string(d) + ": negative exponent in " +
                                              c.to_string(),
                                          result.checked);
        } else if (*c.total_degree() != vd) {
            result = CheckResult::failure(where + " at d=" + degree_string(d) + ": total degree " +
                                              std::to_string(*c.total_degree()) + " != virtual dimension " +
                                              std::to_string(vd),
                                          result.checked);
        } else if (palindromes && !c.is_palindromic(static_cast<int>(vd))) {
            result = CheckResult::failure(where + " at d=" + degree_string(d) + ": " + c.to_string() +
                                              " is not palindromic of degree " + std::to_string(vd),
                                          result.checked);
        }
    });
    return result;
}

} // namespace

CheckResult check_duality(const CurveSpec& curve, const BundleSpec& bundle, const NestingProfile& profile,
                          const Window& window)
{
    return check_coefficients(curve, bundle, profile, window, true);
}

CheckResult check_dimension(const CurveSpec& curve, const BundleSpec& bundle, const NestingProfile& profile,
                            const Window& window)
{
    return check_coefficients(curve, bundle, profile, window, false);
}

CheckResult check_zeta(int genus, int order)
{
    CheckResult result;
    const std::string where = "g=" + std::to_string(genus) + " N=" + std::to_string(order);
    ++result.checked;
    if (!zeta_rationality_check(genus, order))
        return CheckResult::failure(where + ": zeta numerator has degree > 2g", result.checked);

    // (1 + zt)^{2g} / ((1 - t)(1 - z^2 t)), expanded directly
    auto zeta = zeta_series(genus, order);
    for (int n = 0; n <= order; ++n) {
        std::vector<std::pair<int, Integer>> expected;
        Integer binom = 1;
        for (int k = 0; k <= std::min(n, 2 * genus); ++k) {
            for (int i = 0; i <= n - k; ++i)
                expected.emplace_back(k + 2 * i, binom);
            binom = binom * (2 * genus - k) / (k + 1);
        }
        ++result.checked;
        auto poincare = specialize_poincare(zeta[n]);
        if (!(poincare == LaurentPoly::from_terms(std::move(expected))))
            return CheckResult::failure(where + ": Poincare polynomial of Sym^" + std::to_string(n) +
                                            " C is " + poincare.to_string(),
                                        result.checked);
        // e(Sym^n C) = [t^n] (1 - t)^{2g - 2}
        Integer euler = 0;
        {
            // coefficient of t^n in (1-t)^{m}, m = 2g-2 (possibly negative)
            const int m = 2 * genus - 2;
            Integer c = 1;
            for (int k = 1; k <= n; ++k)
                c = c * (m - k + 1) * -1 / k;
            euler = c;
        }
        if (specialize_euler(zeta[n]) != euler)
            return CheckResult::failure(where + ": Euler characteristic of Sym^" + std::to_string(n) + " C is " +
                                            specialize_euler(zeta[n]).str() + ", expected " + euler.str(),
                                        result.checked);
    }
    return result;
}

CheckResult check_b0(const NestingProfile& profile, const Window& window)
{
    CheckResult result;
    const auto where = context(CurveSpec{0}, BundleSpec::trivial(profile.rank()), profile, window);
    bool all_blocks = true;
    for (int j = 0; j <= profile.length(); ++j)
        all_blocks = all_blocks && profile.block_size(j) > 0;

    auto poincare = poincare_series(genus0_closed_form(profile.rank(), profile, window));
    for (std::size_t k = 0; k < window.cell_count(); ++k) {
        Degree d = window.degree_at(k);
        const auto& p = poincare.coefficient(d);
        bool nonnegative = std::all_of(d.begin(), d.end(), [](int v) { return v >= 0; });
        if (p.is_zero()) {
            if (all_blocks && nonnegative)
                return CheckResult::failure(where + ": empty moduli space at d=" + degree_string(d), result.checked);
            continue;
        }
        ++result.checked;
        if (p.coefficient(0) != 1)
            return CheckResult::failure(where + ": b0 = " + p.coefficient(0).str() + " at d=" + degree_string(d),
                                        result.checked);
    }
    return result;
}

} // namespace hq
