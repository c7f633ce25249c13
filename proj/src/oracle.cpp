#include "hyperquot/oracle.hpp"

#include <map>

#include "hyperquot/curve_motives.hpp"
#include "hyperquot/errors.hpp"

namespace hq {

namespace {

struct Enumerator {
    const NestingProfile& profile;
    const BlockPermutation& sigma;
    const Window& window;
    Degree base;   // q-degree contributed by the surviving line bundles
    Degree budget; // hi_j - base_j - sum of n_{j, alpha} chosen so far
    std::vector<std::vector<int>> tuples;
    std::vector<FixedComponent>& out;

    void visit_alpha(int alpha)
    {
        if (alpha > profile.corank(1)) {
            Degree d(base.size());
            for (std::size_t j = 0; j < d.size(); ++j)
                d[j] = window.hi()[j] - budget[j];
            if (window.contains(d))
                out.push_back(FixedComponent{profile, sigma, tuples, std::move(d)});
            return;
        }
        visit_entry(alpha, 1, 0);
    }

    // choose n_{i, alpha} >= floor (nondecreasing along i)
    void visit_entry(int alpha, int i, int floor)
    {
        auto& tuple = tuples[static_cast<std::size_t>(alpha - 1)];
        if (i > static_cast<int>(tuple.size())) {
            visit_alpha(alpha + 1);
            return;
        }
        auto& room = budget[static_cast<std::size_t>(i - 1)];
        for (int value = floor; value <= room; ++value) {
            tuple[static_cast<std::size_t>(i - 1)] = value;
            room -= value;
            visit_entry(alpha, i + 1, value);
            room += value;
        }
    }
};

} // namespace

std::vector<FixedComponent> enumerate_fixed_components(const BlockPermutation& sigma, const BundleSpec& bundle,
                                                       const NestingProfile& profile, const Window& window)
{
    check_consistent(CurveSpec{}, bundle, profile);
    const int l = profile.length();
    if (window.vars() != l)
        throw WindowMismatch("window and profile length differ");

    Degree base(static_cast<std::size_t>(l), 0);
    for (int j = 1; j <= l; ++j)
        for (int alpha = profile.corank(j) + 1; alpha <= profile.rank(); ++alpha)
            base[static_cast<std::size_t>(j - 1)] += bundle.degree(sigma(alpha));

    std::vector<FixedComponent> out;
    Degree budget(base.size());
    for (std::size_t j = 0; j < base.size(); ++j) {
        budget[j] = window.hi()[j] - base[j];
        if (budget[j] < 0)
            return out;
    }
    std::vector<std::vector<int>> tuples;
    for (int alpha = 1; alpha <= profile.corank(1); ++alpha)
        tuples.emplace_back(static_cast<std::size_t>(profile.block_of(alpha)), 0);

    Enumerator walk{profile, sigma, window, base, budget, std::move(tuples), out};
    walk.visit_alpha(1);
    return out;
}

namespace {

long long stratum_dimension(const FixedComponent& comp, const HTable& h)
{
    const auto& profile = comp.profile;
    long long dim = 0;
    for (int i = 1; i <= profile.length(); ++i) {
        for (int alpha = 1; alpha <= profile.corank(i); ++alpha)
            dim += static_cast<long long>(comp.n(i, alpha)) * h.h1(i, alpha);
        dim += h.h2(i);
    }
    return dim;
}

} // namespace

long long bb_stratum_dimension(const FixedComponent& comp, int genus, const BundleSpec& bundle)
{
    return stratum_dimension(comp, HTable(comp.profile, comp.sigma, genus, bundle));
}

MSeries oracle_partition_function(const CurveSpec& curve, const BundleSpec& bundle, const NestingProfile& profile,
                                  const Window& window)
{
    check_consistent(curve, bundle, profile);
    MSeries total(window);
    // the same nested tuples recur across components and permutations
    std::map<std::vector<int>, EPoly> classes;
    auto class_of = [&](const std::vector<int>& tuple) -> const EPoly& {
        auto it = classes.find(tuple);
        if (it == classes.end())
            it = classes.emplace(tuple, nested_hilb_class(curve.genus, tuple)).first;
        return it->second;
    };
    for (const auto& sigma : enumerate_block_permutations(profile)) {
        const HTable h(profile, sigma, curve.genus, bundle);
        for (const auto& comp : enumerate_fixed_components(sigma, bundle, profile, window)) {
            EPoly cls(1);
            for (const auto& tuple : comp.tuples)
                cls *= class_of(tuple);
            cls *= EPoly::lefschetz(static_cast<int>(stratum_dimension(comp, h)));
            total.add_term(comp.degree, cls);
        }
    }
    return total;
}

} // namespace hq
