#include "hyperquot/smoothness.hpp"

#include <algorithm>

namespace hq {

SmoothnessVerdict smoothness_status(const CurveSpec& curve, const BundleSpec& bundle, const NestingProfile& profile)
{
    check_consistent(curve, bundle, profile);
    auto s = profile.s_values();
    if (std::all_of(s.begin(), s.end(), [](int v) { return v == 0; }))
        return {SmoothnessStatus::smooth, "zero-dimensional quotients"};

    auto [lo, hi] = std::minmax_element(bundle.degrees.begin(), bundle.degrees.end());
    const int gap = *hi - *lo;
    if (curve.genus == 0 && gap <= 1)
        return {SmoothnessStatus::smooth, "genus-0 degree gap ⩽ 1"};

    if (curve.genus == 0)
        return {SmoothnessStatus::unknown,
                "genus 0 with degree gap " + std::to_string(gap) + " > 1; no sufficient criterion applies"};
    if (curve.genus == 1 && profile.length() == 1)
        return {SmoothnessStatus::unknown,
                "genus 1: the unnested criterion depends on the line bundles themselves, not only their degrees"};
    return {SmoothnessStatus::unknown, "no sufficient criterion applies"};
}

std::string to_string(SmoothnessStatus status)
{
    return status == SmoothnessStatus::smooth ? "Smooth" : "Unknown";
}

} // namespace hq
