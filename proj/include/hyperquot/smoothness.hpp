#pragma once

#include <string>

#include "hyperquot/profile.hpp"

namespace hq {

enum class SmoothnessStatus { smooth, unknown };

struct SmoothnessVerdict {
    SmoothnessStatus status = SmoothnessStatus::unknown;
    std::string reason;

    bool smooth() const noexcept { return status == SmoothnessStatus::smooth; }
};

/// Applies the implemented sufficient criteria for "smooth and unobstructed":
///  - all quotients zero-dimensional (s = 0), any genus and bundle;
///  - genus 0 with all line-bundle degrees within 1 of each other, any s.
/// Anything else is reported as unknown; the criteria are not necessary.
SmoothnessVerdict smoothness_status(const CurveSpec& curve, const BundleSpec& bundle, const NestingProfile& profile);

std::string to_string(SmoothnessStatus status);

} // namespace hq
