#pragma once

// Cross-checks between independent routes to the same series. Each check
// reports the first discrepancy it finds with enough context to reproduce it.

#include <cstddef>
#include <string>

#include "hyperquot/profile.hpp"
#include "hyperquot/qseries.hpp"

namespace hq {

struct CheckResult {
    bool passed = true;
    std::size_t checked = 0; ///< number of coefficients / cases compared
    std::string detail;      ///< first discrepancy, empty on success

    static CheckResult failure(std::string detail, std::size_t checked = 0) { return {false, checked, std::move(detail)}; }
};

/// Closed formula vs fixed-point enumeration, coefficient by coefficient.
CheckResult check_oracle(const CurveSpec& curve, const BundleSpec& bundle, const NestingProfile& profile,
                         const Window& window);
/// General formula on (P^1, O^r) vs the genus-0 product formula.
CheckResult check_genus0(const NestingProfile& profile, const Window& window);
/// Euler specialization of the motivic series vs the Euler-characteristic formula.
CheckResult check_euler(const CurveSpec& curve, const BundleSpec& bundle, const NestingProfile& profile,
                        const Window& window);
/// Brute-force check of the h_1 / h_0 summation identity.
CheckResult check_h_identity(const NestingProfile& profile);
/// Nonzero coefficients have nonnegative exponents, total degree equal to the
/// virtual dimension and satisfy E(u,v) = (uv)^D E(1/u, 1/v).
CheckResult check_duality(const CurveSpec& curve, const BundleSpec& bundle, const NestingProfile& profile,
                          const Window& window);
/// Only the dimension part of check_duality.
CheckResult check_dimension(const CurveSpec& curve, const BundleSpec& bundle, const NestingProfile& profile,
                            const Window& window);
/// Zeta numerator degree, Macdonald's formula for the Poincare polynomials of
/// Sym^n C, and the Euler characteristics of Sym^n C, for n <= order.
CheckResult check_zeta(int genus, int order);
/// b_0 = 1 for every nonzero coefficient of the genus-0 product formula; when
/// every corank block is nonempty, also every d >= 0 in the window is nonzero.
CheckResult check_b0(const NestingProfile& profile, const Window& window);

} // namespace hq
