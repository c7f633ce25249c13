#pragma once

// Closed-form generating functions of hyperquot schemes on curves.
//
// None of these check smoothness: the series are well defined formally for any
// input, and equal the motive of the moduli space when it is smooth and
// unobstructed (see smoothness.hpp).

#include <functional>
#include <optional>
#include <vector>

#include "hyperquot/epoly.hpp"
#include "hyperquot/profile.hpp"
#include "hyperquot/qseries.hpp"

namespace hq {

struct ComputeOptions {
    /// Evaluate the outer sum over block permutations on worker threads.
    /// The result is identical to the sequential one.
    bool parallel = false;
};

/// Componentwise minimum over block permutations of the q-degree prefactor.
Degree default_lower_bound(const BundleSpec& bundle, const NestingProfile& profile);

/// Window with the given upper bounds; the lower bounds default to
/// default_lower_bound, clamped so that lo <= hi.
Window make_window(const BundleSpec& bundle, const NestingProfile& profile, const Degree& hi,
                   const std::optional<Degree>& lo = std::nullopt);

/// Sum over block permutations of L^{h_2} q^{prefactor} times the product of
/// zeta_C(L^{h_0(i,a) + r_i - r_j + a - r_{j+1} - 1} q_i...q_j).
MSeries motivic_partition_function(const CurveSpec& curve, const BundleSpec& bundle, const NestingProfile& profile,
                                   const Window& window, ComputeOptions options = {});

/// Genus-0 product formula for the trivial bundle of rank r:
/// [Flag(s, r)] prod 1/((1 - L^{r_i - a} q_i...q_j)(1 - L^{r_{i-1} - a + 1} q_i...q_j)).
MSeries genus0_closed_form(int r, const NestingProfile& profile, const Window& window);

/// Generating series of topological Euler characteristics (valid without
/// smoothness). Coefficients are constant EPolys.
MSeries euler_partition_function(const CurveSpec& curve, const BundleSpec& bundle, const NestingProfile& profile,
                                 const Window& window, ComputeOptions options = {});

/// The l = 1 case of motivic_partition_function with quotient rank s.
MSeries unnested_partition_function(const CurveSpec& curve, const BundleSpec& bundle, int s, const Window& window,
                                    ComputeOptions options = {});

/// A series whose coefficients are univariate Laurent polynomials.
class SpecializedSeries {
public:
    explicit SpecializedSeries(Window window);

    const Window& window() const noexcept { return window_; }
    /// Throws OutOfWindow.
    const LaurentPoly& coefficient(const Degree& d) const;
    void set(const Degree& d, LaurentPoly value);
    bool is_zero() const;
    void for_each_term(const std::function<void(const Degree&, const LaurentPoly&)>& fn) const;

    friend bool operator==(const SpecializedSeries&, const SpecializedSeries&) = default;

private:
    Window window_;
    std::vector<LaurentPoly> coeffs_;
};

/// Coefficientwise specialization. Throws NegativeExponent for poincare/chi_y
/// when a coefficient has negative exponents.
SpecializedSeries specialize_series(const MSeries& series, Specialization target);

/// Coefficientwise Poincare polynomial; the z^0 coefficient of each entry is b_0.
SpecializedSeries poincare_series(const MSeries& series);

} // namespace hq
