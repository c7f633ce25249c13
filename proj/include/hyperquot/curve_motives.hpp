#pragma once

// Kapranov motivic zeta function of a genus-g curve in the E-polynomial
// realization: zeta_C(t) = (1 - ut)^g (1 - vt)^g / ((1 - t)(1 - uv t)).

#include <memory>
#include <vector>

#include "hyperquot/epoly.hpp"
#include "hyperquot/qseries.hpp"

namespace hq {

/// Classes c_n = [Sym^n C] for n = 0..order.
class ZetaSeries {
public:
    ZetaSeries(int genus, std::shared_ptr<const std::vector<EPoly>> coefficients, int order)
        : genus_(genus), order_(order), coefficients_(std::move(coefficients))
    {
    }

    int genus() const noexcept { return genus_; }
    int order() const noexcept { return order_; }
    /// [Sym^n C], 0 <= n <= order
    const EPoly& operator[](int n) const { return coefficients_->at(static_cast<std::size_t>(n)); }

private:
    int genus_;
    int order_;
    std::shared_ptr<const std::vector<EPoly>> coefficients_;
};

/// Memoized per genus; safe to call concurrently. Throws InvalidRange on g < 0 or N < 0.
ZetaSeries zeta_series(int genus, int order);

/// True iff (1 - t)(1 - uv t) zeta_C(t) vanishes in degrees 2g+1..N.
/// Throws InvalidRange if N < 2g + 2.
bool zeta_rationality_check(int genus, int order);

/// The E-class of C: 1 - g u - g v + uv.
EPoly curve_class(int genus);

/// prod_i [Sym^{n_i - n_{i-1}} C], n_0 = 0. Throws InvalidTuple unless 0 <= n_1 <= ... <= n_k.
EPoly nested_hilb_class(int genus, const std::vector<int>& n);

/// sum_{n >= 0} [Sym^n C] L^{a n} q^{n m}, truncated to the window.
/// Throws InvalidMonomial unless m >= 0 and m != 0.
MSeries zeta_eval(int genus, int a, const Degree& m, const Window& window);

} // namespace hq
