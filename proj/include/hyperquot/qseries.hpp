#pragma once

// Multivariate Laurent series in q_1..q_l with EPoly coefficients, truncated
// to a box of degree vectors.

#include <functional>
#include <string>
#include <vector>

#include "hyperquot/epoly.hpp"

namespace hq {

/// Box of degree vectors: lo_i <= d_i <= hi_i for every coordinate.
class Window {
public:
    /// Throws InvalidRange if lengths differ, are zero, or lo_i > hi_i.
    Window(Degree lo, Degree hi);
    /// Same bounds in every one of `vars` coordinates.
    static Window uniform(int vars, int lo, int hi);

    int vars() const noexcept { return static_cast<int>(lo_.size()); }
    const Degree& lo() const noexcept { return lo_; }
    const Degree& hi() const noexcept { return hi_; }

    bool contains(const Degree& d) const;
    bool contains(const Window& inner) const;
    std::size_t cell_count() const noexcept { return cells_; }

    /// Dense row-major index of an in-window degree.
    std::size_t index_of(const Degree& d) const;
    Degree degree_at(std::size_t index) const;

    /// Calls fn for every degree vector in the box, lexicographic order.
    void for_each(const std::function<void(const Degree&)>& fn) const;

    std::string to_string() const;

    friend bool operator==(const Window& a, const Window& b) { return a.lo_ == b.lo_ && a.hi_ == b.hi_; }

private:
    Degree lo_;
    Degree hi_;
    std::vector<std::size_t> strides_;
    std::size_t cells_ = 0;
};

class MSeries {
public:
    /// The zero series in `window`.
    explicit MSeries(Window window);

    const Window& window() const noexcept { return window_; }

    /// Throws OutOfWindow if d is outside the window.
    const EPoly& coefficient(const Degree& d) const;
    /// Adds c to the coefficient at d. Ignored when d is outside the window.
    void add_term(const Degree& d, const EPoly& c);

    bool is_zero() const;
    std::size_t term_count() const;
    /// Nonzero terms in lexicographic order of d.
    void for_each_term(const std::function<void(const Degree&, const EPoly&)>& fn) const;

    MSeries& operator+=(const MSeries& other);
    friend MSeries operator+(MSeries a, const MSeries& b) { return a += b; }
    /// Truncated convolution. Throws WindowMismatch.
    friend MSeries operator*(const MSeries& a, const MSeries& b);
    friend MSeries operator-(MSeries a);

    /// Coefficients of this series restricted to a sub-box. Throws WindowMismatch
    /// if `inner` is not contained in the current window.
    MSeries restrict_to(const Window& inner) const;
    /// q^shift * this, re-windowed into `target` (terms landing outside are dropped).
    MSeries shifted(const Degree& shift, const Window& target) const;
    /// Coefficientwise image under fn (zeros are dropped).
    MSeries map(const std::function<EPoly(const EPoly&)>& fn) const;

    friend bool operator==(const MSeries& a, const MSeries& b);

    std::string to_string() const;

private:
    Window window_;
    std::vector<EPoly> coeffs_; // dense over the window box
};

/// c * q^d, or the zero series if d lies outside the window.
MSeries series_monomial(const Window& window, const Degree& d, const EPoly& c);
/// sum_{k >= 0} c^k q^{k m}, truncated. Throws InvalidMonomial unless m >= 0 and m != 0.
MSeries geometric_inverse(const Window& window, const EPoly& c, const Degree& m);
/// Throws InvalidMonomial unless m >= 0 componentwise with a positive entry.
void check_monomial(const Degree& m);

} // namespace hq
