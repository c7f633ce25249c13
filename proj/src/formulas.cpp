#include "hyperquot/formulas.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "hyperquot/combinat.hpp"
#include "hyperquot/curve_motives.hpp"
#include "hyperquot/errors.hpp"

namespace hq {

namespace {

// Degree vector of q_i...q_j (1-indexed, inclusive) among l variables.
Degree diagonal_monomial(int l, int i, int j)
{
    Degree m(static_cast<std::size_t>(l), 0);
    for (int k = i; k <= j; ++k)
        m[static_cast<std::size_t>(k - 1)] = 1;
    return m;
}

// Box [0, hi - shift], or nullopt when some coordinate is empty.
std::optional<Window> nonnegative_window(const Window& window, const Degree& shift)
{
    Degree lo(shift.size(), 0);
    Degree hi(shift.size());
    for (std::size_t i = 0; i < shift.size(); ++i) {
        hi[i] = window.hi()[i] - shift[i];
        if (hi[i] < 0)
            return std::nullopt;
    }
    return Window(std::move(lo), std::move(hi));
}

// Applies `term` to every block permutation and sums the results in
// enumeration order, so parallel and sequential runs agree exactly.
MSeries sum_over_permutations(const NestingProfile& profile, const Window& window, ComputeOptions options,
                              const std::function<MSeries(const BlockPermutation&)>& term)
{
    auto perms = enumerate_block_permutations(profile);
    MSeries total(window);
    if (!options.parallel || perms.size() < 2) {
        for (const auto& sigma : perms)
            total += term(sigma);
        return total;
    }
    std::size_t workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    workers = std::min(workers, perms.size());
    std::vector<std::optional<MSeries>> parts(perms.size());
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w)
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t k = w; k < perms.size(); k += workers)
                parts[k] = term(perms[k]);
        }));
    for (auto& job : jobs)
        job.get();
    for (const auto& part : parts)
        total += *part;
    return total;
}

void check_window_vars(const NestingProfile& profile, const Window& window)
{
    if (window.vars() != profile.length())
        throw WindowMismatch("window has " + std::to_string(window.vars()) + " variables, profile has length " +
                             std::to_string(profile.length()));
}

} // namespace

Degree default_lower_bound(const BundleSpec& bundle, const NestingProfile& profile)
{
    check_consistent(CurveSpec{}, bundle, profile);
    std::optional<Degree> lo;
    for (const auto& sigma : enumerate_block_permutations(profile)) {
        Degree p = prefactor_exponents(profile, sigma, bundle);
        if (!lo) {
            lo = p;
            continue;
        }
        for (std::size_t i = 0; i < p.size(); ++i)
            (*lo)[i] = std::min((*lo)[i], p[i]);
    }
    return *lo;
}

Window make_window(const BundleSpec& bundle, const NestingProfile& profile, const Degree& hi,
                   const std::optional<Degree>& lo)
{
    if (static_cast<int>(hi.size()) != profile.length())
        throw InvalidInput("need one upper bound per nesting level");
    if (lo) {
        if (lo->size() != hi.size())
            throw InvalidInput("need one lower bound per nesting level");
        return Window(*lo, hi);
    }
    Degree low = default_lower_bound(bundle, profile);
    for (std::size_t i = 0; i < low.size(); ++i)
        low[i] = std::min(low[i], hi[i]);
    return Window(std::move(low), hi);
}

MSeries motivic_partition_function(const CurveSpec& curve, const BundleSpec& bundle, const NestingProfile& profile,
                                   const Window& window, ComputeOptions options)
{
    check_consistent(curve, bundle, profile);
    check_window_vars(profile, window);
    const int l = profile.length();
    return sum_over_permutations(profile, window, options, [&](const BlockPermutation& sigma) {
        Degree shift = prefactor_exponents(profile, sigma, bundle);
        auto inner = nonnegative_window(window, shift);
        if (!inner)
            return MSeries(window);
        HTable h(profile, sigma, curve.genus, bundle);
        MSeries product = series_monomial(*inner, Degree(static_cast<std::size_t>(l), 0),
                                          EPoly::lefschetz(static_cast<int>(h.h2_total())));
        for (int j = 1; j <= l; ++j)
            for (int i = 1; i <= j; ++i) {
                Degree m = diagonal_monomial(l, i, j);
                for (int alpha = profile.corank(j + 1) + 1; alpha <= profile.corank(j); ++alpha)
                    product = product * zeta_eval(curve.genus, zeta_exponent(profile, h, i, j, alpha), m, *inner);
            }
        return product.shifted(shift, window);
    });
}

MSeries genus0_closed_form(int r, const NestingProfile& profile, const Window& window)
{
    if (r != profile.rank())
        throw InvalidInput("rank differs from profile rank");
    check_window_vars(profile, window);
    const int l = profile.length();
    auto inner = nonnegative_window(window, Degree(static_cast<std::size_t>(l), 0));
    if (!inner)
        return MSeries(window);
    MSeries product = series_monomial(*inner, Degree(static_cast<std::size_t>(l), 0), flag_motive(profile));
    for (int j = 1; j <= l; ++j)
        for (int i = 1; i <= j; ++i) {
            Degree m = diagonal_monomial(l, i, j);
            for (int alpha = profile.corank(j + 1) + 1; alpha <= profile.corank(j); ++alpha) {
                product = product * geometric_inverse(*inner, EPoly::lefschetz(profile.corank(i) - alpha), m);
                product = product * geometric_inverse(*inner, EPoly::lefschetz(profile.corank(i - 1) - alpha + 1), m);
            }
        }
    return product.shifted(Degree(static_cast<std::size_t>(l), 0), window);
}

MSeries euler_partition_function(const CurveSpec& curve, const BundleSpec& bundle, const NestingProfile& profile,
                                 const Window& window, ComputeOptions options)
{
    check_consistent(curve, bundle, profile);
    check_window_vars(profile, window);
    const int l = profile.length();
    Degree lowest = default_lower_bound(bundle, profile);
    auto inner = nonnegative_window(window, lowest);
    if (!inner)
        return MSeries(window);

    const Degree origin(static_cast<std::size_t>(l), 0);
    MSeries factor = series_monomial(*inner, origin, EPoly(1));
    for (int j = 1; j <= l; ++j) {
        const int exponent = (2 * curve.genus - 2) * profile.block_size(j);
        if (exponent == 0)
            continue;
        for (int i = 1; i <= j; ++i) {
            Degree m = diagonal_monomial(l, i, j);
            if (exponent < 0) {
                MSeries inverse = geometric_inverse(*inner, EPoly(1), m);
                for (int k = 0; k < -exponent; ++k)
                    factor = factor * inverse;
            } else {
                MSeries linear = series_monomial(*inner, origin, EPoly(1)) + series_monomial(*inner, m, EPoly(-1));
                for (int k = 0; k < exponent; ++k)
                    factor = factor * linear;
            }
        }
    }
    return sum_over_permutations(profile, window, options, [&](const BlockPermutation& sigma) {
        return factor.shifted(prefactor_exponents(profile, sigma, bundle), window);
    });
}

MSeries unnested_partition_function(const CurveSpec& curve, const BundleSpec& bundle, int s, const Window& window,
                                    ComputeOptions options)
{
    return motivic_partition_function(curve, bundle, NestingProfile(bundle.rank(), {s}), window, options);
}

SpecializedSeries::SpecializedSeries(Window window) : window_(std::move(window)), coeffs_(window_.cell_count()) {}

const LaurentPoly& SpecializedSeries::coefficient(const Degree& d) const
{
    if (!window_.contains(d))
        throw OutOfWindow("degree outside window " + window_.to_string());
    return coeffs_[window_.index_of(d)];
}

void SpecializedSeries::set(const Degree& d, LaurentPoly value)
{
    if (!window_.contains(d))
        throw OutOfWindow("degree outside window " + window_.to_string());
    coeffs_[window_.index_of(d)] = std::move(value);
}

bool SpecializedSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

void SpecializedSeries::for_each_term(const std::function<void(const Degree&, const LaurentPoly&)>& fn) const
{
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero())
            fn(window_.degree_at(k), coeffs_[k]);
}

SpecializedSeries specialize_series(const MSeries& series, Specialization target)
{
    SpecializedSeries out(series.window());
    series.for_each_term([&](const Degree& d, const EPoly& c) { out.set(d, specialize(c, target)); });
    return out;
}

SpecializedSeries poincare_series(const MSeries& series)
{
    return specialize_series(series, Specialization::poincare);
}

} // namespace hq
