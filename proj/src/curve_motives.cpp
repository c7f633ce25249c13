#include "hyperquot/curve_motives.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "hyperquot/errors.hpp"

namespace hq {

namespace {

// Coefficients of (1 - ut)^g (1 - vt)^g, degrees 0..2g.
std::vector<EPoly> zeta_numerator(int genus)
{
    EPoly one_minus_ut = EPoly(1) - EPoly::monomial(1, 0);
    EPoly one_minus_vt = EPoly(1) - EPoly::monomial(0, 1);
    // polynomial in t with EPoly coefficients, built factor by factor
    std::vector<EPoly> poly{EPoly(1)};
    auto mul_linear = [&](const EPoly& slope) {
        std::vector<EPoly> next(poly.size() + 1);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k] += poly[k];
            next[k + 1] -= poly[k] * slope;
        }
        poly = std::move(next);
    };
    for (int i = 0; i < genus; ++i) {
        mul_linear(EPoly::monomial(1, 0));
        mul_linear(EPoly::monomial(0, 1));
    }
    return poly;
}

std::vector<EPoly> compute_zeta(int genus, int order)
{
    auto numerator = zeta_numerator(genus);
    // b_n = 1 + L + ... + L^n, the coefficients of 1/((1-t)(1-Lt))
    std::vector<EPoly> b(static_cast<std::size_t>(order) + 1);
    EPoly partial;
    for (int n = 0; n <= order; ++n) {
        partial += EPoly::lefschetz(n);
        b[static_cast<std::size_t>(n)] = partial;
    }
    std::vector<EPoly> c(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n)
        for (int k = 0; k <= std::min<int>(n, static_cast<int>(numerator.size()) - 1); ++k)
            c[static_cast<std::size_t>(n)].add_product(numerator[static_cast<std::size_t>(k)],
                                                       b[static_cast<std::size_t>(n - k)]);
    return c;
}

struct ZetaCache {
    std::shared_mutex mutex;
    std::map<int, std::shared_ptr<const std::vector<EPoly>>> by_genus;
};

ZetaCache& cache()
{
    static ZetaCache instance;
    return instance;
}

} // namespace

ZetaSeries zeta_series(int genus, int order)
{
    if (genus < 0 || order < 0)
        throw InvalidRange("zeta series needs genus >= 0 and order >= 0");
    auto& c = cache();
    {
        std::shared_lock lock(c.mutex);
        auto it = c.by_genus.find(genus);
        if (it != c.by_genus.end() && static_cast<int>(it->second->size()) > order)
            return ZetaSeries(genus, it->second, order);
    }
    std::unique_lock lock(c.mutex);
    auto& slot = c.by_genus[genus];
    if (!slot || static_cast<int>(slot->size()) <= order) {
        // grow geometrically so repeated small extensions stay cheap
        int current = slot ? static_cast<int>(slot->size()) - 1 : 0;
        int target = std::max(order, 2 * current);
        slot = std::make_shared<const std::vector<EPoly>>(compute_zeta(genus, target));
    }
    return ZetaSeries(genus, slot, order);
}

bool zeta_rationality_check(int genus, int order)
{
    if (order < 2 * genus + 2)
        throw InvalidRange("rationality check needs N >= 2g + 2");
    auto zeta = zeta_series(genus, order);
    const EPoly L = EPoly::lefschetz(1);
    const EPoly trace = EPoly(1) + L; // (1 - t)(1 - Lt) = 1 - (1 + L) t + L t^2
    for (int n = 2 * genus + 1; n <= order; ++n) {
        EPoly value = zeta[n];
        value -= trace * zeta[n - 1];
        if (n >= 2)
            value.add_product(L, zeta[n - 2]);
        if (!value.is_zero())
            return false;
    }
    return true;
}

EPoly curve_class(int genus)
{
    return EPoly::from_terms({{0, 0, 1}, {1, 0, -genus}, {0, 1, -genus}, {1, 1, 1}});
}

EPoly nested_hilb_class(int genus, const std::vector<int>& n)
{
    int top = n.empty() ? 0 : n.back();
    int previous = 0;
    for (int v : n) {
        if (v < previous)
            throw InvalidTuple("nested tuple must be nonnegative and nondecreasing");
        previous = v;
    }
    auto zeta = zeta_series(genus, top);
    EPoly out(1);
    previous = 0;
    for (int v : n) {
        out *= zeta[v - previous];
        previous = v;
    }
    return out;
}

MSeries zeta_eval(int genus, int a, const Degree& m, const Window& window)
{
    check_monomial(m);
    if (static_cast<int>(m.size()) != window.vars())
        throw WindowMismatch("monomial and window have different numbers of variables");
    int order = 0;
    while (true) {
        bool beyond = false;
        for (std::size_t i = 0; i < m.size(); ++i)
            beyond = beyond || (order + 1) * m[i] > window.hi()[i];
        if (beyond)
            break;
        ++order;
    }
    auto zeta = zeta_series(genus, order);
    MSeries out(window);
    Degree d(m.size());
    for (int n = 0; n <= order; ++n) {
        for (std::size_t i = 0; i < m.size(); ++i)
            d[i] = n * m[i];
        if (window.contains(d))
            out.add_term(d, zeta[n] * EPoly::lefschetz(a * n));
    }
    return out;
}

} // namespace hq
