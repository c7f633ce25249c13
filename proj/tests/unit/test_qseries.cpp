#include <random>

#include <gtest/gtest.h>

#include "hyperquot/errors.hpp"
#include "hyperquot/qseries.hpp"

using namespace hq;

namespace {

EPoly L(int k = 1) { return EPoly::lefschetz(k); }

MSeries random_series(std::mt19937& rng, const Window& w)
{
    std::uniform_int_distribution<int> coef(-3, 3), exp(0, 2);
    MSeries s(w);
    w.for_each([&](const Degree& d) {
        int c = coef(rng);
        if (c != 0)
            s.add_term(d, EPoly::monomial(exp(rng), exp(rng), c));
    });
    return s;
}

} // namespace

TEST(Window, IndexRoundTrip)
{
    Window w({-1, 0, 2}, {1, 3, 2});
    EXPECT_EQ(w.cell_count(), 3u * 4u * 1u);
    for (std::size_t k = 0; k < w.cell_count(); ++k)
        EXPECT_EQ(w.index_of(w.degree_at(k)), k);
    EXPECT_TRUE(w.contains(Degree{0, 3, 2}));
    EXPECT_FALSE(w.contains(Degree{0, 4, 2}));
    EXPECT_TRUE(w.contains(Window({0, 1, 2}, {1, 2, 2})));
    EXPECT_EQ(Window::uniform(2, 0, 3), Window({0, 0}, {3, 3}));
}

TEST(Window, LexicographicTraversal)
{
    std::vector<Degree> seen;
    Window({0, 0}, {1, 1}).for_each([&](const Degree& d) { seen.push_back(d); });
    EXPECT_EQ(seen, (std::vector<Degree>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
}

TEST(MSeries, Monomials)
{
    EXPECT_EQ(series_monomial(Window({0}, {3}), {0}, 1).coefficient({0}), EPoly(1));
    auto s = series_monomial(Window({-2}, {2}), {-1}, L());
    EXPECT_EQ(s.coefficient({-1}), L());
    EXPECT_EQ(s.term_count(), 1u);
    EXPECT_TRUE(series_monomial(Window({0}, {2}), {5}, 1).is_zero());
}

TEST(MSeries, Products)
{
    Window w({0}, {4});
    auto one_plus_q = series_monomial(w, {0}, 1) + series_monomial(w, {1}, 1);
    auto one_minus_q = series_monomial(w, {0}, 1) + series_monomial(w, {1}, -1);
    auto expected = series_monomial(w, {0}, 1) + series_monomial(w, {2}, -1);
    EXPECT_EQ(one_plus_q * one_minus_q, expected);
    EXPECT_EQ(one_plus_q * series_monomial(w, {0}, 1), one_plus_q);

    Window w6({0}, {6});
    MSeries all(w6);
    for (int n = 0; n <= 6; ++n)
        all.add_term({n}, 1);
    auto telescoped = all * (series_monomial(w6, {0}, 1) + series_monomial(w6, {1}, -1));
    EXPECT_EQ(telescoped, series_monomial(w6, {0}, 1));
}

TEST(MSeries, GeometricInverse)
{
    auto g = geometric_inverse(Window({0}, {2}), L(), {1});
    EXPECT_EQ(g, series_monomial(Window({0}, {2}), {0}, 1) + series_monomial(Window({0}, {2}), {1}, L()) +
                     series_monomial(Window({0}, {2}), {2}, L(2)));

    Window w2({0, 0}, {2, 2});
    auto diag = geometric_inverse(w2, 1, {1, 1});
    EXPECT_EQ(diag.term_count(), 3u);
    EXPECT_EQ(diag.coefficient({2, 2}), EPoly(1));
    EXPECT_TRUE(diag.coefficient({1, 2}).is_zero());

    EXPECT_THROW(geometric_inverse(Window({0}, {2}), 1, {0}), InvalidMonomial);
    EXPECT_THROW(geometric_inverse(Window({0}, {2}), 1, {-1}), InvalidMonomial);

    Window w3({0, 0, 0}, {3, 2, 4});
    for (const Degree& m : {Degree{1, 0, 0}, Degree{0, 1, 1}, Degree{1, 1, 1}, Degree{2, 0, 1}}) {
        EPoly c = EPoly(1) + EPoly::monomial(1, 0);
        auto inv = geometric_inverse(w3, c, m);
        auto factor = series_monomial(w3, {0, 0, 0}, 1) + series_monomial(w3, m, -c);
        EXPECT_EQ(inv * factor, series_monomial(w3, {0, 0, 0}, 1));
    }
}

TEST(MSeries, CoefficientLookup)
{
    Window w({0}, {4});
    auto s = series_monomial(w, {0}, 1) + series_monomial(w, {2}, -1);
    EXPECT_EQ(s.coefficient({2}), EPoly(-1));
    EXPECT_TRUE(s.coefficient({1}).is_zero());
    EXPECT_THROW(s.coefficient({5}), OutOfWindow);
    EXPECT_THROW(s.coefficient({0, 0}), OutOfWindow);
}

TEST(MSeries, WindowMismatch)
{
    MSeries a(Window({0}, {2})), b(Window({0}, {3}));
    EXPECT_THROW(a * b, WindowMismatch);
    EXPECT_THROW(a += b, WindowMismatch);
}

TEST(MSeries, RingPropertiesOnRandomInput)
{
    std::mt19937 rng(99);
    Window w({0, 0}, {3, 2});
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_series(rng, w), b = random_series(rng, w), c = random_series(rng, w);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a + -a).is_zero());
    }
}

TEST(MSeries, TruncationIsCoherent)
{
    std::mt19937 rng(5);
    Window big({0, 0}, {4, 4}), small({0, 0}, {2, 3});
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_series(rng, big), b = random_series(rng, big);
        EXPECT_EQ((a * b).restrict_to(small), a.restrict_to(small) * b.restrict_to(small));
    }
}

TEST(MSeries, ShiftAndMap)
{
    Window w({0}, {3});
    auto s = series_monomial(w, {0}, 1) + series_monomial(w, {3}, 2);
    auto shifted = s.shifted({-1}, Window({-2}, {1}));
    EXPECT_EQ(shifted.coefficient({-1}), EPoly(1));
    EXPECT_EQ(shifted.term_count(), 1u);
    auto doubled = s.map([](const EPoly& e) { return e * 2; });
    EXPECT_EQ(doubled.coefficient({3}), EPoly(4));
}

TEST(MSeries, NegativeLowerBounds)
{
    Window w({-2}, {2});
    auto inv = series_monomial(w, {-1}, 1);
    auto q = series_monomial(w, {1}, 1);
    EXPECT_EQ(inv * q, series_monomial(w, {0}, 1));
}
