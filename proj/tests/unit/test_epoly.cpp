#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "hyperquot/combinat.hpp"
#include "hyperquot/epoly.hpp"
#include "hyperquot/errors.hpp"

using namespace hq;

namespace {

EPoly L(int k = 1) { return EPoly::lefschetz(k); }

EPoly random_epoly(std::mt19937& rng, int spread = 3)
{
    std::uniform_int_distribution<int> exp(-spread, spread), coef(-5, 5), count(0, 6);
    std::vector<Term> terms;
    for (int k = count(rng); k > 0; --k)
        terms.push_back(Term{exp(rng), exp(rng), coef(rng)});
    return EPoly::from_terms(std::move(terms));
}

// Grassmannian class by Schubert cells: one cell of dimension sum_i (a_i - i)
// for every d-subset a_1 < ... < a_d of {1..r}.
EPoly schubert_count(int d, int r)
{
    std::vector<bool> pick(static_cast<std::size_t>(r), false);
    std::fill(pick.begin(), pick.begin() + d, true);
    EPoly total;
    do {
        int dim = 0, seen = 0;
        for (int a = 1; a <= r; ++a)
            if (pick[static_cast<std::size_t>(a - 1)])
                dim += a - ++seen;
        total += L(dim);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return total;
}

// Flag variety class by counting inversions of words with prescribed letter
// multiplicities (one letter per corank block).
EPoly inversion_count(const NestingProfile& p)
{
    std::vector<int> word;
    for (int j = 0; j <= p.length(); ++j)
        for (int k = 0; k < p.block_size(j); ++k)
            word.push_back(j);
    std::sort(word.begin(), word.end());
    EPoly total;
    do {
        int inv = 0;
        for (std::size_t a = 0; a < word.size(); ++a)
            for (std::size_t b = a + 1; b < word.size(); ++b)
                inv += word[a] > word[b];
        total += L(inv);
    } while (std::next_permutation(word.begin(), word.end()));
    return total;
}

Integer factorial(int n)
{
    Integer f = 1;
    for (int k = 2; k <= n; ++k)
        f *= k;
    return f;
}

} // namespace

TEST(EPoly, Arithmetic)
{
    EPoly one(1);
    EXPECT_EQ((one + L()) * one, one + L());
    EXPECT_EQ((one + L()) * (one - L()), one - L(2));
    EXPECT_TRUE(((one + L()) - (one + L())).is_zero());
    EXPECT_TRUE(((one + L()) - (one + L())).terms().empty());
}

TEST(EPoly, Lefschetz)
{
    EXPECT_EQ(L(0), EPoly(1));
    EXPECT_EQ(L(1), EPoly::monomial(1, 1));
    EXPECT_EQ(L(-2), EPoly::monomial(-2, -2));
    EXPECT_EQ(L(3) * L(-3), EPoly(1));
}

TEST(EPoly, NormalizesTerms)
{
    auto p = EPoly::from_terms({{1, 0, 2}, {0, 0, 1}, {1, 0, -2}, {0, 1, 3}, {0, 0, 0}});
    ASSERT_EQ(p.terms().size(), 2u);
    EXPECT_EQ(p.coefficient(0, 0), 1);
    EXPECT_EQ(p.coefficient(0, 1), 3);
    EXPECT_EQ(p.coefficient(1, 0), 0);
}

TEST(EPoly, RingAxiomsOnRandomInput)
{
    std::mt19937 rng(20241);
    for (int trial = 0; trial < 300; ++trial) {
        EPoly a = random_epoly(rng), b = random_epoly(rng), c = random_epoly(rng);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b - b, a);
        EXPECT_EQ(specialize_euler(a * b), specialize_euler(a) * specialize_euler(b));
        EXPECT_EQ(specialize_euler(a + b), specialize_euler(a) + specialize_euler(b));
        EPoly acc = c;
        acc.add_product(a, b);
        EXPECT_EQ(acc, c + a * b);
    }
}

TEST(EPoly, PowMatchesRepeatedProduct)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        EPoly a = random_epoly(rng, 2);
        EPoly expected(1);
        for (unsigned k = 0; k <= 5; ++k) {
            EXPECT_EQ(a.pow(k), expected);
            expected *= a;
        }
    }
}

TEST(EPoly, LargeCoefficientsAreExact)
{
    EPoly p = (EPoly(1) + EPoly::monomial(1, 0)).pow(200);
    Integer binom = factorial(200) / (factorial(100) * factorial(100));
    EXPECT_EQ(p.coefficient(100, 0), binom);
    // squares of those coefficients overflow any machine integer
    EXPECT_EQ((p * p).coefficient(200, 0), factorial(400) / (factorial(200) * factorial(200)));
}

TEST(EPoly, DegreesAndDuality)
{
    EPoly curve = EPoly(1) - EPoly::monomial(1, 0) * 2 - EPoly::monomial(0, 1) * 2 + L();
    EXPECT_EQ(*curve.total_degree(), 1);
    EXPECT_TRUE(curve.is_palindromic(1));
    EXPECT_FALSE((EPoly(1) + L()).is_palindromic(2));
    EXPECT_EQ(*(EPoly(1) + L(3)).total_degree(), 3);
    EXPECT_FALSE(EPoly().total_degree().has_value());
    EXPECT_EQ((EPoly(1) + EPoly::monomial(2, 0)).dual(2), L(2) + EPoly::monomial(0, 2));
    EXPECT_FALSE(L(-1).has_nonnegative_exponents());
}

TEST(EPoly, Specializations)
{
    EPoly p1 = EPoly(1) + L();
    EXPECT_EQ(specialize_euler(p1), 2);
    EXPECT_EQ(specialize_chi_y(p1), LaurentPoly::from_terms({{0, 1}, {1, 1}}));
    for (int g = 0; g <= 4; ++g) {
        EPoly curve = EPoly::from_terms({{0, 0, 1}, {1, 0, -g}, {0, 1, -g}, {1, 1, 1}});
        EXPECT_EQ(specialize_poincare(curve), LaurentPoly::from_terms({{0, 1}, {1, 2 * g}, {2, 1}}));
        EXPECT_EQ(specialize(curve, Specialization::euler), LaurentPoly::from_terms({{0, 2 - 2 * g}}));
    }
    EXPECT_THROW(specialize_poincare(L(-1)), NegativeExponent);
    EXPECT_THROW(specialize_chi_y(EPoly::monomial(-1, 0)), NegativeExponent);
    EXPECT_NO_THROW(specialize_euler(L(-1)));
}

TEST(EPoly, ToString)
{
    EXPECT_EQ((EPoly(1) + L()).to_string(), "1 + u*v");
    EXPECT_EQ(EPoly().to_string(), "0");
}

TEST(Grassmannian, Examples)
{
    EXPECT_EQ(grassmannian_motive(1, 2), EPoly(1) + L());
    EXPECT_EQ(grassmannian_motive(0, 5), EPoly(1));
    EXPECT_EQ(grassmannian_motive(2, 4), (EPoly(1) + L(2)) * (EPoly(1) + L() + L(2)));
    EXPECT_THROW(grassmannian_motive(3, 2), InvalidRange);
    EXPECT_THROW(grassmannian_motive(-1, 2), InvalidRange);
}

TEST(Grassmannian, MatchesSchubertCells)
{
    for (int r = 0; r <= 8; ++r)
        for (int d = 0; d <= r; ++d)
            EXPECT_EQ(grassmannian_motive(d, r), schubert_count(d, r)) << "G(" << d << "," << r << ")";
}

TEST(FlagMotive, Examples)
{
    EXPECT_EQ(flag_motive(NestingProfile(2, {1})), EPoly(1) + L());
    EXPECT_EQ(flag_motive(NestingProfile(3, {1, 2})), (EPoly(1) + L()) * (EPoly(1) + L() + L(2)));
    EXPECT_EQ(flag_motive(NestingProfile(4, {0, 0})), EPoly(1));
}

TEST(FlagMotive, MatchesInversionCountAndDimension)
{
    for (int r = 1; r <= 6; ++r)
        for (const auto& p : all_profiles(r, 3)) {
            EPoly m = flag_motive(p);
            EXPECT_EQ(m, inversion_count(p)) << p.to_string();
            EXPECT_EQ(*m.total_degree(), flag_dimension(p)) << p.to_string();
            Integer multinomial = factorial(r);
            for (int j = 0; j <= p.length(); ++j)
                multinomial /= factorial(p.block_size(j));
            EXPECT_EQ(specialize_euler(m), multinomial) << p.to_string();
        }
}

TEST(LaurentPoly, Basics)
{
    auto a = LaurentPoly::from_terms({{-1, 2}, {0, 1}, {-1, -2}});
    EXPECT_EQ(a, LaurentPoly::from_terms({{0, 1}}));
    auto b = LaurentPoly::from_terms({{1, 1}, {-1, 1}});
    EXPECT_EQ((b * b).coefficient(0), 2);
    EXPECT_EQ((b * b).coefficient(2), 1);
    EXPECT_EQ(b.coefficient(5), 0);
}
