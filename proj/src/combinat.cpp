#include "hyperquot/combinat.hpp"

#include <algorithm>
#include <numeric>

#include "hyperquot/errors.hpp"

namespace hq {

BlockPermutation::BlockPermutation(const NestingProfile& profile, std::vector<int> images)
    : images_(std::move(images))
{
    const int r = profile.rank();
    if (static_cast<int>(images_.size()) != r)
        throw InvalidInput("permutation length differs from rank");
    std::vector<bool> seen(static_cast<std::size_t>(r) + 1, false);
    for (int v : images_) {
        if (v < 1 || v > r || seen[static_cast<std::size_t>(v)])
            throw InvalidInput("not a bijection of {1..r}");
        seen[static_cast<std::size_t>(v)] = true;
    }
    for (int j = 0; j <= profile.length(); ++j)
        for (int a = profile.block_begin(j); a < profile.block_end(j); ++a)
            if ((*this)(a) > (*this)(a + 1))
                throw InvalidInput("permutation is not increasing on block " + std::to_string(j));
}

namespace {

// Fills positions of blocks l, l-1, ..., 0 (left to right in position order)
// with increasing subsets of the unused values, in lexicographic order.
void fill_blocks(const NestingProfile& profile, int block, std::vector<int>& images, std::vector<bool>& used,
                 std::vector<BlockPermutation>& out)
{
    if (block < 0) {
        out.emplace_back(profile, images);
        return;
    }
    const int begin = profile.block_begin(block);
    const int size = profile.block_size(block);
    const int r = profile.rank();
    // choose `size` increasing values; recursion over positions within the block
    auto choose = [&](auto&& self, int pos, int min_value) -> void {
        if (pos == begin + size) {
            fill_blocks(profile, block - 1, images, used, out);
            return;
        }
        for (int v = min_value; v <= r; ++v) {
            if (used[static_cast<std::size_t>(v)])
                continue;
            used[static_cast<std::size_t>(v)] = true;
            images[static_cast<std::size_t>(pos - 1)] = v;
            self(self, pos + 1, v + 1);
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    choose(choose, begin, 1);
}

Integer factorial(int n)
{
    Integer f = 1;
    for (int k = 2; k <= n; ++k)
        f *= k;
    return f;
}

} // namespace

std::vector<BlockPermutation> enumerate_block_permutations(const NestingProfile& profile)
{
    std::vector<BlockPermutation> out;
    std::vector<int> images(static_cast<std::size_t>(profile.rank()), 0);
    std::vector<bool> used(static_cast<std::size_t>(profile.rank()) + 1, false);
    fill_blocks(profile, profile.length(), images, used, out);
    return out;
}

Integer block_permutation_count(const NestingProfile& profile)
{
    Integer den = 1;
    for (int j = 0; j <= profile.length(); ++j)
        den *= factorial(profile.block_size(j));
    return factorial(profile.rank()) / den;
}

HTable::HTable(const NestingProfile& profile, const BlockPermutation& sigma, int genus, const BundleSpec& bundle)
    : r_(profile.rank())
{
    const int l = profile.length();
    const auto ru = static_cast<std::size_t>(r_);
    h0_.assign(static_cast<std::size_t>(l + 1) * ru, 0);
    h1_.assign(static_cast<std::size_t>(l) * ru, 0);
    h2_.assign(static_cast<std::size_t>(l), 0);
    auto r = [&](int i) { return profile.corank(i); };

    for (int i = 1; i <= l + 1; ++i)
        for (int alpha = 1; alpha <= r_; ++alpha) {
            int sum = 0;
            for (int beta = r(i) + 1; beta <= r(i - 1); ++beta)
                sum += sigma.epsilon(alpha, beta);
            h0_[idx(i, alpha)] = sum;
        }
    for (int i = 1; i <= l; ++i)
        for (int alpha = 1; alpha <= r_; ++alpha) {
            int sum = 0;
            for (int beta = r(i + 1) + 1; beta <= r(i); ++beta)
                sum += sigma.epsilon(beta, alpha);
            for (int beta = r(i) + 1; beta <= r(i - 1); ++beta)
                sum += sigma.epsilon(alpha, beta);
            h1_[idx(i, alpha)] = sum;
        }
    for (int i = 1; i <= l; ++i) {
        long long sum = 0;
        for (int alpha = r(i + 1) + 1; alpha <= r(i); ++alpha)
            for (int beta = r(i) + 1; beta <= r_; ++beta)
                if (sigma.epsilon(alpha, beta))
                    sum += static_cast<long long>(bundle.degree(sigma(beta))) - bundle.degree(sigma(alpha)) + 1 - genus;
        h2_[static_cast<std::size_t>(i - 1)] = sum;
    }
}

long long HTable::h2_total() const
{
    return std::accumulate(h2_.begin(), h2_.end(), 0LL);
}

Degree prefactor_exponents(const NestingProfile& profile, const BlockPermutation& sigma, const BundleSpec& bundle)
{
    Degree out(static_cast<std::size_t>(profile.length()), 0);
    for (int j = 1; j <= profile.length(); ++j)
        for (int alpha = profile.corank(j) + 1; alpha <= profile.rank(); ++alpha)
            out[static_cast<std::size_t>(j - 1)] += bundle.degree(sigma(alpha));
    return out;
}

int zeta_exponent(const NestingProfile& profile, const HTable& h, int i, int j, int alpha)
{
    return h.h0(i, alpha) + profile.corank(i) - profile.corank(j) + alpha - profile.corank(j + 1) - 1;
}

bool h_identity_check(const NestingProfile& profile)
{
    const int l = profile.length();
    const auto bundle = BundleSpec::trivial(profile.rank());
    for (const auto& sigma : enumerate_block_permutations(profile)) {
        HTable h(profile, sigma, 0, bundle);
        for (int i = 1; i <= l; ++i)
            for (int j = i; j <= l; ++j)
                for (int alpha = profile.corank(j + 1) + 1; alpha <= profile.corank(j); ++alpha) {
                    int lhs = 0;
                    for (int k = i; k <= j; ++k)
                        lhs += h.h1(k, alpha);
                    if (lhs != zeta_exponent(profile, h, i, j, alpha))
                        return false;
                }
    }
    return true;
}

int flag_dimension(const NestingProfile& profile)
{
    int dim = 0;
    for (int i = 1; i <= profile.length(); ++i)
        dim += profile.s(i) * (profile.s(i + 1) - profile.s(i));
    return dim;
}

long long virtual_dimension(const NestingProfile& profile, const Degree& d, int genus, long long degE)
{
    const int l = profile.length();
    if (static_cast<int>(d.size()) != l)
        throw InvalidInput("degree vector length differs from nesting length");
    long long vd = static_cast<long long>(1 - genus) * flag_dimension(profile);
    for (int i = 1; i <= l; ++i)
        vd += static_cast<long long>(d[static_cast<std::size_t>(i - 1)]) * (profile.s(i + 1) - profile.s(i - 1));
    vd -= degE * profile.s(l);
    return vd;
}

std::vector<NestingProfile> all_profiles(int r, int max_length)
{
    std::vector<NestingProfile> out;
    for (int l = 1; l <= max_length; ++l) {
        std::vector<int> s(static_cast<std::size_t>(l), 0);
        while (true) {
            out.emplace_back(r, s);
            // next nondecreasing tuple in [0, r]^l
            int i = l - 1;
            while (i >= 0 && s[static_cast<std::size_t>(i)] == r)
                --i;
            if (i < 0)
                break;
            int v = s[static_cast<std::size_t>(i)] + 1;
            for (int k = i; k < l; ++k)
                s[static_cast<std::size_t>(k)] = v;
        }
    }
    return out;
}

} // namespace hq
