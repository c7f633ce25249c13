#pragma once

#include <cstdint>
#include <vector>

#include "hyperquot/epoly.hpp"
#include "hyperquot/profile.hpp"

namespace hq {

/// A permutation of {1..r} that is increasing on every corank block of a profile.
class BlockPermutation {
public:
    /// Throws InvalidInput unless `images` is a bijection of {1..r} increasing on each block.
    BlockPermutation(const NestingProfile& profile, std::vector<int> images);

    int rank() const noexcept { return static_cast<int>(images_.size()); }
    /// sigma(alpha), 1-indexed.
    int operator()(int alpha) const { return images_[static_cast<std::size_t>(alpha - 1)]; }
    const std::vector<int>& images() const noexcept { return images_; }

    /// 1 if sigma(beta) > sigma(alpha), else 0.
    int epsilon(int alpha, int beta) const { return (*this)(beta) > (*this)(alpha) ? 1 : 0; }

    friend bool operator==(const BlockPermutation&, const BlockPermutation&) = default;

private:
    std::vector<int> images_;
};

/// All block permutations of the profile in lexicographic order of (sigma(1), ..., sigma(r)).
std::vector<BlockPermutation> enumerate_block_permutations(const NestingProfile& profile);

/// r! / prod_{j=0}^{l} (r_j - r_{j+1})!
Integer block_permutation_count(const NestingProfile& profile);

/// The exponent functions attached to a block permutation.
class HTable {
public:
    HTable(const NestingProfile& profile, const BlockPermutation& sigma, int genus, const BundleSpec& bundle);

    /// i in 1..l+1, alpha in 1..r
    int h0(int i, int alpha) const { return h0_[idx(i, alpha)]; }
    /// i in 1..l, alpha in 1..r
    int h1(int i, int alpha) const { return h1_[idx(i, alpha)]; }
    /// i in 1..l (already summed over alpha, beta)
    long long h2(int i) const { return h2_[static_cast<std::size_t>(i - 1)]; }
    long long h2_total() const;

private:
    std::size_t idx(int i, int alpha) const
    {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(r_) + static_cast<std::size_t>(alpha - 1);
    }

    int r_;
    std::vector<int> h0_;
    std::vector<int> h1_;
    std::vector<long long> h2_;
};

/// Sum_{alpha = r_j + 1}^{r} deg L_{sigma(alpha)} for j = 1..l: the q-degree shift of sigma.
Degree prefactor_exponents(const NestingProfile& profile, const BlockPermutation& sigma, const BundleSpec& bundle);

/// The L-exponent h_0(i, alpha) + r_i - r_j + alpha - r_{j+1} - 1 of a zeta factor.
int zeta_exponent(const NestingProfile& profile, const HTable& h, int i, int j, int alpha);

/// Brute-force check of sum_{k=i}^{j} h_1(k, alpha) == zeta_exponent(i, j, alpha)
/// for every block permutation and every admissible (i, j, alpha).
bool h_identity_check(const NestingProfile& profile);

/// sum_i s_i (s_{i+1} - s_i), s_{l+1} = r
int flag_dimension(const NestingProfile& profile);

/// (1-g) dim Flag + sum_i d_i (s_{i+1} - s_{i-1}) - deg E * s_l
long long virtual_dimension(const NestingProfile& profile, const Degree& d, int genus, long long degE);

/// Every nondecreasing s with entries in [0, r] and length 1..max_length.
std::vector<NestingProfile> all_profiles(int r, int max_length);

} // namespace hq
