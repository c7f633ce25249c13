#pragma once

// Independent brute-force evaluation of the motivic partition function by
// enumerating torus-fixed components and their Bialynicki-Birula strata.
// Shares no code path with formulas.hpp beyond the classes [Sym^n C].

#include <vector>

#include "hyperquot/combinat.hpp"
#include "hyperquot/qseries.hpp"

namespace hq {

/// One connected component of the torus-fixed locus: a block permutation and,
/// for each alpha = 1..r_1 in block j, a nondecreasing tuple n_alpha of length j.
struct FixedComponent {
    NestingProfile profile;
    BlockPermutation sigma;
    std::vector<std::vector<int>> tuples; ///< tuples[alpha - 1] = (n_{1,alpha}, ..., n_{j,alpha})
    Degree degree;                        ///< d_j = sum_{alpha <= r_j} n_{j,alpha} + sum_{alpha > r_j} deg L_sigma(alpha)

    /// n_{i,alpha}; requires alpha <= r_i.
    int n(int i, int alpha) const { return tuples[static_cast<std::size_t>(alpha - 1)][static_cast<std::size_t>(i - 1)]; }
};

/// Every fixed component of sigma whose degree lies in the window, in
/// depth-first order (alpha outer, i inner, increasing values).
std::vector<FixedComponent> enumerate_fixed_components(const BlockPermutation& sigma, const BundleSpec& bundle,
                                                       const NestingProfile& profile, const Window& window);

/// Relative dimension of the affine bundle over the component:
/// sum_i sum_{alpha <= r_i} n_{i,alpha} h_1(i, alpha) + sum_i h_2(i).
long long bb_stratum_dimension(const FixedComponent& comp, int genus, const BundleSpec& bundle);

/// sum over components of L^{stratum dimension} prod_alpha [C^{[n_alpha]}] q^d.
MSeries oracle_partition_function(const CurveSpec& curve, const BundleSpec& bundle, const NestingProfile& profile,
                                  const Window& window);

} // namespace hq
