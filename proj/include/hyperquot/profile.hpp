#pragma once

#include <span>
#include <string>
#include <vector>

namespace hq {

/// A q-degree vector (d_1, ..., d_l).
using Degree = std::vector<int>;

/// Ranks s_1 <= ... <= s_l of the nested quotients of a rank-r bundle,
/// together with the coranks r_i = r - s_i (r_0 = r, r_{l+1} = 0).
class NestingProfile {
public:
    /// Throws InvalidProfile unless r >= 1, l >= 1, s nondecreasing, 0 <= s_i <= r.
    NestingProfile(int r, std::vector<int> s);

    int rank() const noexcept { return r_; }
    int length() const noexcept { return static_cast<int>(s_.size()); }

    /// s_i for i = 0..l+1 with s_0 = 0 and s_{l+1} = r.
    int s(int i) const;
    /// r_i for i = 0..l+1 with r_0 = r and r_{l+1} = 0.
    int corank(int i) const;

    std::span<const int> s_values() const noexcept { return s_; }
    /// (r_1, ..., r_l)
    std::vector<int> coranks() const;

    /// Block j is the index range [r_{j+1}+1, r_j], j = 0..l. May be empty.
    int block_begin(int j) const { return corank(j + 1) + 1; }
    int block_end(int j) const { return corank(j); }
    int block_size(int j) const { return corank(j) - corank(j + 1); }
    /// Block index j with r_{j+1}+1 <= alpha <= r_j.
    int block_of(int alpha) const;

    std::string to_string() const;

    friend bool operator==(const NestingProfile&, const NestingProfile&) = default;

private:
    int r_;
    std::vector<int> s_;
};

struct BundleSpec {
    std::vector<int> degrees; ///< deg L_1, ..., deg L_r

    int rank() const noexcept { return static_cast<int>(degrees.size()); }
    long long total_degree() const;
    /// deg L_alpha, 1-indexed
    int degree(int alpha) const { return degrees.at(static_cast<std::size_t>(alpha - 1)); }

    static BundleSpec trivial(int r) { return {std::vector<int>(static_cast<std::size_t>(r), 0)}; }
};

struct CurveSpec {
    int genus = 0;
};

/// Throws InvalidInput if the bundle rank differs from the profile rank or genus < 0.
void check_consistent(const CurveSpec& curve, const BundleSpec& bundle, const NestingProfile& profile);

} // namespace hq
