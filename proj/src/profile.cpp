#include "hyperquot/profile.hpp"

#include <numeric>
#include <sstream>

#include "hyperquot/errors.hpp"

namespace hq {

NestingProfile::NestingProfile(int r, std::vector<int> s) : r_(r), s_(std::move(s))
{
    if (r_ < 1)
        throw InvalidProfile("rank must be positive, got " + std::to_string(r_));
    if (s_.empty())
        throw InvalidProfile("nesting length must be positive");
    for (std::size_t i = 0; i < s_.size(); ++i) {
        if (s_[i] < 0 || s_[i] > r_)
            throw InvalidProfile("s_" + std::to_string(i + 1) + " = " + std::to_string(s_[i]) +
                                 " outside [0, " + std::to_string(r_) + "]");
        if (i > 0 && s_[i] < s_[i - 1])
            throw InvalidProfile("s must be nondecreasing");
    }
}

int NestingProfile::s(int i) const
{
    if (i == 0)
        return 0;
    if (i == length() + 1)
        return r_;
    return s_.at(static_cast<std::size_t>(i - 1));
}

int NestingProfile::corank(int i) const
{
    if (i == 0)
        return r_;
    if (i == length() + 1)
        return 0;
    return r_ - s_.at(static_cast<std::size_t>(i - 1));
}

std::vector<int> NestingProfile::coranks() const
{
    std::vector<int> out;
    out.reserve(s_.size());
    for (int si : s_)
        out.push_back(r_ - si);
    return out;
}

int NestingProfile::block_of(int alpha) const
{
    for (int j = 0; j <= length(); ++j)
        if (alpha >= block_begin(j) && alpha <= block_end(j))
            return j;
    throw InvalidRange("index " + std::to_string(alpha) + " outside 1.." + std::to_string(r_));
}

std::string NestingProfile::to_string() const
{
    std::ostringstream os;
    os << "r=" << r_ << " s=(";
    for (std::size_t i = 0; i < s_.size(); ++i)
        os << (i ? "," : "") << s_[i];
    os << ")";
    return os.str();
}

long long BundleSpec::total_degree() const
{
    return std::accumulate(degrees.begin(), degrees.end(), 0LL);
}

void check_consistent(const CurveSpec& curve, const BundleSpec& bundle, const NestingProfile& profile)
{
    if (curve.genus < 0)
        throw InvalidInput("genus must be nonnegative");
    if (bundle.rank() != profile.rank())
        throw InvalidInput("bundle has " + std::to_string(bundle.rank()) + " line bundles but profile rank is " +
                           std::to_string(profile.rank()));
}

} // namespace hq
