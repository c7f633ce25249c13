#include "hyperquot/epoly.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "hyperquot/errors.hpp"

namespace hq {

namespace {

bool exponent_less(const Term& a, const Term& b)
{
    return a.pu != b.pu ? a.pu < b.pu : a.pv < b.pv;
}

// Sorts, merges equal exponents and drops zeros.
void normalize(std::vector<Term>& terms)
{
    std::sort(terms.begin(), terms.end(), exponent_less);
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        Integer c = std::move(terms[i].c);
        while (j < terms.size() && terms[j].pu == terms[i].pu && terms[j].pv == terms[i].pv)
            c += terms[j++].c;
        if (c != 0) {
            terms[out].pu = terms[i].pu;
            terms[out].pv = terms[i].pv;
            terms[out].c = std::move(c);
            ++out;
        }
        i = j;
    }
    terms.resize(out);
}

// Merge of two sorted term lists, b scaled by sign.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign)
{
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && exponent_less(a[i], b[j]))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || exponent_less(b[j], a[i])) {
            out.push_back(b[j++]);
            if (sign < 0)
                out.back().c = -out.back().c;
        } else {
            Integer c = a[i].c;
            if (sign < 0)
                c -= b[j].c;
            else
                c += b[j].c;
            if (c != 0)
                out.push_back(Term{a[i].pu, a[i].pv, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

constexpr long long kDenseLimit = 1 << 14;

// Largest |c| over the terms, as a bit count.
unsigned magnitude_bits(std::span<const Term> terms)
{
    unsigned bits = 0;
    for (const auto& t : terms)
        if (!t.c.is_zero())
            bits = std::max(bits, static_cast<unsigned>(boost::multiprecision::msb(abs(t.c))) + 1);
    return bits;
}

// Every partial sum of the product fits in a signed 64-bit accumulator.
bool fits_machine_product(std::span<const Term> a, std::span<const Term> b)
{
    unsigned count_bits = static_cast<unsigned>(std::bit_width(std::min(a.size(), b.size())));
    return magnitude_bits(a) + magnitude_bits(b) + count_bits <= 62;
}

std::vector<Term> multiply(std::span<const Term> a, std::span<const Term> b)
{
    if (a.empty() || b.empty())
        return {};
    int ulo = a.front().pu + b.front().pu;
    int uhi = a.back().pu + b.back().pu;
    int vlo_a = a.front().pv, vhi_a = a.front().pv;
    for (const auto& t : a) {
        vlo_a = std::min(vlo_a, t.pv);
        vhi_a = std::max(vhi_a, t.pv);
    }
    int vlo_b = b.front().pv, vhi_b = b.front().pv;
    for (const auto& t : b) {
        vlo_b = std::min(vlo_b, t.pv);
        vhi_b = std::max(vhi_b, t.pv);
    }
    int vlo = vlo_a + vlo_b, vhi = vhi_a + vhi_b;
    long long width = vhi - vlo + 1;
    long long area = (static_cast<long long>(uhi) - ulo + 1) * width;

    std::vector<Term> out;
    const bool dense = area <= kDenseLimit && area <= 4 * static_cast<long long>(a.size() * b.size()) + 64;
    if (dense && fits_machine_product(a, b)) {
        std::vector<long long> grid(static_cast<std::size_t>(area), 0);
        std::vector<long long> xs(a.size()), ys(b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            xs[i] = static_cast<long long>(a[i].c);
        for (std::size_t j = 0; j < b.size(); ++j)
            ys[j] = static_cast<long long>(b[j].c);
        for (std::size_t i = 0; i < a.size(); ++i) {
            const long long row = (a[i].pu - ulo) * width + a[i].pv - vlo;
            for (std::size_t j = 0; j < b.size(); ++j)
                grid[static_cast<std::size_t>(row + b[j].pu * width + b[j].pv)] += xs[i] * ys[j];
        }
        for (long long k = 0; k < area; ++k)
            if (grid[static_cast<std::size_t>(k)] != 0)
                out.push_back(Term{static_cast<int>(ulo + k / width), static_cast<int>(vlo + k % width),
                                   Integer(grid[static_cast<std::size_t>(k)])});
        return out;
    }
    if (dense) {
        std::vector<Integer> grid(static_cast<std::size_t>(area));
        for (const auto& x : a)
            for (const auto& y : b)
                grid[static_cast<std::size_t>((x.pu + y.pu - ulo) * width + (x.pv + y.pv - vlo))] += x.c * y.c;
        for (long long k = 0; k < area; ++k)
            if (grid[static_cast<std::size_t>(k)] != 0)
                out.push_back(Term{static_cast<int>(ulo + k / width), static_cast<int>(vlo + k % width),
                                   std::move(grid[static_cast<std::size_t>(k)])});
        return out;
    }
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b)
            out.push_back(Term{x.pu + y.pu, x.pv + y.pv, x.c * y.c});
    normalize(out);
    return out;
}

} // namespace

EPoly::EPoly(long long c) : EPoly(Integer(c)) {}

EPoly::EPoly(Integer c)
{
    if (c != 0)
        terms_.push_back(Term{0, 0, std::move(c)});
}

EPoly EPoly::from_terms(std::vector<Term> terms)
{
    normalize(terms);
    EPoly p;
    p.terms_ = std::move(terms);
    return p;
}

EPoly EPoly::monomial(int pu, int pv, Integer c)
{
    EPoly p;
    if (c != 0)
        p.terms_.push_back(Term{pu, pv, std::move(c)});
    return p;
}

bool EPoly::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].pu == 0 && terms_[0].pv == 0);
}

Integer EPoly::coefficient(int pu, int pv) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{pu, pv, 0}, exponent_less);
    if (it != terms_.end() && it->pu == pu && it->pv == pv)
        return it->c;
    return 0;
}

std::optional<int> EPoly::total_degree() const
{
    if (terms_.empty())
        return std::nullopt;
    int best = std::max(terms_.front().pu, terms_.front().pv);
    for (const auto& t : terms_)
        best = std::max({best, t.pu, t.pv});
    return best;
}

std::optional<int> EPoly::min_exponent() const
{
    if (terms_.empty())
        return std::nullopt;
    int best = std::min(terms_.front().pu, terms_.front().pv);
    for (const auto& t : terms_)
        best = std::min({best, t.pu, t.pv});
    return best;
}

bool EPoly::has_nonnegative_exponents() const
{
    auto m = min_exponent();
    return !m || *m >= 0;
}

EPoly EPoly::dual(int degree) const
{
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_)
        out.push_back(Term{degree - t.pu, degree - t.pv, t.c});
    return from_terms(std::move(out));
}

EPoly& EPoly::operator+=(const EPoly& other)
{
    if (other.terms_.empty())
        return *this;
    terms_ = merge(terms_, other.terms_, +1);
    return *this;
}

EPoly& EPoly::operator-=(const EPoly& other)
{
    if (other.terms_.empty())
        return *this;
    terms_ = merge(terms_, other.terms_, -1);
    return *this;
}

EPoly& EPoly::operator*=(const EPoly& other)
{
    terms_ = multiply(terms_, other.terms_);
    return *this;
}

void EPoly::add_product(const EPoly& a, const EPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return;
    if (terms_.empty()) {
        terms_ = multiply(a.terms_, b.terms_);
        return;
    }
    terms_ = merge(terms_, multiply(a.terms_, b.terms_), +1);
}

EPoly operator*(const EPoly& a, const EPoly& b)
{
    EPoly p;
    p.terms_ = multiply(a.terms_, b.terms_);
    return p;
}

EPoly operator-(EPoly a)
{
    for (auto& t : a.terms_)
        t.c = -t.c;
    return a;
}

EPoly EPoly::pow(unsigned k) const
{
    EPoly result(1);
    EPoly base = *this;
    while (k) {
        if (k & 1U)
            result *= base;
        k >>= 1U;
        if (k)
            base *= base;
    }
    return result;
}

std::string EPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Integer c = t.c;
        bool negative = c < 0;
        if (negative)
            c = -c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        bool has_var = t.pu != 0 || t.pv != 0;
        if (!has_var || c != 1) {
            os << c;
            if (has_var)
                os << "*";
        }
        auto var = [&](char name, int e, bool lead) {
            if (e == 0)
                return false;
            if (!lead)
                os << "*";
            os << name;
            if (e != 1)
                os << "^" << e;
            return true;
        };
        bool wrote = var('u', t.pu, true);
        var('v', t.pv, !wrote);
    }
    return os.str();
}

LaurentPoly LaurentPoly::from_terms(std::vector<std::pair<int, Integer>> terms)
{
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    LaurentPoly p;
    for (auto& [e, c] : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == e)
            p.terms_.back().second += c;
        else
            p.terms_.emplace_back(e, std::move(c));
        if (p.terms_.back().second == 0)
            p.terms_.pop_back();
    }
    return p;
}

Integer LaurentPoly::coefficient(int e) const
{
    for (const auto& [k, c] : terms_)
        if (k == e)
            return c;
    return 0;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other)
{
    auto all = terms_;
    all.insert(all.end(), other.terms_.begin(), other.terms_.end());
    *this = from_terms(std::move(all));
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    std::vector<std::pair<int, Integer>> out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.emplace_back(ea + eb, ca * cb);
    return LaurentPoly::from_terms(std::move(out));
}

std::string LaurentPoly::to_string(char var) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, coeff] : terms_) {
        Integer c = coeff;
        bool negative = c < 0;
        if (negative)
            c = -c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (e == 0 || c != 1) {
            os << c;
            if (e != 0)
                os << "*";
        }
        if (e != 0) {
            os << var;
            if (e != 1)
                os << "^" << e;
        }
    }
    return os.str();
}

Integer specialize_euler(const EPoly& a)
{
    Integer sum = 0;
    for (const auto& t : a.terms())
        sum += t.c;
    return sum;
}

namespace {

void require_nonnegative(const EPoly& a, const char* target)
{
    if (!a.has_nonnegative_exponents())
        throw NegativeExponent(std::string(target) + " specialization of Laurent input " + a.to_string());
}

} // namespace

LaurentPoly specialize_poincare(const EPoly& a)
{
    require_nonnegative(a, "poincare");
    std::vector<std::pair<int, Integer>> out;
    for (const auto& t : a.terms()) {
        int e = t.pu + t.pv;
        out.emplace_back(e, (e % 2 == 0) ? t.c : Integer(-t.c));
    }
    return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly specialize_chi_y(const EPoly& a)
{
    require_nonnegative(a, "chi_y");
    std::vector<std::pair<int, Integer>> out;
    for (const auto& t : a.terms())
        out.emplace_back(t.pu, t.c);
    return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly specialize(const EPoly& a, Specialization target)
{
    switch (target) {
    case Specialization::euler:
        return LaurentPoly::from_terms({{0, specialize_euler(a)}});
    case Specialization::poincare:
        return specialize_poincare(a);
    case Specialization::chi_y:
        return specialize_chi_y(a);
    }
    throw InvalidInput("unknown specialization");
}

namespace {

// Dense polynomials in L (index = power of L); used for the Gaussian-binomial quotients.
using LPoly = std::vector<Integer>;

LPoly lpoly_mul(const LPoly& a, const LPoly& b)
{
    LPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

// prod_{k=1}^{n} (L^k - 1)
LPoly lpoly_product(int n)
{
    LPoly p{1};
    for (int k = 1; k <= n; ++k) {
        LPoly f(static_cast<std::size_t>(k) + 1);
        f[0] = -1;
        f[static_cast<std::size_t>(k)] = 1;
        p = lpoly_mul(p, f);
    }
    return p;
}

// Exact division by a polynomial with leading coefficient +-1.
LPoly lpoly_divide_exact(LPoly num, const LPoly& den)
{
    const Integer& lead = den.back();
    if (num.size() < den.size())
        throw InternalInconsistency("division of lower-degree polynomial");
    LPoly quot(num.size() - den.size() + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        Integer c = num[k + den.size() - 1] / lead;
        if (c * lead != num[k + den.size() - 1])
            throw InternalInconsistency("non-integral quotient coefficient");
        quot[k] = c;
        for (std::size_t i = 0; i < den.size(); ++i)
            num[k + i] -= c * den[i];
    }
    for (const auto& rem : num)
        if (rem != 0)
            throw InternalInconsistency("nonzero remainder in flag motive division");
    return quot;
}

EPoly from_lpoly(const LPoly& p)
{
    std::vector<Term> terms;
    for (std::size_t k = 0; k < p.size(); ++k)
        if (p[k] != 0)
            terms.push_back(Term{static_cast<int>(k), static_cast<int>(k), p[k]});
    return EPoly::from_terms(std::move(terms));
}

} // namespace

EPoly grassmannian_motive(int d, int r)
{
    if (d < 0 || d > r)
        throw InvalidRange("G(" + std::to_string(d) + ", " + std::to_string(r) + ") requires 0 <= d <= r");
    LPoly den = lpoly_mul(lpoly_product(d), lpoly_product(r - d));
    return from_lpoly(lpoly_divide_exact(lpoly_product(r), den));
}

EPoly flag_motive(const NestingProfile& profile)
{
    LPoly den{1};
    for (int j = 0; j <= profile.length(); ++j)
        den = lpoly_mul(den, lpoly_product(profile.block_size(j)));
    return from_lpoly(lpoly_divide_exact(lpoly_product(profile.rank()), den));
}

} // namespace hq
