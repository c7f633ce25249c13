#include "hyperquot/qseries.hpp"

#include <algorithm>
#include <sstream>

#include "hyperquot/errors.hpp"

namespace hq {

namespace {

std::string degree_string(const Degree& d)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < d.size(); ++i)
        os << (i ? "," : "") << d[i];
    os << ")";
    return os.str();
}

} // namespace

Window::Window(Degree lo, Degree hi) : lo_(std::move(lo)), hi_(std::move(hi))
{
    if (lo_.empty() || lo_.size() != hi_.size())
        throw InvalidRange("window bounds must be nonempty and of equal length");
    strides_.assign(lo_.size(), 1);
    cells_ = 1;
    for (std::size_t i = lo_.size(); i-- > 0;) {
        if (lo_[i] > hi_[i])
            throw InvalidRange("window lower bound exceeds upper bound in coordinate " + std::to_string(i + 1));
        strides_[i] = cells_;
        cells_ *= static_cast<std::size_t>(hi_[i] - lo_[i] + 1);
    }
}

Window Window::uniform(int vars, int lo, int hi)
{
    return Window(Degree(static_cast<std::size_t>(vars), lo), Degree(static_cast<std::size_t>(vars), hi));
}

bool Window::contains(const Degree& d) const
{
    if (d.size() != lo_.size())
        return false;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] < lo_[i] || d[i] > hi_[i])
            return false;
    return true;
}

bool Window::contains(const Window& inner) const
{
    return contains(inner.lo_) && contains(inner.hi_);
}

std::size_t Window::index_of(const Degree& d) const
{
    std::size_t idx = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
        idx += static_cast<std::size_t>(d[i] - lo_[i]) * strides_[i];
    return idx;
}

Degree Window::degree_at(std::size_t index) const
{
    Degree d(lo_.size());
    for (std::size_t i = 0; i < lo_.size(); ++i) {
        d[i] = lo_[i] + static_cast<int>(index / strides_[i]);
        index %= strides_[i];
    }
    return d;
}

void Window::for_each(const std::function<void(const Degree&)>& fn) const
{
    for (std::size_t k = 0; k < cells_; ++k)
        fn(degree_at(k));
}

std::string Window::to_string() const
{
    return "[" + degree_string(lo_) + ", " + degree_string(hi_) + "]";
}

MSeries::MSeries(Window window) : window_(std::move(window)), coeffs_(window_.cell_count()) {}

const EPoly& MSeries::coefficient(const Degree& d) const
{
    if (!window_.contains(d))
        throw OutOfWindow("degree " + degree_string(d) + " outside window " + window_.to_string());
    return coeffs_[window_.index_of(d)];
}

void MSeries::add_term(const Degree& d, const EPoly& c)
{
    if (!window_.contains(d))
        return;
    coeffs_[window_.index_of(d)] += c;
}

bool MSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const EPoly& c) { return c.is_zero(); });
}

std::size_t MSeries::term_count() const
{
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const EPoly& c) { return !c.is_zero(); }));
}

void MSeries::for_each_term(const std::function<void(const Degree&, const EPoly&)>& fn) const
{
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero())
            fn(window_.degree_at(k), coeffs_[k]);
}

MSeries& MSeries::operator+=(const MSeries& other)
{
    if (!(window_ == other.window_))
        throw WindowMismatch(window_.to_string() + " vs " + other.window_.to_string());
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] += other.coeffs_[k];
    return *this;
}

MSeries operator*(const MSeries& a, const MSeries& b)
{
    if (!(a.window_ == b.window_))
        throw WindowMismatch(a.window_.to_string() + " vs " + b.window_.to_string());
    const Window& w = a.window_;
    struct Entry {
        Degree d;
        const EPoly* c;
    };
    auto nonzero = [&](const MSeries& s) {
        std::vector<Entry> out;
        for (std::size_t k = 0; k < s.coeffs_.size(); ++k)
            if (!s.coeffs_[k].is_zero())
                out.push_back(Entry{w.degree_at(k), &s.coeffs_[k]});
        return out;
    };
    auto ea = nonzero(a);
    auto eb = nonzero(b);
    MSeries out(w);
    Degree sum(static_cast<std::size_t>(w.vars()));
    for (const auto& x : ea) {
        for (const auto& y : eb) {
            for (std::size_t i = 0; i < sum.size(); ++i)
                sum[i] = x.d[i] + y.d[i];
            if (w.contains(sum))
                out.coeffs_[w.index_of(sum)].add_product(*x.c, *y.c);
        }
    }
    return out;
}

MSeries operator-(MSeries a)
{
    for (auto& c : a.coeffs_)
        c = -std::move(c);
    return a;
}

MSeries MSeries::restrict_to(const Window& inner) const
{
    if (!window_.contains(inner))
        throw WindowMismatch(inner.to_string() + " is not inside " + window_.to_string());
    MSeries out(inner);
    for (std::size_t k = 0; k < out.coeffs_.size(); ++k)
        out.coeffs_[k] = coeffs_[window_.index_of(inner.degree_at(k))];
    return out;
}

MSeries MSeries::shifted(const Degree& shift, const Window& target) const
{
    if (static_cast<int>(shift.size()) != window_.vars() || target.vars() != window_.vars())
        throw WindowMismatch("shift dimension mismatch");
    MSeries out(target);
    Degree d(shift.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero())
            continue;
        Degree src = window_.degree_at(k);
        for (std::size_t i = 0; i < d.size(); ++i)
            d[i] = src[i] + shift[i];
        if (target.contains(d))
            out.coeffs_[target.index_of(d)] += coeffs_[k];
    }
    return out;
}

MSeries MSeries::map(const std::function<EPoly(const EPoly&)>& fn) const
{
    MSeries out(window_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero())
            out.coeffs_[k] = fn(coeffs_[k]);
    return out;
}

bool operator==(const MSeries& a, const MSeries& b)
{
    return a.window_ == b.window_ && a.coeffs_ == b.coeffs_;
}

std::string MSeries::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for_each_term([&](const Degree& d, const EPoly& c) {
        os << (first ? "" : "\n") << "q^" << degree_string(d) << ": " << c.to_string();
        first = false;
    });
    if (first)
        os << "0";
    return os.str();
}

MSeries series_monomial(const Window& window, const Degree& d, const EPoly& c)
{
    MSeries out(window);
    out.add_term(d, c);
    return out;
}

void check_monomial(const Degree& m)
{
    bool positive = false;
    for (int e : m) {
        if (e < 0)
            throw InvalidMonomial("monomial exponent " + degree_string(m) + " has a negative entry");
        positive = positive || e > 0;
    }
    if (!positive)
        throw InvalidMonomial("monomial exponent " + degree_string(m) + " is zero");
}

MSeries geometric_inverse(const Window& window, const EPoly& c, const Degree& m)
{
    check_monomial(m);
    if (static_cast<int>(m.size()) != window.vars())
        throw WindowMismatch("monomial has " + std::to_string(m.size()) + " variables, window has " +
                             std::to_string(window.vars()));
    MSeries out(window);
    EPoly power(1);
    Degree d(m.size(), 0);
    for (int k = 0;; ++k) {
        bool beyond = false;
        for (std::size_t i = 0; i < m.size(); ++i) {
            d[i] = k * m[i];
            beyond = beyond || d[i] > window.hi()[i];
        }
        if (beyond)
            break;
        out.add_term(d, power);
        power *= c;
    }
    return out;
}

} // namespace hq
