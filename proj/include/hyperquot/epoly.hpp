#pragma once

// E-polynomial realization of the Grothendieck ring of varieties:
// Laurent polynomials in u, v with exact integer coefficients. The class of
// the affine line is L = uv.

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperquot/profile.hpp"

namespace hq {

using Integer = boost::multiprecision::cpp_int;

struct Term {
    int pu = 0;
    int pv = 0;
    Integer c;

    friend bool operator==(const Term&, const Term&) = default;
};

class EPoly {
public:
    EPoly() = default;
    EPoly(long long c); // NOLINT(google-explicit-constructor): integers embed as constants
    explicit EPoly(Integer c);

    /// Builds a normalized polynomial: terms are sorted, duplicates merged, zeros dropped.
    static EPoly from_terms(std::vector<Term> terms);
    static EPoly monomial(int pu, int pv, Integer c = 1);
    /// L^k = u^k v^k, k may be negative.
    static EPoly lefschetz(int k) { return monomial(k, k); }

    /// Terms sorted lexicographically by (pu, pv); no zero coefficients.
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    Integer coefficient(int pu, int pv) const;

    /// Degree in L = uv: the largest exponent of either variable over the
    /// support, which is the dimension for the class of a variety. nullopt for zero.
    std::optional<int> total_degree() const;
    /// Smallest exponent of either variable; nullopt for zero.
    std::optional<int> min_exponent() const;
    bool has_nonnegative_exponents() const;
    /// (uv)^D E(1/u, 1/v)
    EPoly dual(int degree) const;
    bool is_palindromic(int degree) const { return dual(degree) == *this; }

    EPoly& operator+=(const EPoly& other);
    EPoly& operator-=(const EPoly& other);
    EPoly& operator*=(const EPoly& other);
    /// this += a * b without materializing the product twice.
    void add_product(const EPoly& a, const EPoly& b);

    friend EPoly operator+(EPoly a, const EPoly& b) { return a += b; }
    friend EPoly operator-(EPoly a, const EPoly& b) { return a -= b; }
    friend EPoly operator*(const EPoly& a, const EPoly& b);
    friend EPoly operator-(EPoly a);
    friend bool operator==(const EPoly&, const EPoly&) = default;

    EPoly pow(unsigned k) const;

    /// e.g. "1 - 2*u - 2*v + u*v"
    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

/// Univariate Laurent polynomial with integer coefficients, used for the
/// Poincare (variable z) and chi_y (variable y) specializations.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly from_terms(std::vector<std::pair<int, Integer>> terms);

    std::span<const std::pair<int, Integer>> terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Integer coefficient(int e) const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    std::string to_string(char var = 'z') const;

private:
    std::vector<std::pair<int, Integer>> terms_;
};

enum class Specialization { euler, poincare, chi_y };

/// E(1, 1): the topological Euler characteristic.
Integer specialize_euler(const EPoly& a);
/// E(-z, -z): the Poincare polynomial. Throws NegativeExponent on Laurent input.
LaurentPoly specialize_poincare(const EPoly& a);
/// E(y, 1): the chi_{-y} genus. Throws NegativeExponent on Laurent input.
LaurentPoly specialize_chi_y(const EPoly& a);
/// Dispatch; the euler value is returned as a constant polynomial.
LaurentPoly specialize(const EPoly& a, Specialization target);

/// [G(d, r)], the Gaussian binomial in L. Throws InvalidRange unless 0 <= d <= r.
EPoly grassmannian_motive(int d, int r);
/// [Flag(s, r)] = prod_{k<=r}(L^k - 1) / prod_j prod_{k <= r_j - r_{j+1}} (L^k - 1).
EPoly flag_motive(const NestingProfile& profile);

} // namespace hq
