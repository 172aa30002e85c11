#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "annigraph/error.hpp"

namespace annigraph {

using BigInt = boost::multiprecision::cpp_int;

// Exact integer polynomials: arithmetic, Sturm-sequence real root isolation
// (exact root counts, bisection to a requested width), and the
// Faddeev-LeVerrier characteristic polynomial of an integer matrix.

class IntPoly {
public:
    IntPoly() = default;  // zero polynomial
    explicit IntPoly(std::vector<BigInt> coeffs);          // coeffs[k] multiplies x^k
    explicit IntPoly(const std::vector<std::int64_t>& coeffs);

    static IntPoly x_power(int k);  // x^k

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const BigInt& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    const BigInt& leading() const { return c_.back(); }
    const std::vector<BigInt>& coeffs() const { return c_; }

    BigInt eval(const BigInt& x) const;
    /// Exact sign of f(num / 2^log2den).
    int sign_at_dyadic(const BigInt& num, int log2den) const;

    IntPoly derivative() const;
    BigInt content() const;      // gcd of coefficients, non-negative
    IntPoly primitive() const;   // divided by the (positive) content

    /// Decimal strings, constant term first (safe for JSON consumers).
    std::vector<std::string> coeff_strings() const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const BigInt& s, const IntPoly& a);
    bool operator==(const IntPoly&) const = default;

private:
    void trim();
    std::vector<BigInt> c_;
};

IntPoly poly_pow(const IntPoly& f, int e);

/// Exact quotient; throws if b does not divide a in Z[x].
IntPoly poly_divide_exact(const IntPoly& a, const IntPoly& b);

/// Primitive-PRS gcd, normalized to a positive leading coefficient.
IntPoly poly_gcd(IntPoly a, IntPoly b);

bool is_squarefree(const IntPoly& f);

/// Dyadic rational num / 2^log2den; the exact endpoints of bisection.
struct Dyadic {
    BigInt num;
    int log2den = 0;

    static Dyadic from_double(double x);
    double to_double() const;
};

/// Canonical Sturm chain of f (sign-safe pseudo-remainders).
std::vector<IntPoly> sturm_chain(const IntPoly& f);

/// Exact number of distinct real roots of f in the half-open interval (a, b].
int sturm_count(const std::vector<IntPoly>& chain, const Dyadic& a, const Dyadic& b);
int sturm_count(const IntPoly& f, double a, double b);

/// Distinct real roots of a squarefree f in the closed interval [lo, hi],
/// ascending, each within tol of the true root; the count is exact.
/// Throws NotSquarefree when gcd(f, f') is non-constant.
std::vector<double> real_roots(const IntPoly& f, double lo, double hi, double tol);

/// Real roots with multiplicities for arbitrary nonzero f.
std::vector<std::pair<double, int>> real_roots_with_multiplicity(const IntPoly& f, double lo,
                                                                 double hi, double tol);

/// det(xI - M) by the Faddeev-LeVerrier recurrence, exact.
IntPoly charpoly(const std::vector<std::vector<std::int64_t>>& m);
IntPoly charpoly_big(const std::vector<std::vector<BigInt>>& m);

}  // namespace annigraph
