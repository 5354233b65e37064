#ifndef TPTK_POLYNOMIAL_HPP
#define TPTK_POLYNOMIAL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "tptk/rational.hpp"

namespace tptk {

/// Dense univariate polynomial with exact rational coefficients.
/// coeff(k) is the coefficient of z^k; trailing zeros are stripped on
/// construction so degree() is well defined (-1 for the zero polynomial).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational& c);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int k) const;
    const Rational& leading() const;

    Rational operator()(const Rational& x) const;

    Polynomial derivative() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Rational& scalar) const;
    Polynomial operator-() const;

    // Exact division; throws std::domain_error if the remainder is nonzero.
    Polynomial divide_exact(const Polynomial& divisor) const;

    // Number of leading zero coefficients, i.e. the multiplicity of the root 0.
    int order_at_zero() const;
    // Divides by z^k; requires order_at_zero() >= k.
    Polynomial shift_down(int k) const;

private:
    std::vector<Rational> coeffs_;
};

// Sturm chain over primitive integer polynomials. Positive rescaling of the
// chain members does not affect sign variation counts.
class SturmChain {
public:
    explicit SturmChain(const Polynomial& p);

    int variations_at(const Rational& x) const;
    int variations_at_neg_infinity() const;
    int variations_at_pos_infinity() const;

private:
    std::vector<std::vector<Integer>> chain_;
};

// Distinct real roots of p in (lo, hi]; unset bounds mean -inf / +inf.
int sturm_count_distinct(const Polynomial& p,
                         const std::optional<Rational>& lo,
                         const std::optional<Rational>& hi);

// Real roots counted with multiplicity in (lo, hi], via Yun decomposition.
int sturm_count(const Polynomial& p,
                const std::optional<Rational>& lo,
                const std::optional<Rational>& hi);

// Yun squarefree decomposition: result[i] collects the roots of multiplicity
// i+1; the product of result[i]^(i+1) recovers p up to a constant factor.
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

// p / gcd(p, p'), monic-free (content-normalized) squarefree part.
Polynomial squarefree_part(const Polynomial& p);

// Strict upper bound on the absolute value of every real root.
Rational cauchy_root_bound(const Polynomial& p);

// The rational with the smallest denominator in [lo, hi].
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

// Isolates the smallest root of p in (0, +inf) down to the given bracket
// width. Returns the bracket (lo, hi] plus the exact root when the refined
// bracket pins a rational root. Returns nullopt when p has no positive root.
struct IsolatedRoot {
    Rational lo;
    Rational hi;
    std::optional<Rational> exact;
};
std::optional<IsolatedRoot> isolate_smallest_positive_root(const Polynomial& p,
                                                           const Rational& width);

}  // namespace tptk

#endif
