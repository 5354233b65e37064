#ifndef TPTK_SEQCORE_HPP
#define TPTK_SEQCORE_HPP

#include <memory>
#include <variant>
#include <vector>

#include "tptk/rational.hpp"

namespace tptk {

struct SequenceSpec;
using SpecPtr = std::shared_ptr<const SequenceSpec>;

// Explicit coefficient list; indices beyond the list are zero.
struct ExplicitSpec {
    std::vector<Rational> coeffs;
};

// a_0, a_1 given; a_n for n >= 2 determined by the second quotients
// q_n = a_{n-1}^2 / (a_{n-2} a_n). q[0] is q_2.
struct FromQuotientsSpec {
    std::vector<Rational> q;
    Rational a0;
    Rational a1;
};

// P(z) / (1 - beta z)^m with P given by its coefficient list.
struct RationalGFSpec {
    std::vector<Rational> numerator;
    Rational beta;
    int pole_order = 1;
};

// C z^shift e^{gamma z} prod (1 + alpha_k z) / prod (1 - beta_k z),
// finite factor lists. With gamma > 0 the materialization is a truncated
// series prefix, exact up to the requested horizon.
struct AsweFiniteSpec {
    Rational c;
    int shift = 0;
    std::vector<Rational> alphas;
    std::vector<Rational> betas;
    Rational gamma;
};

// Coefficients 1 / (a^2)^{k(k-1)/2}; only a^2 is stored, k(k-1) is even.
struct PartialThetaSpec {
    Rational a_squared;
};

struct ExponentialSpec {};

// Coefficients c beta^k.
struct GeometricSpec {
    Rational c;
    Rational beta;
};

struct HadamardSpec {
    SpecPtr left;
    SpecPtr right;
};

// Zeroes out coefficients below index l, keeping absolute indexing.
struct RemainderSpec {
    SpecPtr inner;
    int l = 0;
};

// Coefficient k becomes k * a_k.
struct DerivativeSpec {
    SpecPtr inner;
};

struct SequenceSpec {
    std::variant<ExplicitSpec, FromQuotientsSpec, RationalGFSpec, AsweFiniteSpec,
                 PartialThetaSpec, ExponentialSpec, GeometricSpec, HadamardSpec,
                 RemainderSpec, DerivativeSpec>
        value;
};

SpecPtr make_spec(SequenceSpec spec);

struct CoefficientSequence {
    std::vector<Rational> coeffs;  // indices 0..horizon
    SpecPtr source;

    int horizon() const { return static_cast<int>(coeffs.size()) - 1; }
    const Rational& at(int k) const { return coeffs.at(static_cast<std::size_t>(k)); }
};

// Exact materialization of the first horizon+1 coefficients.
CoefficientSequence materialize(const SequenceSpec& spec, int horizon);
CoefficientSequence materialize(const SpecPtr& spec, int horizon);

// Termwise product; both operands must share the horizon.
CoefficientSequence hadamard(const CoefficientSequence& a, const CoefficientSequence& b);

// R_l: zeroes indices 0..l-1, no index shift.
CoefficientSequence remainder(const CoefficientSequence& a, int l);

// Coefficient k becomes k * a_k.
CoefficientSequence derivative_weights(const CoefficientSequence& a);

// g_k = a_k a_0^{k-1} / a_1^k; forces g_0 = g_1 = 1 and preserves the
// second quotients. Requires a_0 > 0 and a_1 > 0.
CoefficientSequence normalize(const CoefficientSequence& a);

}  // namespace tptk

#endif
