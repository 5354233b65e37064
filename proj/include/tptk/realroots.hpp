#ifndef TPTK_REALROOTS_HPP
#define TPTK_REALROOTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "tptk/polynomial.hpp"
#include "tptk/rational.hpp"

namespace tptk {

struct RootReport {
    int degree = 0;
    int real_root_count_total = 0;        // with multiplicity
    int real_root_count_nonpositive = 0;  // roots in (-inf, 0], with multiplicity
    int real_root_count_positive = 0;
    bool real_rooted = false;         // total == degree
    bool nonpositive_rooted = false;  // nonpositive == degree
    bool all_simple = false;          // squarefree defect check
};

RootReport is_real_rooted_nonpositive(const Polynomial& p);

struct RationalGF {
    Polynomial numerator;  // P, nonnegative coefficients
    Rational beta;         // pole at 1/beta, beta > 0
    int pole_order = 1;    // m
};

struct PoleFactor {
    Rational beta;
    int multiplicity = 1;
};

// P(z) / prod (1 - beta_i z)^{m_i}; used to express generating functions with
// several distinct poles, which the single-pole form cannot represent.
struct MeromorphicGF {
    Polynomial numerator;
    std::vector<PoleFactor> poles;
};

// Q(z) = P'(z)(1 - beta z) + m beta P(z), the numerator of B' for
// B = P / (1 - beta z)^m.
Polynomial derivative_numerator(const RationalGF& gf);

// Numerator of B' for the multi-pole form, after cancelling the common
// denominator factor: N = P' D - P D' with D = prod (1 - beta_i z)^{m_i},
// then divided by the shared prod (1 - beta_i z)^{m_i - 1}.
Polynomial derivative_numerator(const MeromorphicGF& gf);

enum class St1Case { EntireLPI, RationalOK, NotApplicable };

struct PositiveRootWitness {
    Rational lo;
    Rational hi;
    std::optional<Rational> exact;
};

struct TheoremSt1Verdict {
    St1Case st1_case = St1Case::NotApplicable;
    std::string reason;
    std::optional<Polynomial> derivative_num;
    bool derivative_preserved = false;
    std::optional<PositiveRootWitness> positive_root;  // witness when not preserved
};

TheoremSt1Verdict classify_theorem_st1(const Polynomial& p);
TheoremSt1Verdict classify_theorem_st1(const RationalGF& gf);
TheoremSt1Verdict classify_theorem_st1(const MeromorphicGF& gf);

// True iff sum gamma_k z^k / k! is nonzero with all roots real and of one
// sign (zero roots are compatible with either sign).
bool finite_multiplier_check(const std::vector<Rational>& gammas);

struct PowerSumIdentityReport {
    Rational sum_inv;         // sum 1/x_k
    Rational sum_inv_sq;      // sum 1/x_k^2
    Rational sum_inv_cube;    // sum 1/x_k^3
    Rational residue1, residue2, residue3;  // Newton-route minus closed-form
};

// Requires p nonpositive-rooted with p(0) > 0 (roots -x_k, x_k > 0).
PowerSumIdentityReport root_power_sum_identities(const Polynomial& p);

}  // namespace tptk

#endif
