#include "tptk/realroots.hpp"

#include <stdexcept>

namespace tptk {

namespace {

Polynomial one_minus_beta_z(const Rational& beta) {
    return Polynomial(std::vector<Rational>{Rational(1), -beta});
}

PositiveRootWitness witness_positive_root(const Polynomial& p) {
    auto iso = isolate_smallest_positive_root(p, Rational(1, 1000000000));
    if (!iso) throw std::logic_error("expected a positive root witness");
    return PositiveRootWitness{iso->lo, iso->hi, iso->exact};
}

bool has_negative_coefficient(const Polynomial& p) {
    for (const auto& c : p.coeffs())
        if (c < 0) return true;
    return false;
}

}  // namespace

RootReport is_real_rooted_nonpositive(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("zero polynomial");
    RootReport report;
    report.degree = p.degree();
    if (p.degree() == 0) {
        report.real_rooted = true;
        report.nonpositive_rooted = true;
        report.all_simple = true;
        return report;
    }
    std::optional<Rational> minus_inf, plus_inf;
    Rational zero(0);
    report.real_root_count_total = sturm_count(p, minus_inf, plus_inf);
    report.real_root_count_nonpositive = sturm_count(p, minus_inf, std::optional<Rational>(zero));
    report.real_root_count_positive =
        report.real_root_count_total - report.real_root_count_nonpositive;
    report.real_rooted = report.real_root_count_total == report.degree;
    report.nonpositive_rooted = report.real_root_count_nonpositive == report.degree;
    report.all_simple = squarefree_part(p).degree() == p.degree();
    return report;
}

Polynomial derivative_numerator(const RationalGF& gf) {
    if (gf.pole_order < 1) throw std::invalid_argument("pole_order must be >= 1");
    if (gf.beta <= 0) throw std::invalid_argument("beta must be positive");
    Polynomial term1 = gf.numerator.derivative() * one_minus_beta_z(gf.beta);
    Polynomial term2 = gf.numerator * (gf.beta * Rational(gf.pole_order));
    return term1 + term2;
}

Polynomial derivative_numerator(const MeromorphicGF& gf) {
    if (gf.poles.empty()) return gf.numerator.derivative();
    Polynomial denom = Polynomial::constant(Rational(1));
    for (const auto& pole : gf.poles) {
        if (pole.beta <= 0) throw std::invalid_argument("pole beta must be positive");
        if (pole.multiplicity < 1) throw std::invalid_argument("pole multiplicity must be >= 1");
        Polynomial factor = one_minus_beta_z(pole.beta);
        for (int i = 0; i < pole.multiplicity; ++i) denom = denom * factor;
    }
    Polynomial raw = gf.numerator.derivative() * denom - gf.numerator * denom.derivative();
    // cancel the shared prod (1 - beta_i z)^{m_i - 1}
    for (const auto& pole : gf.poles) {
        Polynomial factor = one_minus_beta_z(pole.beta);
        for (int i = 0; i + 1 < pole.multiplicity; ++i) raw = raw.divide_exact(factor);
    }
    return raw;
}

TheoremSt1Verdict classify_theorem_st1(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    if (has_negative_coefficient(p))
        throw std::invalid_argument("coefficients must be nonnegative");
    TheoremSt1Verdict verdict;
    verdict.derivative_num = p.derivative();
    RootReport report = is_real_rooted_nonpositive(p);
    if (report.nonpositive_rooted) {
        verdict.st1_case = St1Case::EntireLPI;
        verdict.reason = "polynomial with only real nonpositive zeros";
        verdict.derivative_preserved = true;
    } else {
        verdict.st1_case = St1Case::NotApplicable;
        verdict.reason = "polynomial is not nonpositive-rooted, so it is not a TP sequence";
        verdict.derivative_preserved = false;
    }
    return verdict;
}

TheoremSt1Verdict classify_theorem_st1(const RationalGF& gf) {
    if (gf.numerator.is_zero()) throw std::invalid_argument("zero numerator");
    if (has_negative_coefficient(gf.numerator))
        throw std::invalid_argument("numerator coefficients must be nonnegative");
    TheoremSt1Verdict verdict;
    Polynomial q = derivative_numerator(gf);
    verdict.derivative_num = q;

    RootReport p_report = is_real_rooted_nonpositive(gf.numerator);
    if (!p_report.nonpositive_rooted) {
        verdict.st1_case = St1Case::NotApplicable;
        verdict.reason = "numerator P is not nonpositive-rooted";
        verdict.derivative_preserved = false;
        if (is_real_rooted_nonpositive(q).real_root_count_positive > 0)
            verdict.positive_root = witness_positive_root(q);
        return verdict;
    }
    if (gf.numerator.degree() > gf.pole_order) {
        verdict.st1_case = St1Case::NotApplicable;
        verdict.reason = "deg P exceeds the pole order m";
        verdict.derivative_preserved = false;
        if (is_real_rooted_nonpositive(q).real_root_count_positive > 0)
            verdict.positive_root = witness_positive_root(q);
        return verdict;
    }
    verdict.st1_case = St1Case::RationalOK;
    verdict.reason = "P has nonnegative coefficients, only real nonpositive zeros, deg P <= m";
    // the theorem's guaranteed consequence, checked independently
    verdict.derivative_preserved =
        q.is_zero() || is_real_rooted_nonpositive(q).nonpositive_rooted;
    if (!verdict.derivative_preserved)
        verdict.reason += "; unexpectedly, Q is not nonpositive-rooted";
    return verdict;
}

TheoremSt1Verdict classify_theorem_st1(const MeromorphicGF& gf) {
    if (gf.numerator.is_zero()) throw std::invalid_argument("zero numerator");
    if (has_negative_coefficient(gf.numerator))
        throw std::invalid_argument("numerator coefficients must be nonnegative");
    std::vector<PoleFactor> distinct;
    int total_order = 0;
    for (const auto& pole : gf.poles) {
        total_order += pole.multiplicity;
        bool merged = false;
        for (auto& d : distinct)
            if (d.beta == pole.beta) {
                d.multiplicity += pole.multiplicity;
                merged = true;
            }
        if (!merged) distinct.push_back(pole);
    }
    if (distinct.empty())
        return classify_theorem_st1(gf.numerator);
    if (distinct.size() == 1)
        return classify_theorem_st1(
            RationalGF{gf.numerator, distinct[0].beta, distinct[0].multiplicity});

    TheoremSt1Verdict verdict;
    verdict.st1_case = St1Case::NotApplicable;
    verdict.reason = "generating function has more than one distinct pole";
    verdict.derivative_preserved = false;
    Polynomial n = derivative_numerator(gf);
    verdict.derivative_num = n;
    if (!n.is_zero() && is_real_rooted_nonpositive(n).real_root_count_positive > 0)
        verdict.positive_root = witness_positive_root(n);
    return verdict;
}

bool finite_multiplier_check(const std::vector<Rational>& gammas) {
    if (gammas.empty()) throw std::invalid_argument("empty multiplier list");
    std::vector<Rational> coeffs(gammas.size());
    Rational factorial(1);
    for (std::size_t k = 0; k < gammas.size(); ++k) {
        if (k > 0) factorial *= Rational(static_cast<long>(k));
        coeffs[k] = gammas[k] / factorial;
    }
    Polynomial p{std::move(coeffs)};
    if (p.is_zero()) throw std::invalid_argument("all-zero multiplier list");
    int zero_order = p.order_at_zero();
    Polynomial core = p.shift_down(zero_order);
    if (core.degree() == 0) return true;
    RootReport report = is_real_rooted_nonpositive(core);
    if (!report.real_rooted) return false;
    // zero roots were stripped, so "same sign" means all negative or all positive
    return report.real_root_count_nonpositive == core.degree() ||
           report.real_root_count_positive == core.degree();
}

PowerSumIdentityReport root_power_sum_identities(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("zero polynomial");
    const Rational a0 = p.coeff(0);
    if (a0 <= 0) throw std::invalid_argument("requires p(0) > 0");
    if (p.degree() >= 1 && !is_real_rooted_nonpositive(p).nonpositive_rooted)
        throw std::invalid_argument("requires a nonpositive-rooted polynomial");

    // p(z) = a0 prod (1 + z/x_k), so e_j(1/x) = a_j / a0. Power sums of the
    // reciprocals via the Newton recurrence p_j = e1 p_{j-1} - e2 p_{j-2} + ... +- j e_j.
    Rational e1 = p.coeff(1) / a0;
    Rational e2 = p.coeff(2) / a0;
    Rational e3 = p.coeff(3) / a0;
    PowerSumIdentityReport report;
    report.sum_inv = e1;
    report.sum_inv_sq = e1 * report.sum_inv - 2 * e2;
    report.sum_inv_cube = e1 * report.sum_inv_sq - e2 * report.sum_inv + 3 * e3;

    const Rational a1 = p.coeff(1), a2 = p.coeff(2), a3 = p.coeff(3);
    Rational rhs1 = a1 / a0;
    Rational rhs2 = (a1 * a1 - 2 * a2 * a0) / (a0 * a0);
    Rational rhs3 = (3 * a3 * a0 * a0 - 3 * a2 * a1 * a0 + a1 * a1 * a1) / (a0 * a0 * a0);
    report.residue1 = report.sum_inv - rhs1;
    report.residue2 = report.sum_inv_sq - rhs2;
    report.residue3 = report.sum_inv_cube - rhs3;
    return report;
}

}  // namespace tptk
