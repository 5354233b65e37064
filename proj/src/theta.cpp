#include "tptk/theta.hpp"

#include <cmath>
#include <stdexcept>

#include "tptk/polynomial.hpp"
#include "tptk/realroots.hpp"

namespace tptk {

namespace {

void check_a_squared(const Rational& a_squared) {
    if (a_squared <= 1) throw std::invalid_argument("a_squared must exceed 1");
}

void check_quotient_range(int n, const SecondQuotients* q) {
    if (n >= 2 && q && q->n_max() < n)
        throw std::invalid_argument("quotients must cover indices 2..n");
}

// certificate precision grows with n so that the huge endpoint magnitudes
// keep enough relative headroom
mpfr_prec_t scaled_precision(const PrecisionConfig& prec, int n) {
    long bits = prec.bits + 8L * n;
    return static_cast<mpfr_prec_t>(bits);
}

bool is_real_rooted(const Polynomial& p) {
    std::optional<Rational> none;
    int distinct = sturm_count_distinct(p, none, none);
    if (distinct == p.degree()) return true;
    return sturm_count(p, none, none) == p.degree();
}

// tolerance-driven rational bisection on an exact sign predicate
template <typename Pred>
std::pair<Rational, Rational> bisect(Rational lo, Rational hi, const Rational& width,
                                     Pred holds_above, int& iterations) {
    bool at_lo = holds_above(lo);
    bool at_hi = holds_above(hi);
    if (at_lo == at_hi)
        throw std::domain_error("bisection bracket endpoints do not straddle the transition");
    iterations = 0;
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        if (holds_above(mid) == at_hi)
            hi = mid;
        else
            lo = mid;
        ++iterations;
    }
    return {lo, hi};
}

}  // namespace

Rational eval_partial_sum_exact(int n, const Rational& x, const Rational& a_squared,
                                const SecondQuotients* q) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    check_a_squared(a_squared);
    check_quotient_range(n, q);
    Rational sum(1);
    Rational term(1);
    Rational pow_a2(1);   // (a^2)^{k-1}
    Rational q_prod(1);   // q_2 ... q_k
    for (int k = 1; k <= n; ++k) {
        // term_k = -term_{k-1} * x / (a^{2(k-1)} q_2 ... q_k)
        if (q && k >= 2) q_prod *= q->at(k);
        term = -term * x / (pow_a2 * q_prod);
        sum += term;
        pow_a2 *= a_squared;
    }
    return sum;
}

Interval eval_partial_sum(int n, const Interval& x, const Rational& a_squared,
                          const SecondQuotients* q, const PrecisionConfig& prec) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    check_a_squared(a_squared);
    check_quotient_range(n, q);
    mpfr_prec_t bits = scaled_precision(prec, n);
    Interval sum = Interval::exact_int(1, bits);
    Interval term = Interval::exact_int(1, bits);
    Rational pow_a2(1);
    Rational q_prod(1);
    for (int k = 1; k <= n; ++k) {
        if (q && k >= 2) q_prod *= q->at(k);
        term = -(term * x) / Interval::from_rational(pow_a2 * q_prod, bits);
        sum = sum + term;
        pow_a2 *= a_squared;
    }
    return sum;
}

Polynomial partial_sum_polynomial(int n, const Rational& a_squared, const SecondQuotients* q) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    check_a_squared(a_squared);
    check_quotient_range(n, q);
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    Rational cur(1);
    Rational pow_a2(1);
    Rational q_prod(1);
    for (int k = 0; k <= n; ++k) {
        coeffs[static_cast<std::size_t>(k)] = cur;
        if (q && k + 1 >= 2 && k + 1 <= n) q_prod *= q->at(k + 1);
        cur = -cur / (pow_a2 * q_prod);
        pow_a2 *= a_squared;
    }
    return Polynomial(std::move(coeffs));
}

Interval x0(const Rational& a_squared, const PrecisionConfig& prec) {
    check_a_squared(a_squared);
    Rational margin = (a_squared - 1) * (a_squared - 1);
    if (margin < 5)
        throw std::domain_error("x0 requires a^2 >= 1 + sqrt 5");
    mpfr_prec_t bits = static_cast<mpfr_prec_t>(prec.bits);
    Rational a6 = a_squared * a_squared * a_squared;
    Interval one = Interval::exact_int(1, bits);
    Interval radicand = one - Interval::from_rational(Rational(16) / a6, bits);
    Interval root = radicand.sqrt();
    return Interval::from_rational(a6 / 4, bits) * (one - root);
}

Interval hat_x(int m, const Rational& a_squared, const SecondQuotients& q,
               const PrecisionConfig& prec) {
    if (m < 3) throw std::invalid_argument("hat_x requires m >= 3");
    check_a_squared(a_squared);
    if (q.n_max() < m) throw std::invalid_argument("quotients must cover index m");
    mpfr_prec_t bits = scaled_precision(prec, m);
    // a^{2m-3} = (a^2)^{m-2} * sqrt(a^2)
    Rational even_part(1);
    for (int i = 0; i < m - 2; ++i) even_part *= a_squared;
    for (int j = 2; j <= m - 1; ++j) even_part *= q.at(j);
    Interval out = Interval::from_rational(even_part, bits);
    out = out * Interval::from_rational(a_squared, bits).sqrt();
    out = out * Interval::from_rational(q.at(m), bits).sqrt();
    return out;
}

Rational endpoint_value(int n, const Rational& a_squared, const SecondQuotients& q) {
    check_a_squared(a_squared);
    if (q.n_max() < n) throw std::invalid_argument("quotients must cover index n");
    Rational out(1);
    for (int i = 0; i < n - 1; ++i) out *= a_squared;
    for (int j = 2; j <= n; ++j) out *= q.at(j);
    return out;
}

AlternationCertificate sign_alternation_certificate(int n, const Rational& a_squared,
                                                    const SecondQuotients& q,
                                                    const PrecisionConfig& prec,
                                                    bool cross_check) {
    if (n < 4) throw std::invalid_argument("certificate requires n >= 4");
    check_a_squared(a_squared);
    if (q.n_max() < n) throw std::invalid_argument("quotients must cover indices 2..n");

    AlternationCertificate cert;
    cert.n = n;
    cert.a_squared = a_squared;
    mpfr_prec_t bits = scaled_precision(prec, n);
    PrecisionConfig scaled{static_cast<long>(bits)};

    auto add_exact_point = [&](PointRole role, const Rational& x, int expected) {
        ThetaPoint pt;
        pt.role = role;
        pt.x = Interval::from_rational(x, bits);
        pt.expected_sign = expected;
        Rational v = eval_partial_sum_exact(n, x, a_squared, &q);
        pt.exact_value = v;
        pt.value = Interval::from_rational(v, bits);
        pt.observed_sign = sgn(v);
        cert.points.push_back(std::move(pt));
    };
    auto add_enclosed_point = [&](PointRole role, int m, Interval x, int expected) {
        ThetaPoint pt;
        pt.role = role;
        pt.m = m;
        pt.value = eval_partial_sum(n, x, a_squared, &q, scaled);
        pt.x = std::move(x);
        pt.expected_sign = expected;
        pt.observed_sign = pt.value.sign();
        cert.points.push_back(std::move(pt));
    };

    add_exact_point(PointRole::Unit, Rational(1), 1);
    add_enclosed_point(PointRole::X0, 0, x0(a_squared, scaled), -1);
    for (int m = 3; m <= n; ++m)
        add_enclosed_point(PointRole::Hat, m, hat_x(m, a_squared, q, scaled),
                           (m - 1) % 2 == 0 ? 1 : -1);
    add_exact_point(PointRole::Endpoint, endpoint_value(n, a_squared, q), n % 2 == 0 ? 1 : -1);

    for (std::size_t i = 0; i + 1 < cert.points.size(); ++i)
        if (!cert.points[i].x.strictly_below(cert.points[i + 1].x))
            throw std::domain_error("certificate points are not strictly increasing");

    cert.verdict = Verdict::Pass;
    for (const auto& pt : cert.points) {
        if (pt.observed_sign == 0) {
            if (cert.verdict == Verdict::Pass) cert.verdict = Verdict::Inconclusive;
            cert.note = "an enclosure straddles zero at the configured precision";
        } else if (pt.observed_sign != pt.expected_sign) {
            cert.verdict = Verdict::Fail;
            cert.note = "sign mismatch in the alternation pattern";
            break;
        }
    }

    if (cross_check) {
        Polynomial p = partial_sum_polynomial(n, a_squared, &q);
        std::optional<Rational> zero(Rational(0));
        std::optional<Rational> none;
        cert.cross_check_root_count = sturm_count(p, zero, none);
    }
    return cert;
}

Th3Report verify_th3(const SequenceSpec& spec, const Rational& a_squared, int n_max,
                     const PrecisionConfig& prec, bool cross_check) {
    if (n_max < 4) throw std::invalid_argument("verify_th3 requires n_max >= 4");
    CoefficientSequence raw = materialize(spec, n_max);
    for (const auto& c : raw.coeffs)
        if (c <= 0)
            throw std::invalid_argument("verify_th3 requires strictly positive coefficients");
    CoefficientSequence seq = normalize(raw);
    SecondQuotients q = second_quotients(seq, n_max);

    Th3Report report;
    report.a_squared = a_squared;
    report.n_max = n_max;

    // coefficients of f * g_a: a_k / a^{k(k-1)}
    CoefficientSequence theta_seq =
        materialize(SequenceSpec{PartialThetaSpec{a_squared}}, n_max);
    report.convolved_coeffs = hadamard(seq, theta_seq).coeffs;

    report.all_pass = true;
    for (int n = 4; n <= n_max; ++n) {
        report.certificates.push_back(
            sign_alternation_certificate(n, a_squared, q, prec, cross_check));
        const auto& cert = report.certificates.back();
        if (cert.verdict != Verdict::Pass) report.all_pass = false;
        if (cert.verdict == Verdict::Fail) report.any_fail = true;
    }
    return report;
}

std::vector<LemmaBound> lemma_bounds_report(const Rational& a_squared,
                                            const std::array<Rational, 3>& q_triple,
                                            const PrecisionConfig& prec) {
    check_a_squared(a_squared);
    for (const auto& qv : q_triple)
        if (qv <= 0) throw std::invalid_argument("quotients must be positive");
    mpfr_prec_t bits = static_cast<mpfr_prec_t>(prec.bits);
    const Rational& q_lo = q_triple[0];
    const Rational& q_m = q_triple[1];
    const Rational& q_hi = q_triple[2];

    auto rat = [&](const Rational& r) { return Interval::from_rational(r, bits); };
    Interval one = Interval::exact_int(1, bits);
    Interval a = rat(a_squared).sqrt();
    Interval a4 = rat(a_squared * a_squared);

    std::vector<LemmaBound> bounds;

    {  // A = 8(a^2 - 2)/a^4, stated for 3 < a^2 < 4
        LemmaBound b;
        b.name = "A";
        b.in_range = a_squared > 3 && a_squared < 4;
        Rational v = 8 * (a_squared - 2) / (a_squared * a_squared);
        b.value = rat(v);
        b.sign = sgn(v);
        bounds.push_back(std::move(b));
    }
    {  // (L6) right side
        LemmaBound b;
        b.name = "L6_rhs";
        b.in_range = true;
        Interval sqrt_qm = rat(q_m).sqrt();
        Interval inv_pair = rat(1 / q_hi + 1 / q_lo);
        Interval a9 = a4 * a4 * a;  // a^9
        Interval qm32 = rat(q_m) * sqrt_qm;
        Interval v = one - rat(Rational(2)) / (a * sqrt_qm) +
                     inv_pair / (a4 * rat(q_m)) - inv_pair * inv_pair / (a9 * qm32);
        b.sign = v.sign();
        b.value = std::move(v);
        bounds.push_back(std::move(b));
    }
    {  // (b14) right side, stated for 3 < a^2 < 4
        LemmaBound b;
        b.name = "b14_rhs";
        b.in_range = a_squared > 3 && a_squared < 4;
        Rational a2 = a_squared;
        Rational even = 1 + 8 / (a2 * a2 * a2) - 16 / (a2 * a2 * a2 * a2);
        Rational odd = -2 - 8 / (a2 * a2 * a2 * a2 * a2 * a2) +
                       32 / (a2 * a2 * a2 * a2 * a2 * a2 * a2) -
                       32 / (a2 * a2 * a2 * a2 * a2 * a2 * a2 * a2);
        // value = even + odd / a
        Interval v = rat(even) + rat(odd) / a;
        b.sign = v.sign();
        b.value = std::move(v);
        bounds.push_back(std::move(b));
    }
    {  // (c2) right side
        LemmaBound b;
        b.name = "c2_rhs";
        b.in_range = true;
        Rational a2 = a_squared;
        // 1 - 2/a + 1/(4 a^2) - 1/(16 a^5) = (1 + 1/(4a^2)) + (-2 - 1/(16 a^4)) / a
        Rational even = 1 + 1 / (4 * a2);
        Rational odd = -2 - 1 / (16 * a2 * a2);
        Interval v = rat(even) + rat(odd) / a;
        b.sign = v.sign();
        b.value = std::move(v);
        bounds.push_back(std::move(b));
    }
    bool x0_domain = (a_squared - 1) * (a_squared - 1) >= 5;
    if (x0_domain) {
        PrecisionConfig cfg{static_cast<long>(bits)};
        Interval x = x0(a_squared, cfg);
        Interval a10 = a4 * a4 * rat(a_squared);
        {  // (e1): x0/a^4 - 2 x0^2 / a^10
            LemmaBound b;
            b.name = "e1";
            b.in_range = true;
            Interval v = x / a4 - rat(Rational(2)) * x * x / a10;
            b.sign = v.sign();
            b.value = std::move(v);
            bounds.push_back(std::move(b));
        }
        {  // (e2): 1 - 2 x0/a^4 + 2 x0^2 / a^10
            LemmaBound b;
            b.name = "e2";
            b.in_range = true;
            Interval v = one - rat(Rational(2)) * x / a4 + rat(Rational(2)) * x * x / a10;
            b.sign = v.sign();
            b.value = std::move(v);
            bounds.push_back(std::move(b));
        }
    } else {
        for (const char* name : {"e1", "e2"}) {
            LemmaBound b;
            b.name = name;
            b.in_range = false;
            bounds.push_back(std::move(b));
        }
    }
    return bounds;
}

ThresholdReport estimate_constant(ThresholdName name, const Rational& tol, int trunc_degree) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    ThresholdReport report;
    report.tolerance = tol;

    switch (name) {
        case ThresholdName::QInfinity: {
            if (trunc_degree < 8) throw std::invalid_argument("truncation degree too small");
            report.name = "q_infinity";
            report.trunc_degree = trunc_degree;
            // fixed bracket: paper approximation with ~5% margins
            Rational lo(307, 100), hi(17, 5);
            auto truncation_real_rooted = [&](const Rational& a2) {
                Polynomial p = partial_sum_polynomial(trunc_degree, a2, nullptr);
                return is_real_rooted(p);
            };
            auto bracket =
                bisect(lo, hi, 2 * tol, truncation_real_rooted, report.iterations);
            report.lo = bracket.first;
            report.hi = bracket.second;
            report.estimate = (report.lo + report.hi) / 2;
            // first omitted term of the alternating sum at x = 1
            double guard_exp = -(static_cast<double>(trunc_degree) *
                                 (trunc_degree + 1) / 2.0) *
                               std::log10(mpq_get_d(lo.get_mpq_t()));
            report.tail_guard = "first omitted term at x=1 ~ 10^" +
                                std::to_string(static_cast<long>(guard_exp));
            break;
        }
        case ThresholdName::A0Squared: {
            report.name = "a0_squared";
            // root of a^17 - 2a^16 + 8a^11 - 16a^9 - 8a^4 + 32a^2 - 32,
            // the (b14) expression cleared of its a^17 denominator
            std::vector<Rational> c(18, Rational(0));
            c[17] = 1; c[16] = -2; c[11] = 8; c[9] = -16; c[4] = -8; c[2] = 32; c[0] = -32;
            Polynomial p{std::move(c)};
            auto positive_side = [&](const Rational& a) { return p(a) > 0; };
            // bisect in a until the bracket in a^2 is within tolerance
            Rational lo(9, 5), hi(19, 10);
            report.iterations = 0;
            bool at_hi = positive_side(hi);
            if (positive_side(lo) == at_hi)
                throw std::domain_error("bisection bracket endpoints do not straddle the transition");
            while (hi * hi - lo * lo > 2 * tol) {
                Rational mid = (lo + hi) / 2;
                if (positive_side(mid) == at_hi)
                    hi = mid;
                else
                    lo = mid;
                ++report.iterations;
            }
            report.lo = lo * lo;
            report.hi = hi * hi;
            report.estimate = (report.lo + report.hi) / 2;
            break;
        }
        case ThresholdName::Ll13Root: {
            report.name = "ll13_root";
            // root of 16a^5 - 32a^4 + 4a^3 - 1, the (c2) expression cleared
            // of its 16a^5 denominator
            std::vector<Rational> c(6, Rational(0));
            c[5] = 16; c[4] = -32; c[3] = 4; c[0] = -1;
            Polynomial p{std::move(c)};
            auto positive_side = [&](const Rational& a) { return p(a) > 0; };
            auto bracket = bisect(Rational(9, 5), Rational(39, 20), 2 * tol, positive_side,
                                  report.iterations);
            report.lo = bracket.first;
            report.hi = bracket.second;
            report.estimate = (report.lo + report.hi) / 2;
            report.estimate_squared = report.estimate * report.estimate;
            break;
        }
    }
    return report;
}

}  // namespace tptk
