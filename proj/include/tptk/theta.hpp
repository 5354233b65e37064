#ifndef TPTK_THETA_HPP
#define TPTK_THETA_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tptk/interval.hpp"
#include "tptk/polynomial.hpp"
#include "tptk/quotients.hpp"
#include "tptk/rational.hpp"
#include "tptk/seqcore.hpp"

namespace tptk {

struct PrecisionConfig {
    long bits = 128;  // base working precision; certificates auto-scale with n
};

// S_n^q(x, a) = 1 - x + sum_{k=2}^n (-1)^k x^k / (a^{k(k-1)} q_2^{k-1} ... q_k).
// With q == nullptr all quotients are 1 and this is S_n(x, a). Only a^2 enters
// (the exponent k(k-1) is even), so the rational-x evaluation is exact.
Rational eval_partial_sum_exact(int n, const Rational& x, const Rational& a_squared,
                                const SecondQuotients* q);
Interval eval_partial_sum(int n, const Interval& x, const Rational& a_squared,
                          const SecondQuotients* q, const PrecisionConfig& prec);

// The degree-n polynomial S_n^q(x, a) in x, exact rational coefficients.
Polynomial partial_sum_polynomial(int n, const Rational& a_squared, const SecondQuotients* q);

// Smallest root of x/a^3 + a^3/x = a^3/2, i.e. (a^6/4)(1 - sqrt(1 - 16/a^6)).
// Requires (a^2 - 1)^2 >= 5 (a^2 >= 1 + sqrt 5).
Interval x0(const Rational& a_squared, const PrecisionConfig& prec);

// hat x_m = a^{2m-3} q_2 ... q_{m-1} sqrt(q_m), m >= 3.
Interval hat_x(int m, const Rational& a_squared, const SecondQuotients& q,
               const PrecisionConfig& prec);

// Endpoint test value a^{2n-2} q_2 ... q_n (exact: even power of a).
Rational endpoint_value(int n, const Rational& a_squared, const SecondQuotients& q);

enum class PointRole { Unit, X0, Hat, Endpoint };
enum class Verdict { Pass, Fail, Inconclusive };

struct ThetaPoint {
    PointRole role = PointRole::Unit;
    int m = 0;  // index for Hat points
    Interval x;
    int expected_sign = 1;
    Interval value;                        // enclosure of S_n^q at x
    std::optional<Rational> exact_value;   // set for rational points
    int observed_sign = 0;                 // 0 = enclosure straddles zero
};

struct AlternationCertificate {
    int n = 0;
    Rational a_squared;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<ThetaPoint> points;  // ordered: 1, x0, hat x_3..hat x_n, endpoint
    std::optional<int> cross_check_root_count;
    std::string note;
};

// Evaluates S_n^q at the n+1 ordered test points and checks the alternating
// sign pattern (+, -, +, ...). A pass certifies n positive real zeros of the
// degree-n partial sum. With cross_check the exact Sturm positive-root count
// is recorded as well.
AlternationCertificate sign_alternation_certificate(int n, const Rational& a_squared,
                                                    const SecondQuotients& q,
                                                    const PrecisionConfig& prec,
                                                    bool cross_check = false);

struct Th3Report {
    Rational a_squared;
    int n_max = 0;
    std::vector<AlternationCertificate> certificates;  // n = 4..n_max
    std::vector<Rational> convolved_coeffs;            // coefficients of f * g_a
    bool all_pass = false;
    bool any_fail = false;
};

// Normalizes the materialized sequence, extracts its quotients, and runs the
// alternation certificate for every n in 4..n_max.
Th3Report verify_th3(const SequenceSpec& spec, const Rational& a_squared, int n_max,
                     const PrecisionConfig& prec, bool cross_check = false);

struct LemmaBound {
    std::string name;
    bool in_range = false;         // whether a^2 is in the bound's stated domain
    std::optional<Interval> value;
    int sign = 0;
};

// Numeric enclosures for the lemma bound expressions at a given a^2 and
// quotient triple (q_{m-1}, q_m, q_{m+1}).
std::vector<LemmaBound> lemma_bounds_report(const Rational& a_squared,
                                            const std::array<Rational, 3>& q_triple,
                                            const PrecisionConfig& prec);

enum class ThresholdName { QInfinity, A0Squared, Ll13Root };

struct ThresholdReport {
    std::string name;
    Rational lo;         // final bracket, in the reported variable
    Rational hi;
    Rational estimate;   // midpoint, estimate in [lo, hi]
    Rational tolerance;  // hi - lo <= 2 * tolerance
    int iterations = 0;
    int trunc_degree = 0;             // q_infinity only
    std::string tail_guard;           // q_infinity only
    std::optional<Rational> estimate_squared;  // ll13_root only
};

// q_infinity: bisection on a^2 over the real-rootedness transition of the
//   degree-N truncation of g_a (exact Sturm decision at each candidate).
// a0_squared: root of the (b14)-style expression, reported as a^2.
// ll13_root:  root of the (c2)-style expression, reported as a.
ThresholdReport estimate_constant(ThresholdName name, const Rational& tol,
                                  int trunc_degree = 40);

}  // namespace tptk

#endif
