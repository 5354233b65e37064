#include "tptk/quotients.hpp"

#include <stdexcept>

#include "tptk/polynomial.hpp"
#include "tptk/realroots.hpp"

namespace tptk {

namespace {
const Rational kOne(1);
}

SecondQuotients::SecondQuotients(std::vector<Rational> q) : q_(std::move(q)) {
    for (const auto& v : q_)
        if (v <= 0) throw std::invalid_argument("second quotients must be positive");
}

const Rational& SecondQuotients::at(int n) const {
    if (n == 1) return kOne;  // Lemma convention q_1 = 1
    if (n < 2 || n > n_max()) throw std::out_of_range("second quotient index out of range");
    return q_[static_cast<std::size_t>(n - 2)];
}

SecondQuotients second_quotients(const CoefficientSequence& seq, int n_max) {
    if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");
    if (n_max > seq.horizon()) throw std::invalid_argument("n_max exceeds horizon");
    for (int k = 0; k <= n_max; ++k)
        if (seq.at(k) <= 0)
            throw std::invalid_argument("second quotients require strictly positive coefficients");
    std::vector<Rational> q;
    q.reserve(static_cast<std::size_t>(n_max - 1));
    for (int n = 2; n <= n_max; ++n)
        q.push_back(seq.at(n - 1) * seq.at(n - 1) / (seq.at(n - 2) * seq.at(n)));
    return SecondQuotients(std::move(q));
}

bool hutchinson_holds(const SecondQuotients& q) {
    for (const auto& v : q.values())
        if (v < 4) return false;
    return true;
}

NecessaryReport lemma1_chain(const SecondQuotients& q) {
    if (q.n_max() < 3) throw std::invalid_argument("lemma1_chain needs at least q_2 and q_3");
    NecessaryReport report;
    report.q2_at_least_2 = q.at(2) >= 2;
    for (int l = 0; l + 3 <= q.n_max(); ++l) {
        Rational v = q.at(l + 3) * (q.at(l + 2) - 4) + 3;
        if (v < 0 && !report.first_violation) report.first_violation = l;
        report.values.push_back(std::move(v));
    }
    return report;
}

DReport d_inequalities(const SecondQuotients& q) {
    if (q.n_max() < 4) throw std::invalid_argument("d_inequalities needs quotients through q_4");
    DReport report;
    report.all_delta2_nonnegative = true;
    for (int k = 2; k <= q.n_max(); ++k) {
        report.delta2.push_back(1 - 1 / q.at(k));
        if (report.delta2.back() < 0) report.all_delta2_nonnegative = false;
    }
    const Rational q2 = q.at(2), q3 = q.at(3), q4 = q.at(4);
    report.d3 = 1 - 2 / q2 + 1 / (q2 * q2 * q3);
    report.d4 = 1 - 3 / q2 + 2 / (q2 * q2 * q3) + 1 / (q2 * q2) -
                1 / (q2 * q2 * q2 * q3 * q3 * q4);
    report.d3_nonnegative = report.d3 >= 0;
    report.d4_nonnegative = report.d4 >= 0;

    report.all_delta3_nonnegative = true;
    for (int k = 2; k + 1 <= q.n_max(); ++k) {
        const Rational& qm = q.at(k);
        const Rational& qlo = q.at(k - 1);  // q_1 = 1 at k = 2
        const Rational& qhi = q.at(k + 1);
        Rational v = 1 - 2 / qm + (1 / (qm * qm)) * (1 / qlo + 1 / qhi) -
                     1 / (qlo * qm * qm * qhi);
        if (v < 0) report.all_delta3_nonnegative = false;
        report.delta3.push_back(std::move(v));
    }
    return report;
}

Th1Audit th1_audit(const SequenceSpec& spec, int n_max, int l_max, int trunc_degree) {
    if (n_max < 2 || l_max < 0 || trunc_degree < 2)
        throw std::invalid_argument("th1_audit: invalid bounds");
    int horizon = std::max(n_max, l_max + trunc_degree);
    CoefficientSequence seq = materialize(spec, horizon);
    for (const auto& c : seq.coeffs)
        if (c <= 0)
            throw std::invalid_argument("th1_audit requires strictly positive coefficients");

    Th1Audit audit;
    audit.l_max = l_max;
    audit.trunc_degree = trunc_degree;
    audit.all_truncations_real_rooted = true;
    for (int l = 0; l <= l_max; ++l) {
        // degree-trunc truncation of z^{-l} R_l[f]
        std::vector<Rational> coeffs(static_cast<std::size_t>(trunc_degree) + 1);
        for (int k = 0; k <= trunc_degree; ++k)
            coeffs[static_cast<std::size_t>(k)] = seq.at(l + k);
        RootReport report = is_real_rooted_nonpositive(Polynomial(std::move(coeffs)));
        if (!report.nonpositive_rooted) {
            audit.all_truncations_real_rooted = false;
            audit.failing_l = l;
            break;
        }
    }
    if (audit.all_truncations_real_rooted) {
        SecondQuotients q = second_quotients(seq, n_max);
        Rational min_q = q.at(2);
        for (int n = 3; n <= n_max; ++n)
            if (q.at(n) < min_q) min_q = q.at(n);
        audit.min_q = min_q;
        audit.min_q_above_3 = min_q > 3;
    }
    return audit;
}

}  // namespace tptk
