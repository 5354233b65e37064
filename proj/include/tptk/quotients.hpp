#ifndef TPTK_QUOTIENTS_HPP
#define TPTK_QUOTIENTS_HPP

#include <optional>
#include <vector>

#include "tptk/rational.hpp"
#include "tptk/seqcore.hpp"

namespace tptk {

// q_n = a_{n-1}^2 / (a_{n-2} a_n) for n = 2..n_max; q(2) is the first entry.
class SecondQuotients {
public:
    SecondQuotients() = default;
    explicit SecondQuotients(std::vector<Rational> q);

    // q_n; the convention q_1 = 1 is applied when a formula reaches index 1.
    const Rational& at(int n) const;
    int n_max() const { return static_cast<int>(q_.size()) + 1; }
    const std::vector<Rational>& values() const { return q_; }

private:
    std::vector<Rational> q_;
};

SecondQuotients second_quotients(const CoefficientSequence& seq, int n_max);

// Hutchinson: every q_n >= 4.
bool hutchinson_holds(const SecondQuotients& q);

struct NecessaryReport {
    // values[l] = q_{l+3} (q_{l+2} - 4) + 3
    std::vector<Rational> values;
    std::optional<int> first_violation;
    bool q2_at_least_2 = false;
};

NecessaryReport lemma1_chain(const SecondQuotients& q);

struct DReport {
    std::vector<Rational> delta2;  // delta2[i] = 1 - 1/q_{i+2}
    Rational d3;
    Rational d4;
    std::vector<Rational> delta3;  // delta3[i] = Delta_3^{i+2}; k=2 uses q_1 = 1
    bool d3_nonnegative = false;
    bool d4_nonnegative = false;
    bool all_delta2_nonnegative = false;
    bool all_delta3_nonnegative = false;
};

// Needs quotients through q_4 for D_4 and through q_{k+1} for Delta_3^k.
DReport d_inequalities(const SecondQuotients& q);

struct Th1Audit {
    bool all_truncations_real_rooted = false;
    std::optional<int> failing_l;  // first l whose shifted remainder truncation fails
    int l_max = 0;
    int trunc_degree = 0;
    std::optional<Rational> min_q;  // over n = 2..n_max, reported when audit holds
    bool min_q_above_3 = false;
};

// For l = 0..l_max tests the degree-trunc_degree truncation of z^{-l} R_l[f]
// for nonpositive-rootedness; when every truncation passes, reports
// min q_n over 2..n_max. Finite evidence only, never a proof.
Th1Audit th1_audit(const SequenceSpec& spec, int n_max, int l_max, int trunc_degree);

}  // namespace tptk

#endif
