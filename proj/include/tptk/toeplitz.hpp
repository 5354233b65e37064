#ifndef TPTK_TOEPLITZ_HPP
#define TPTK_TOEPLITZ_HPP

#include <optional>
#include <vector>

#include "tptk/rational.hpp"
#include "tptk/seqcore.hpp"

namespace tptk {

struct MinorRequest {
    std::vector<int> rows;  // strictly increasing, nonnegative
    std::vector<int> cols;  // strictly increasing, same length as rows
};

struct MinorCertificate {
    MinorRequest request;
    Rational value;
};

struct TPWitness {
    std::optional<int> order_bound;  // nullopt = unbounded request
    int window = 0;
    bool pass = false;
    std::optional<MinorCertificate> failing;
    Rational min_value;
};

// Toeplitz entry a_{j-i}; zero below the diagonal band.
Rational toeplitz_entry(const CoefficientSequence& seq, int row, int col);

// Exact determinant of the selected submatrix, fraction-free (Bareiss) after
// clearing denominators.
Rational minor(const CoefficientSequence& seq, const MinorRequest& request);

// Exact determinant of a dense rational matrix (Bareiss on the cleared
// integer matrix).
Rational det_exact(const std::vector<std::vector<Rational>>& matrix);

// Enumerates all minors of order <= m with row/col indices in [0, N].
// On failure reports the first negative minor in (order, rows, cols) order.
TPWitness check_tp_window(const CoefficientSequence& seq, int m, int N);

// Searches orders 1..max_order in (order, rows, cols) order and returns the
// first negative minor found; absence is inconclusive, not a TP proof.
std::optional<MinorCertificate> find_negative_minor(const CoefficientSequence& seq,
                                                    int max_order, int N);

}  // namespace tptk

#endif
