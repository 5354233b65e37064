#include "tptk/toeplitz.hpp"

#include <stdexcept>

namespace tptk {

namespace {

const Rational kZero(0);

void validate_request(const CoefficientSequence& seq, const MinorRequest& req) {
    if (req.rows.empty() || req.rows.size() != req.cols.size())
        throw std::invalid_argument("minor request must be square and nonempty");
    for (std::size_t i = 0; i < req.rows.size(); ++i) {
        if (req.rows[i] < 0 || req.cols[i] < 0)
            throw std::invalid_argument("minor request indices must be nonnegative");
        if (i > 0 && (req.rows[i] <= req.rows[i - 1] || req.cols[i] <= req.cols[i - 1]))
            throw std::invalid_argument("minor request indices must be strictly increasing");
    }
    int max_col = req.cols.back();
    if (max_col > seq.horizon())
        throw std::out_of_range("minor request exceeds materialized horizon");
}

// Bareiss fraction-free elimination on an integer matrix.
Integer det_bareiss_int(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    Integer prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return Integer(0);
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// Lexicographically first / next r-combination from {0..N}.
bool next_combination(std::vector<int>& c, int N) {
    int r = static_cast<int>(c.size());
    int i = r - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == N - (r - 1 - i)) --i;
    if (i < 0) return false;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j)
        c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

std::vector<int> first_combination(int r) {
    std::vector<int> c(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) c[static_cast<std::size_t>(i)] = i;
    return c;
}

}  // namespace

Rational toeplitz_entry(const CoefficientSequence& seq, int row, int col) {
    int k = col - row;
    if (k < 0) return kZero;
    if (k > seq.horizon()) throw std::out_of_range("Toeplitz entry beyond horizon");
    return seq.at(k);
}

Rational det_exact(const std::vector<std::vector<Rational>>& matrix) {
    const std::size_t n = matrix.size();
    if (n == 0) throw std::invalid_argument("empty matrix");
    for (const auto& row : matrix)
        if (row.size() != n) throw std::invalid_argument("matrix must be square");

    Integer den_lcm(1);
    for (const auto& row : matrix)
        for (const auto& entry : row)
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), entry.get_den().get_mpz_t());

    std::vector<std::vector<Integer>> cleared(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            cleared[i][j] = matrix[i][j].get_num() * (den_lcm / matrix[i][j].get_den());

    Integer det_int = det_bareiss_int(std::move(cleared));
    Integer scale(1);
    mpz_pow_ui(scale.get_mpz_t(), den_lcm.get_mpz_t(), static_cast<unsigned long>(n));
    Rational out(det_int, scale);
    out.canonicalize();
    return out;
}

Rational minor(const CoefficientSequence& seq, const MinorRequest& request) {
    validate_request(seq, request);
    const std::size_t n = request.rows.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = toeplitz_entry(seq, request.rows[i], request.cols[j]);
    return det_exact(m);
}

TPWitness check_tp_window(const CoefficientSequence& seq, int m, int N) {
    if (m < 1) throw std::invalid_argument("order bound must be positive");
    if (N < 1 || N > seq.horizon())
        throw std::invalid_argument("window must be within the materialized horizon");

    TPWitness witness;
    witness.order_bound = m;
    witness.window = N;
    witness.pass = true;
    bool have_min = false;

    for (int order = 1; order <= m && order <= N + 1; ++order) {
        auto rows = first_combination(order);
        do {
            auto cols = first_combination(order);
            do {
                MinorRequest req{rows, cols};
                Rational v = minor(seq, req);
                if (!have_min || v < witness.min_value) {
                    witness.min_value = v;
                    have_min = true;
                }
                if (v < 0) {
                    witness.pass = false;
                    witness.failing = MinorCertificate{std::move(req), v};
                    return witness;
                }
            } while (next_combination(cols, N));
        } while (next_combination(rows, N));
    }
    return witness;
}

std::optional<MinorCertificate> find_negative_minor(const CoefficientSequence& seq,
                                                    int max_order, int N) {
    if (max_order < 1) throw std::invalid_argument("order bound must be positive");
    if (N < 1 || N > seq.horizon())
        throw std::invalid_argument("window must be within the materialized horizon");

    for (int order = 1; order <= max_order && order <= N + 1; ++order) {
        auto rows = first_combination(order);
        do {
            auto cols = first_combination(order);
            do {
                MinorRequest req{rows, cols};
                Rational v = minor(seq, req);
                if (v < 0) return MinorCertificate{std::move(req), v};
            } while (next_combination(cols, N));
        } while (next_combination(rows, N));
    }
    return std::nullopt;
}

}  // namespace tptk
