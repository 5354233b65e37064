#ifndef TPTK_TESTS_HELPERS_HPP
#define TPTK_TESTS_HELPERS_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "tptk/rational.hpp"
#include "tptk/seqcore.hpp"
#include "tptk/toeplitz.hpp"

namespace tptk::testing {

// Naive cofactor expansion, used only as an independent determinant oracle.
inline Rational cofactor_det(const std::vector<std::vector<Rational>>& m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Rational det(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Rational>> sub;
        sub.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Rational> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(std::move(row));
        }
        Rational term = m[0][j] * cofactor_det(sub);
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

inline std::vector<std::vector<Rational>> submatrix(const CoefficientSequence& seq,
                                                    const MinorRequest& req) {
    std::vector<std::vector<Rational>> m;
    for (int r : req.rows) {
        std::vector<Rational> row;
        for (int c : req.cols) row.push_back(toeplitz_entry(seq, r, c));
        m.push_back(std::move(row));
    }
    return m;
}

// Uniform rational p/q with p in [num_lo, num_hi], q in [1, den_hi].
inline Rational random_rational(std::mt19937_64& rng, long num_lo, long num_hi,
                                long den_hi = 8) {
    std::uniform_int_distribution<long> num(num_lo, num_hi);
    std::uniform_int_distribution<long> den(1, den_hi);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

// Strictly increasing index subset of size k drawn from [0, bound].
inline std::vector<int> random_indices(std::mt19937_64& rng, int k, int bound) {
    std::vector<int> pool(static_cast<std::size_t>(bound) + 1);
    for (int i = 0; i <= bound; ++i) pool[static_cast<std::size_t>(i)] = i;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> out(pool.begin(), pool.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tptk::testing

#endif
