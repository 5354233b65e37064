#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "tptk/quotients.hpp"
#include "tptk/realroots.hpp"
#include "tptk/theta.hpp"
#include "tptk/toeplitz.hpp"

using namespace tptk;
using tptk::testing::random_indices;
using tptk::testing::random_rational;

namespace {

std::vector<Rational> random_quotients(std::mt19937_64& rng, int count, long lo, long hi) {
    std::vector<Rational> q;
    for (int i = 0; i < count; ++i) {
        Rational r = random_rational(rng, lo * 8, hi * 8, 1) / 8;
        if (r < lo) r = Rational(lo);
        q.push_back(r);
    }
    return q;
}

CoefficientSequence from_quotients(const std::vector<Rational>& q, int horizon) {
    return materialize(SequenceSpec{FromQuotientsSpec{q, Rational(1), Rational(1)}}, horizon);
}

}  // namespace

TEST_CASE("quotient round trip") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        auto q = random_quotients(rng, 8, 1, 9);
        auto seq = from_quotients(q, 9);
        auto back = second_quotients(seq, 9);
        REQUIRE(back.values().size() == q.size());
        for (std::size_t i = 0; i < q.size(); ++i) CHECK(back.values()[i] == q[i]);
    }
}

TEST_CASE("normalization is idempotent and preserves quotients") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        CoefficientSequence seq;
        for (int k = 0; k <= 8; ++k)
            seq.coeffs.push_back(random_rational(rng, 1, 40));
        auto g = normalize(seq);
        CHECK(g.at(0) == 1);
        CHECK(g.at(1) == 1);
        auto gg = normalize(g);
        for (int k = 0; k <= 8; ++k) CHECK(gg.at(k) == g.at(k));
        auto q_before = second_quotients(seq, 8);
        auto q_after = second_quotients(g, 8);
        for (int n = 2; n <= 8; ++n) CHECK(q_before.at(n) == q_after.at(n));
    }
}

TEST_CASE("remainder composes by maximum") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        CoefficientSequence seq;
        for (int k = 0; k <= 10; ++k) seq.coeffs.push_back(random_rational(rng, -9, 9));
        std::uniform_int_distribution<int> pick(0, 10);
        int l1 = pick(rng), l2 = pick(rng);
        auto twice = remainder(remainder(seq, l1), l2);
        auto once = remainder(seq, std::max(l1, l2));
        for (int k = 0; k <= 10; ++k) CHECK(twice.at(k) == once.at(k));
    }
}

TEST_CASE("hadamard algebra") {
    std::mt19937_64 rng(13);
    auto ones = materialize(SequenceSpec{GeometricSpec{Rational(1), Rational(1)}}, 8);
    for (int trial = 0; trial < 20; ++trial) {
        CoefficientSequence a, b, c;
        for (int k = 0; k <= 8; ++k) {
            a.coeffs.push_back(random_rational(rng, -9, 9));
            b.coeffs.push_back(random_rational(rng, -9, 9));
            c.coeffs.push_back(random_rational(rng, -9, 9));
        }
        auto ab = hadamard(a, b);
        auto ba = hadamard(b, a);
        auto left = hadamard(ab, c);
        auto right = hadamard(a, hadamard(b, c));
        auto ident = hadamard(a, ones);
        for (int k = 0; k <= 8; ++k) {
            CHECK(ab.at(k) == ba.at(k));
            CHECK(left.at(k) == right.at(k));
            CHECK(ident.at(k) == a.at(k));
        }
    }
}

TEST_CASE("partial theta product law") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Rational a2 = Rational(1) + random_rational(rng, 1, 30);
        Rational b2 = Rational(1) + random_rational(rng, 1, 30);
        auto pa = materialize(SequenceSpec{PartialThetaSpec{a2}}, 8);
        auto pb = materialize(SequenceSpec{PartialThetaSpec{b2}}, 8);
        auto pab = materialize(SequenceSpec{PartialThetaSpec{a2 * b2}}, 8);
        auto prod = hadamard(pa, pb);
        for (int k = 0; k <= 8; ++k) CHECK(prod.at(k) == pab.at(k));
    }
}

TEST_CASE("geometric scaling of minors") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 25; ++trial) {
        auto q = random_quotients(rng, 11, 1, 6);
        auto seq = from_quotients(q, 12);
        Rational c = Rational(1) + random_rational(rng, 1, 5);
        Rational beta = random_rational(rng, 1, 5);
        auto geo = materialize(SequenceSpec{GeometricSpec{c, beta}}, 12);
        auto scaled = hadamard(geo, seq);

        std::uniform_int_distribution<int> order(1, 4);
        int r = order(rng);
        MinorRequest req{random_indices(rng, r, 6), random_indices(rng, r, 12)};
        long sum_diff = 0;
        for (int i = 0; i < r; ++i) sum_diff += req.cols[i] - req.rows[i];
        Rational factor(1);
        for (int i = 0; i < r; ++i) factor *= c;
        if (sum_diff >= 0)
            for (long i = 0; i < sum_diff; ++i) factor *= beta;
        else
            for (long i = 0; i < -sum_diff; ++i) factor /= beta;
        CHECK(minor(scaled, req) == factor * minor(seq, req));
    }
}

TEST_CASE("elimination equals cofactor expansion") {
    std::mt19937_64 rng(23);
    std::vector<SequenceSpec> families = {
        SequenceSpec{ExponentialSpec{}},
        SequenceSpec{PartialThetaSpec{Rational(7, 2)}},
        SequenceSpec{GeometricSpec{Rational(2), Rational(1, 3)}},
        SequenceSpec{FromQuotientsSpec{random_quotients(rng, 11, 1, 8), Rational(1),
                                       Rational(1)}},
    };
    std::uniform_int_distribution<int> order(1, 5);
    for (int trial = 0; trial < 40; ++trial) {
        const auto& family = families[static_cast<std::size_t>(trial) % families.size()];
        auto seq = materialize(family, 12);
        int r = order(rng);
        MinorRequest req{random_indices(rng, r, 12), random_indices(rng, r, 12)};
        Rational fast = minor(seq, req);
        Rational slow = testing::cofactor_det(testing::submatrix(seq, req));
        CHECK(fast == slow);
    }
}

TEST_CASE("structural minor identities") {
    auto seq = materialize(SequenceSpec{ExponentialSpec{}}, 10);
    for (int k = 0; k <= 6; ++k)
        CHECK(minor(seq, {{3}, {3 + k}}) == seq.at(k));  // order 1 = coefficient

    // column block strictly left of the row block selects a zero column
    CHECK(minor(seq, {{4, 5, 6}, {0, 1, 2}}) == 0);
    CHECK(minor(seq, {{5, 6}, {1, 3}}) == 0);
}

TEST_CASE("log concavity from quotients at least one") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        auto seq = from_quotients(random_quotients(rng, 9, 1, 9), 10);
        for (int k = 1; k <= 9; ++k)
            CHECK(seq.at(k) * seq.at(k) - seq.at(k - 1) * seq.at(k + 1) >= 0);
    }
}

TEST_CASE("necessary chain never fires in the hutchinson regime") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        SecondQuotients q(random_quotients(rng, 10, 4, 10));
        CHECK(hutchinson_holds(q));
        CHECK_FALSE(lemma1_chain(q).first_violation.has_value());
        auto d = d_inequalities(q);
        CHECK(d.d3_nonnegative);
        CHECK(d.d4_nonnegative);
        CHECK(d.all_delta2_nonnegative);
        CHECK(d.all_delta3_nonnegative);
    }
}

TEST_CASE("hutchinson regime truncations and sections are real rooted") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        auto seq = from_quotients(random_quotients(rng, 11, 4, 10), 12);
        // full truncation
        std::vector<Rational> coeffs(seq.coeffs.begin(), seq.coeffs.begin() + 11);
        CHECK(is_real_rooted_nonpositive(Polynomial(coeffs)).nonpositive_rooted);
        // consecutive-term sections
        for (int l = 1; l <= 6; ++l) {
            std::vector<Rational> sec(seq.coeffs.begin() + l, seq.coeffs.begin() + l + 5);
            CHECK(is_real_rooted_nonpositive(Polynomial(sec)).nonpositive_rooted);
        }
    }
}

TEST_CASE("random one-pole functions with admissible numerators") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> mdist(1, 6);
    for (int trial = 0; trial < 25; ++trial) {
        int m = mdist(rng);
        std::uniform_int_distribution<int> degdist(0, m);
        int deg = degdist(rng);
        Polynomial p = Polynomial::constant(Rational(1));
        for (int i = 0; i < deg; ++i) {
            Rational r = random_rational(rng, 0, 6);
            p = p * Polynomial(std::vector<Rational>{Rational(1), r});
        }
        Rational beta = Rational(1, 8) + random_rational(rng, 1, 16);
        RationalGF gf{p, beta, m};
        auto verdict = classify_theorem_st1(gf);
        CHECK(verdict.st1_case == St1Case::RationalOK);
        CHECK(verdict.derivative_preserved);
        REQUIRE(verdict.derivative_num.has_value());
        Polynomial q = *verdict.derivative_num;
        CHECK(is_real_rooted_nonpositive(q).nonpositive_rooted);
        CHECK(q.degree() <= m);
        if (p.degree() == m) CHECK(q.degree() == p.degree() - 1);
    }
}

TEST_CASE("truncated derivative weights as multipliers") {
    // (0, 1, ..., l, 0, 0, ...) yields z times the degree-(l-1) truncation
    // of e^z, which stops being real-rooted from l = 3 on; only the whole
    // untruncated weight sequence is a multiplier sequence.
    for (int l = 1; l <= 8; ++l) {
        std::vector<Rational> gammas;
        for (int k = 0; k <= l; ++k) gammas.push_back(Rational(k));
        CHECK(finite_multiplier_check(gammas) == (l <= 2));
    }
}

TEST_CASE("power sum identities vanish on random products") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<int> degdist(1, 6);
        int deg = degdist(rng);
        Polynomial p = Polynomial::constant(Rational(1) + random_rational(rng, 0, 3));
        for (int i = 0; i < deg; ++i) {
            Rational r = Rational(1, 9) + random_rational(rng, 0, 5);
            p = p * Polynomial(std::vector<Rational>{Rational(1), r});
        }
        auto report = root_power_sum_identities(p);
        CHECK(report.residue1 == 0);
        CHECK(report.residue2 == 0);
        CHECK(report.residue3 == 0);
    }
}

TEST_CASE("smallest test point solves its defining equation") {
    std::mt19937_64 rng(47);
    PrecisionConfig prec{192};
    for (int trial = 0; trial < 15; ++trial) {
        // a^2 in (1 + sqrt 5, 6]
        Rational a2 = Rational(13, 4) + random_rational(rng, 0, 11, 4);
        if ((a2 - 1) * (a2 - 1) < 5) continue;
        Interval x = x0(a2, prec);
        Interval a2i = Interval::from_rational(a2, 192);
        Interval a3 = a2i * a2i.sqrt();  // a^3
        Interval residual = x / a3 + a3 / x - a3 / Interval::exact_int(2, 192);
        CHECK(residual.contains_zero());
        CHECK(x.lo_double() > 1.0);
        CHECK(x.hi_double() < mpq_get_d(a2.get_mpq_t()));
    }
}

TEST_CASE("certificate points increase strictly") {
    std::mt19937_64 rng(53);
    PrecisionConfig prec{128};
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<Rational> qs;
        for (int i = 0; i < 9; ++i) qs.push_back(Rational(1) + random_rational(rng, 0, 9));
        SecondQuotients q(qs);
        Rational a2 = Rational(13, 4) + random_rational(rng, 1, 7, 4);
        auto cert = sign_alternation_certificate(10, a2, q, prec, false);
        for (std::size_t i = 0; i + 1 < cert.points.size(); ++i)
            CHECK(cert.points[i].x.strictly_below(cert.points[i + 1].x));
    }
}

TEST_CASE("terms shrink below the domination bound") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<Rational> qs;
        for (int i = 0; i < 11; ++i) qs.push_back(Rational(1) + random_rational(rng, 0, 9));
        SecondQuotients q(qs);
        Rational a2 = Rational(13, 4) + random_rational(rng, 1, 7, 4);
        int n = 12;
        // rational certificate points: x = 1 and the endpoint
        for (Rational x : {Rational(1), endpoint_value(n, a2, q)}) {
            // term_k of S_n^q, tracked exactly
            Rational term(1), pow_a2(1), q_prod(1), bound(1);
            for (int k = 1; k <= n; ++k) {
                if (k >= 2) q_prod *= q.at(k);
                Rational next = term * x / (pow_a2 * q_prod);
                // bound for step k-1 -> k: a^{2(k-1)} q_2..q_k
                if (x < pow_a2 * q_prod) CHECK(abs(next) < abs(term));
                term = next;
                pow_a2 *= a2;
            }
        }
    }
}

TEST_CASE("partial sums agree with and without unit quotients") {
    std::mt19937_64 rng(61);
    SecondQuotients ones(std::vector<Rational>(11, Rational(1)));
    for (int trial = 0; trial < 10; ++trial) {
        Rational a2 = Rational(2) + random_rational(rng, 1, 9);
        Rational x = random_rational(rng, 0, 20);
        CHECK(eval_partial_sum_exact(12, x, a2, &ones) ==
              eval_partial_sum_exact(12, x, a2, nullptr));
    }
}
