#include <doctest.h>

#include "tptk/quotients.hpp"
#include "tptk/seqcore.hpp"

using namespace tptk;

namespace {
SecondQuotients constant_q(const Rational& v, int n_max) {
    return SecondQuotients(std::vector<Rational>(static_cast<std::size_t>(n_max - 1), v));
}
}  // namespace

TEST_CASE("second quotients of known sequences") {
    auto theta = materialize(SequenceSpec{PartialThetaSpec{Rational(4)}}, 8);
    auto q = second_quotients(theta, 8);
    for (int n = 2; n <= 8; ++n) CHECK(q.at(n) == 4);

    auto expo = second_quotients(materialize(SequenceSpec{ExponentialSpec{}}, 6), 6);
    CHECK(expo.at(2) == 2);
    CHECK(expo.at(3) == Rational(3, 2));
    CHECK(expo.at(4) == Rational(4, 3));

    auto ones = second_quotients(
        materialize(SequenceSpec{GeometricSpec{Rational(1), Rational(1)}}, 6), 6);
    for (int n = 2; n <= 6; ++n) CHECK(ones.at(n) == 1);

    CHECK(ones.at(1) == 1);  // index-1 convention
    CHECK_THROWS(ones.at(7));
    CHECK_THROWS(second_quotients(
        materialize(SequenceSpec{ExplicitSpec{{Rational(1), Rational(0), Rational(1)}}}, 2),
        2));
}

TEST_CASE("hutchinson condition") {
    CHECK(hutchinson_holds(constant_q(Rational(4), 6)));
    CHECK_FALSE(hutchinson_holds(SecondQuotients({Rational(4), Rational(39, 10)})));
    auto expo = second_quotients(materialize(SequenceSpec{ExponentialSpec{}}, 6), 6);
    CHECK_FALSE(hutchinson_holds(expo));
}

TEST_CASE("necessary-condition chain") {
    auto expo = second_quotients(materialize(SequenceSpec{ExponentialSpec{}}, 8), 8);
    auto chain = lemma1_chain(expo);
    CHECK(chain.q2_at_least_2);
    CHECK(chain.values.at(0) == 0);                 // (3/2)(2-4)+3
    CHECK(chain.values.at(1) == Rational(-1, 3));   // (4/3)(3/2-4)+3
    REQUIRE(chain.first_violation.has_value());
    CHECK(*chain.first_violation == 1);

    auto four = lemma1_chain(constant_q(Rational(4), 8));
    CHECK_FALSE(four.first_violation.has_value());
    for (const auto& v : four.values) CHECK(v == 3);

    auto three = lemma1_chain(constant_q(Rational(3), 8));
    CHECK_FALSE(three.first_violation.has_value());
    for (const auto& v : three.values) CHECK(v == 0);
}

TEST_CASE("determinant inequality formulas") {
    auto ones = constant_q(Rational(1), 8);
    auto d1 = d_inequalities(ones);
    CHECK(d1.d3 == 0);
    CHECK(d1.d4 == 0);
    for (const auto& v : d1.delta3) CHECK(v == 0);
    for (const auto& v : d1.delta2) CHECK(v == 0);
    CHECK(d1.all_delta2_nonnegative);
    CHECK(d1.all_delta3_nonnegative);

    auto d4 = d_inequalities(constant_q(Rational(4), 8));
    CHECK(d4.d3 == Rational(33, 64));
    CHECK(d4.delta2.front() == Rational(3, 4));

    auto expo = d_inequalities(
        second_quotients(materialize(SequenceSpec{ExponentialSpec{}}, 8), 8));
    CHECK(expo.d3 == Rational(1, 6));
}

TEST_CASE("remainder truncation audit") {
    auto good = th1_audit(SequenceSpec{PartialThetaSpec{Rational(4)}}, 8, 4, 10);
    CHECK(good.all_truncations_real_rooted);
    REQUIRE(good.min_q.has_value());
    CHECK(*good.min_q == 4);
    CHECK(good.min_q_above_3);

    auto bad = th1_audit(SequenceSpec{PartialThetaSpec{Rational(3)}}, 8, 2, 40);
    CHECK_FALSE(bad.all_truncations_real_rooted);
    CHECK(bad.failing_l.has_value());

    // truncations of e^z and of (e^z - 1)/z are not real-rooted at degree 8
    auto expo = th1_audit(SequenceSpec{ExponentialSpec{}}, 8, 2, 8);
    CHECK_FALSE(expo.all_truncations_real_rooted);
    REQUIRE(expo.failing_l.has_value());
    CHECK(*expo.failing_l <= 1);
}
