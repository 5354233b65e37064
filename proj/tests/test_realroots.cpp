#include <doctest.h>

#include "tptk/realroots.hpp"

using namespace tptk;

namespace {
Polynomial poly(std::vector<long> c) {
    std::vector<Rational> r(c.begin(), c.end());
    return Polynomial(std::move(r));
}
}  // namespace

TEST_CASE("root reports") {
    auto doubled = is_real_rooted_nonpositive(poly({1, 2, 1}));
    CHECK(doubled.degree == 2);
    CHECK(doubled.real_rooted);
    CHECK(doubled.nonpositive_rooted);
    CHECK_FALSE(doubled.all_simple);

    auto shifted = is_real_rooted_nonpositive(poly({1, -1}));
    CHECK(shifted.real_rooted);
    CHECK_FALSE(shifted.nonpositive_rooted);
    CHECK(shifted.real_root_count_positive == 1);

    // 3 - 2z: positive root 3/2
    auto factor = is_real_rooted_nonpositive(poly({3, -2}));
    CHECK_FALSE(factor.nonpositive_rooted);
    CHECK(factor.real_root_count_positive == 1);

    auto complex_pair = is_real_rooted_nonpositive(
        Polynomial(std::vector<Rational>{Rational(1), Rational(1), Rational(1, 2)}));
    CHECK_FALSE(complex_pair.real_rooted);
    CHECK(complex_pair.real_root_count_total == 0);
}

TEST_CASE("derivative numerator of a one-pole function") {
    // P = 1, beta = 1, m = 1 -> Q = 1
    RationalGF simple{poly({1}), Rational(1), 1};
    CHECK(derivative_numerator(simple).coeffs() == std::vector<Rational>{Rational(1)});

    // P = 1+z, beta = 1, m = 2 -> Q = (1-z) + 2(1+z) = 3+z
    RationalGF two{poly({1, 1}), Rational(1), 2};
    CHECK(derivative_numerator(two).coeffs() ==
          std::vector<Rational>{Rational(3), Rational(1)});

    // P = (1+z)^2, beta = 1, m = 1 -> Q = 3+2z-z^2
    RationalGF wide{poly({1, 2, 1}), Rational(1), 1};
    CHECK(derivative_numerator(wide).coeffs() ==
          std::vector<Rational>{Rational(3), Rational(2), Rational(-1)});
}

TEST_CASE("derivative-preservation classifier") {
    RationalGF simple{poly({1}), Rational(1), 1};
    auto ok = classify_theorem_st1(simple);
    CHECK(ok.st1_case == St1Case::RationalOK);
    CHECK(ok.derivative_preserved);

    // two distinct poles: 1/((1-z)(2-z))
    MeromorphicGF twopole{poly({1}), {{Rational(1), 1}, {Rational(1, 2), 1}}};
    auto bad = classify_theorem_st1(twopole);
    CHECK(bad.st1_case == St1Case::NotApplicable);
    CHECK_FALSE(bad.derivative_preserved);
    REQUIRE(bad.positive_root.has_value());
    REQUIRE(bad.positive_root->exact.has_value());
    CHECK(*bad.positive_root->exact == Rational(3, 2));

    // deg P = 2 > m = 1: the derivative numerator has the positive root 3
    RationalGF wide{poly({1, 2, 1}), Rational(1), 1};
    auto refused = classify_theorem_st1(wide);
    CHECK(refused.st1_case == St1Case::NotApplicable);
    CHECK_FALSE(refused.derivative_preserved);
    REQUIRE(refused.positive_root.has_value());
    REQUIRE(refused.positive_root->exact.has_value());
    CHECK(*refused.positive_root->exact == 3);

    // polynomial inputs: nonpositive-rooted means entire class membership
    auto entire = classify_theorem_st1(poly({1, 2, 1}));
    CHECK(entire.st1_case == St1Case::EntireLPI);
    CHECK(entire.derivative_preserved);
    auto not_entire = classify_theorem_st1(poly({1, 0, 1}));
    CHECK(not_entire.st1_case == St1Case::NotApplicable);
}

TEST_CASE("finite multiplier check") {
    CHECK(finite_multiplier_check({Rational(1), Rational(1)}));
    CHECK_FALSE(finite_multiplier_check({Rational(1), Rational(1), Rational(1)}));
    CHECK(finite_multiplier_check({Rational(0), Rational(1), Rational(2)}));
    CHECK_THROWS(finite_multiplier_check({Rational(0), Rational(0)}));
}

TEST_CASE("power sum identities") {
    auto both_one = root_power_sum_identities(poly({1, 2, 1}));
    CHECK(both_one.sum_inv == 2);
    CHECK(both_one.sum_inv_sq == 2);
    CHECK(both_one.sum_inv_cube == 2);
    CHECK(both_one.residue1 == 0);
    CHECK(both_one.residue2 == 0);
    CHECK(both_one.residue3 == 0);

    auto single = root_power_sum_identities(poly({1, 1}));
    CHECK(single.sum_inv == 1);
    CHECK(single.sum_inv_sq == 1);
    CHECK(single.sum_inv_cube == 1);
    CHECK(single.residue1 == 0);

    auto pair = root_power_sum_identities(poly({1, 3, 2}));
    CHECK(pair.sum_inv == 3);
    CHECK(pair.sum_inv_sq == 5);
    CHECK(pair.sum_inv_cube == 9);
    CHECK(pair.residue2 == 0);
    CHECK(pair.residue3 == 0);

    CHECK_THROWS(root_power_sum_identities(poly({1, -1})));
}
