#include <doctest.h>

#include "cosec/bernoulli.hpp"
#include "cosec/rational.hpp"
#include "cosec/special.hpp"
#include "test_util.hpp"

using namespace cosec;

TEST_CASE("ExactRational normalizes to lowest terms with positive denominator") {
    ExactRational a{BigInt(6), BigInt(4)};
    CHECK(a.numerator() == 3);
    CHECK(a.denominator() == 2);

    ExactRational b{BigInt(-1), BigInt(-2)};
    CHECK(b.numerator() == 1);
    CHECK(b.denominator() == 2);

    ExactRational c{BigInt(0), BigInt(-7)};
    CHECK(c.numerator() == 0);
    CHECK(c.denominator() == 1);

    CHECK_THROWS_AS((ExactRational{BigInt(1), BigInt(0)}), domain_error);
}

TEST_CASE("ExactRational arithmetic is exact") {
    ExactRational third{BigInt(1), BigInt(3)};
    ExactRational sixth{BigInt(1), BigInt(6)};
    CHECK(third + sixth == ExactRational{BigInt(1), BigInt(2)});
    CHECK(third - sixth == sixth);
    CHECK(third * sixth == ExactRational{BigInt(1), BigInt(18)});
    CHECK(third / sixth == ExactRational(2));
    CHECK(-third == ExactRational{BigInt(-1), BigInt(3)});
    CHECK_THROWS_AS(third / ExactRational(0), domain_error);

    // no rounding in long chains
    ExactRational acc(0);
    for (int i = 1; i <= 50; ++i) acc += ExactRational{BigInt(1), BigInt(i)};
    for (int i = 1; i <= 50; ++i) acc -= ExactRational{BigInt(1), BigInt(i)};
    CHECK(acc.is_zero());
}

TEST_CASE("to_double handles huge numerators and denominators") {
    BigInt big = 1;
    for (int i = 0; i < 40; ++i) big *= 10;
    ExactRational q{big, 3 * big};
    CHECK(q.to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

    ExactRational tiny{BigInt(1), big};
    CHECK(tiny.to_double() == doctest::Approx(1e-40).epsilon(1e-13));
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(10, 10) == 1);
    CHECK(binomial(10, 11) == 0);
    CHECK(binomial(64, 32) == BigInt("1832624140942590534"));
}

TEST_CASE("Bernoulli numbers match the fixed convention") {
    CHECK(bernoulli_number(0) == ExactRational(1));
    CHECK(bernoulli_number(1) == ExactRational{BigInt(-1), BigInt(2)});
    CHECK(bernoulli_number(2) == ExactRational{BigInt(1), BigInt(6)});
    CHECK(bernoulli_number(3) == ExactRational(0));
    CHECK(bernoulli_number(4) == ExactRational{BigInt(-1), BigInt(30)});
    CHECK(bernoulli_number(12) == ExactRational{BigInt(-691), BigInt(2730)});
    CHECK(bernoulli_number(16) == ExactRational{BigInt(-3617), BigInt(510)});
}

TEST_CASE("odd Bernoulli numbers vanish") {
    for (int m = 3; m <= 41; m += 2) CHECK(bernoulli_number(m).is_zero());
}

TEST_CASE("Bernoulli cache entries are stable under extension") {
    const ExactRational b8 = bernoulli_number(8);
    bernoulli_number(60);  // force growth
    CHECK(bernoulli_number(8) == b8);
    CHECK(BernoulliCache::instance().max_order() >= 60);
}

TEST_CASE("Bernoulli polynomial values") {
    CHECK(bernoulli_polynomial(0, 0.37) == 1.0);
    CHECK(bernoulli_polynomial(1, 0.5) == 0.0);
    CHECK(bernoulli_polynomial(2, 0.0) == doctest::Approx(1.0 / 6.0));
    // exact evaluation at rational arguments: B_2(1/2) = -1/12
    CHECK(bernoulli_polynomial_exact(2, ExactRational{BigInt(1), BigInt(2)}) ==
          ExactRational{BigInt(-1), BigInt(12)});
    CHECK(bernoulli_polynomial_exact(4, ExactRational(1)) == bernoulli_number(4));
}

TEST_CASE("Bernoulli polynomial forward difference B_m(x+1) - B_m(x) = m x^{m-1}") {
    for (int m = 1; m <= 8; ++m) {
        for (double x = -1.5; x <= 2.01; x += 0.25) {
            const double lhs = bernoulli_polynomial(m, x + 1.0) - bernoulli_polynomial(m, x);
            const double rhs = m * std::pow(x, m - 1);
            CHECK_MESSAGE(testutil::close(lhs, rhs, 1e-11, 1e-11), "m=", m, " x=", x);
        }
    }
}

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(0) == 0.0);
    CHECK(harmonic(1) == 1.0);
    CHECK(harmonic(3) == doctest::Approx(11.0 / 6.0).epsilon(1e-15));
    CHECK(harmonic_exact(5) == ExactRational{BigInt(137), BigInt(60)});
    // continuation past the exact-rational threshold stays consistent
    const double h255 = harmonic(255);
    const double h257 = harmonic(257);
    CHECK(h257 - h255 == doctest::Approx(1.0 / 256 + 1.0 / 257).epsilon(1e-12));
    CHECK_THROWS_AS(harmonic(-1), domain_error);
}
