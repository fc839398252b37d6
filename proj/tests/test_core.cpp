#include <doctest.h>

#include <climits>

#include "qspin/compact_rational.hpp"
#include "qspin/core.hpp"
#include "qspin/cyclotomic.hpp"
#include "qspin/power_series.hpp"

using namespace qspin;

TEST_SUITE("core") {

TEST_CASE("integer helpers")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(3, 5) == 0);
    CHECK(ipow(Integer(3), 4) == 81);
    CHECK(pow2(-3) == Rational(1, 8));
    CHECK(pow2(5) == 32);
}

TEST_CASE("ratio reduces to lowest terms")
{
    const Rational r = ratio(9, 3);
    CHECK(r.get_num() == 3);
    CHECK(r.get_den() == 1);
    CHECK(ratio(2, -4) == Rational(-1, 2));
    CHECK_THROWS_AS(ratio(1, 0), Error);
}

TEST_CASE("parse_rational")
{
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("+7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("cyclotomic arithmetic")
{
    const Cyclotomic w = Cyclotomic::root_of_unity(3);
    CHECK(w + w * w == Cyclotomic(-1));
    CHECK(w * w * w == Cyclotomic(1));
    CHECK(w.conj() == w * w);
    const Cyclotomic i = Cyclotomic::parse("E(4)");
    CHECK(i * i == Cyclotomic(-1));
    CHECK(Cyclotomic::parse("-1/2+3*E(4)") == Cyclotomic(Rational(-1, 2)) + i * Cyclotomic(3));
    CHECK((w * i).order() == 12);
    CHECK(Cyclotomic::parse("E(3)^2") == w * w);
}

TEST_CASE("exp and log are inverse")
{
    PowerSeries a(6, Rational(0));
    a[1] = 2;
    a[3] = Rational(2, 3);
    a[5] = Rational(2, 5);
    const PowerSeries b = exp(a, Rational(1));
    CHECK(log(b, Rational(1)) == a);
    CHECK(b[0] == 1);
    CHECK(b[1] == 2);
    CHECK(b[2] == 2);
}

TEST_CASE("power_product matches a direct expansion")
{
    // (1 + t)(1 + t^3) = 1 + t + t^3 + t^4
    const PowerSeries p = power_product(4, StepSet::odd, 1, 1);
    CHECK(format_coefficients(p) == "1 1 0 1 1");
    // prod_{k odd} (1 - t^k)^{-1} counts partitions into odd parts
    CHECK(format_coefficients(power_product(8, StepSet::odd, -1, -1)) == "1 1 1 2 2 3 4 5 6");
    CHECK(reciprocal(power_product(8, StepSet::all, -1, 1)) == power_product(8, StepSet::all, -1, -1));
}

TEST_CASE("compact rational promotes instead of overflowing")
{
    const CompactRational big(LONG_MAX);
    const CompactRational sum = big + big;
    CHECK(sum.to_rational() == Rational(Integer(LONG_MAX) * 2));
    CHECK((sum - big) == big);
    CHECK(CompactRational::fraction(6, -4).to_rational() == Rational(-3, 2));
    CHECK((CompactRational::fraction(1, 3) * CompactRational(3)) == CompactRational(1));
    CHECK((big * big).to_rational() == Rational(Integer(LONG_MAX) * Integer(LONG_MAX)));
    CHECK(CompactRational(LONG_MIN).to_rational() == Rational(Integer(LONG_MIN)));
    CHECK((-CompactRational(LONG_MIN)).to_rational() == Rational(-Integer(LONG_MIN)));
}

}
