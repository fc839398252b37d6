#include <doctest.h>

#include "qspin/lambda_ops.hpp"

using namespace qspin;

namespace {

SplitElement x(std::size_t i, std::size_t vars = 2) { return SplitElement::line(i, vars); }

SplitElement power(const SplitElement& e, int k)
{
    SplitElement out(Polynomial::constant(1, e.variables()));
    for (int i = 0; i < k; ++i)
        out = out * e;
    return out;
}

OperationSeries unit(std::size_t vars, std::size_t N)
{
    TruncatedSeries<Polynomial> s(N, Polynomial(vars));
    s[0] = Polynomial::constant(1, vars);
    return OperationSeries(s);
}

} // namespace

TEST_SUITE("lambdaops") {

TEST_CASE("polynomial basics")
{
    const Polynomial a = Polynomial::variable(0, 2);
    const Polynomial b = Polynomial::variable(1, 2);
    CHECK((a * b).str() == "x1 x2");
    CHECK((a * a * Rational(2)).str() == "2 x1^2");
    CHECK(Polynomial(2).str() == "0");
    CHECK((a + b - a - b).is_zero());
    CHECK((a * b + a).power_substituted(3) == a * a * a * b * b * b + a * a * a);
    CHECK((a * a + b * Rational(1, 2)).evaluate({Rational(3), Rational(4)}) == 11);
    CHECK((a * a * b).degree() == 3);
    CHECK_FALSE((a * Rational(1, 2)).is_integral());
    CHECK_THROWS_AS(SplitElement(a * Rational(1, 2)), Error);
    CHECK_THROWS_AS(a + Polynomial::variable(0, 3), Error);
}

TEST_CASE("Adams operations")
{
    const SplitElement e = x(0) + x(1);
    CHECK(adams(3, e) == power(x(0), 3) + power(x(1), 3));
    CHECK(adams(1, e) == e);
    CHECK(adams(5, x(0) - x(1) * x(1)) == power(x(0), 5) - power(x(1), 10));
    CHECK(adams(3, adams(5, e)) == adams(15, e));
    CHECK_THROWS_AS(adams(2, e), Error);
    CHECK(e.rank() == 2);
    CHECK((x(0) - x(1) - x(1)).rank() == -1);
}

TEST_CASE("symmetric and exterior powers")
{
    const std::size_t N = 6;
    const SplitElement line = x(0, 1);
    const OperationSeries s = sym_series(line, N);
    for (std::size_t n = 0; n <= N; ++n)
        CHECK(s.coefficient(n) == power(line, static_cast<int>(n)));

    const SplitElement e = x(0) + x(1);
    const OperationSeries l = ext_series(e, N);
    CHECK(l.coefficient(1) == e);
    CHECK(l.coefficient(2) == x(0) * x(1));
    CHECK(l.coefficient(3).is_zero());
    CHECK(sym_series(e, N).coefficient(2) == power(x(0), 2) + x(0) * x(1) + power(x(1), 2));

    CHECK(l * sym_series(e, N).negated_variable() == unit(2, N));
    CHECK(sym_series(e, N) == sym_series_product(e, N));
    CHECK(ext_series(e - x(0) * x(1), N) == ext_series_product(e - x(0) * x(1), N));
    CHECK(ext_series(x(0, 1), 3).str() == "t^0: 1\nt^1: x1\nt^2: 0\nt^3: 0\n");
}

TEST_CASE("Q operations")
{
    const std::size_t N = 7;
    const SplitElement line = x(0, 1);
    const OperationSeries q = q_series(line, N);
    CHECK(q.coefficient(0) == SplitElement(Polynomial::constant(1, 1)));
    for (std::size_t n = 1; n <= N; ++n)
        CHECK(q.coefficient(n) == power(line, static_cast<int>(n)) + power(line, static_cast<int>(n)));

    const SplitElement e = x(0) + x(1) - x(0) * x(1);
    CHECK(q_series(e, N).coefficient(1) == e + e);
    CHECK(q_series(e, N) == q_series_product(e, N));
    CHECK(qsusy(2, line) == power(line, 2) + power(line, 2));
    CHECK(qsusy(0, e) == SplitElement(Polynomial::constant(1, 2)));
    CHECK(susy_exp_mismatch(e, N) == -1);

    const QIdentityReport r = q_identities_check(x(0) + x(1), x(1) * x(1), N);
    CHECK(r.sum_identity);
    CHECK(r.difference_identity);
    CHECK(r.passed());
}

TEST_CASE("random elements satisfy the identities")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 5; ++i) {
        const SplitElement e = random_split_element(rng, 3, 3, 2);
        const SplitElement f = random_split_element(rng, 3, 3, 2);
        CHECK(q_identities_check(e, f, 5).passed());
        CHECK(susy_exp_mismatch(e, 5) == -1);
        CHECK(e.polynomial().degree() <= 2);
    }
}

TEST_CASE("traces of operations")
{
    CHECK(trace_of_op(Partition{2, 1}, 1).is_zero());
    CHECK(trace_of_op(Partition{3}, 1) == Polynomial::variable(0, 1) * Polynomial::variable(0, 1) *
                                              Polynomial::variable(0, 1) * Rational(2));
    CHECK(trace_of_op(Partition{}, 2) == Polynomial::constant(1, 2));
    CHECK(trace_of_op(Partition{1}, 2) == (Polynomial::variable(0, 2) + Polynomial::variable(1, 2)) * Rational(2));
    for (std::size_t m = 1; m <= 3; ++m)
        for (int n = 0; n <= 6; ++n) {
            const auto [lhs, rhs] = trace_dimension_check(m, n);
            CHECK(lhs == Rational(rhs));
        }
}

}
