#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "qspin/group_data.hpp"
#include "qspin/omega.hpp"

using namespace qspin;

namespace {

Rational rpow(const Rational& x, int k)
{
    Rational out = 1;
    for (int i = 0; i < k; ++i)
        out *= x;
    return out;
}

// Evaluates an uncolored element at p_r = sum_i x_i^r.
Rational evaluate(const OmegaElem& f, const std::vector<Rational>& x)
{
    Rational total = 0;
    for (const auto& [rho, c] : f.terms()) {
        Rational term = c;
        for (const auto& [label, mu] : rho.entries())
            for (int r : mu.parts()) {
                Rational p = 0;
                for (const auto& xi : x)
                    p += rpow(xi, r);
                term *= p;
            }
        total += term;
    }
    return total;
}

// Q_lambda(x_1..x_n) straight from the symmetrisation formula:
// 2^l / (n-l)! sum_{w in S_n} w( x^lambda prod_{i<=l, i<j} (x_i + x_j)/(x_i - x_j) ).
Rational Q_by_symmetrisation(const Partition& lambda, const std::vector<Rational>& x)
{
    const std::size_t n = x.size();
    const std::size_t l = lambda.length();
    std::vector<std::size_t> w(n);
    std::iota(w.begin(), w.end(), 0);
    Rational sum = 0;
    do {
        Rational term = 1;
        for (std::size_t i = 0; i < l; ++i)
            term *= rpow(x[w[i]], lambda.parts()[i]);
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                term *= (x[w[i]] + x[w[j]]) / (x[w[i]] - x[w[j]]);
        sum += term;
    } while (std::next_permutation(w.begin(), w.end()));
    return sum * pow2(static_cast<int>(l)) / Rational(factorial(static_cast<unsigned long>(n - l)));
}

OmegaElem p_of(std::initializer_list<int> parts) { return p_monomial(Partition(parts)); }

} // namespace

TEST_SUITE("symfunc") {

TEST_CASE("q_n in the power-sum basis")
{
    CHECK(q_in_p(0) == OmegaElem::scalar(1));
    CHECK(q_in_p(1) == p_of({1}) * Rational(2));
    CHECK(q_in_p(2) == p_of({1, 1}) * Rational(2));
    CHECK(q_in_p(3) == p_of({1, 1, 1}) * Rational(4, 3) + p_of({3}) * Rational(2, 3));
    CHECK(q_in_p(3).str() == "4/3 p(1,1,1) + 2/3 p(3)");
    // sum_{i=0}^{n} (-1)^i q_i q_{n-i} = 0 for n >= 1
    for (int n = 1; n <= 8; ++n) {
        OmegaElem s;
        for (int i = 0; i <= n; ++i)
            s += q_in_p(i) * q_in_p(n - i) * Rational(i % 2 == 0 ? 1 : -1);
        CHECK(s.is_zero());
    }
}

TEST_CASE("Q_lambda examples")
{
    CHECK(Q_in_p(Partition{2, 1}) == p_of({1, 1, 1}) * Rational(4, 3) - p_of({3}) * Rational(4, 3));
    for (int n = 0; n <= 8; ++n)
        CHECK(Q_in_p(Partition(std::vector<int>(n > 0 ? 1 : 0, n))) == q_in_p(n));
    CHECK_THROWS_AS(Q_in_p(Partition{2, 2}), Error);
    CHECK_THROWS_AS(p_of({2}), Error);
}

TEST_CASE("Q_lambda agrees with symmetrisation in four variables")
{
    const std::vector<std::vector<Rational>> points{
        {Rational(1), Rational(2), Rational(-1, 3), Rational(5, 2)},
        {Rational(3, 7), Rational(-2), Rational(4), Rational(1, 5)},
    };
    for (int n = 1; n <= 7; ++n)
        for (const Partition& lambda : enumerate(n, PartitionKind::strict)) {
            if (lambda.length() > 4)
                continue;
            const OmegaElem Q = Q_in_p(lambda);
            for (const auto& x : points)
                CHECK(evaluate(Q, x) == Q_by_symmetrisation(lambda, x));
        }
}

TEST_CASE("inner product and Q-orthogonality")
{
    CHECK(inner(p_of({3, 1, 1}), p_of({3, 1, 1})) == Rational(3, 4));
    CHECK(inner(p_of({3}), p_of({1, 1, 1})) == 0);
    for (int n = 0; n <= 7; ++n) {
        const auto strict = enumerate(n, PartitionKind::strict);
        for (const auto& a : strict)
            for (const auto& b : strict)
                CHECK(inner(Q_in_p(a), Q_in_p(b)) == (a == b ? pow2(static_cast<int>(a.length())) : Rational(0)));
    }
}

TEST_CASE("basis changes")
{
    const auto Q = to_Q_basis(p_of({1, 1, 1}) * Rational(8));
    CHECK(Q.size() == 2);
    CHECK(Q.at(Partition{3}) == 4);
    CHECK(Q.at(Partition{2, 1}) == 2);

    const auto q = to_q_basis(Q_in_p(Partition{2, 1}));
    OmegaElem back;
    for (const auto& [mu, c] : q)
        back += q_monomial(mu) * c;
    CHECK(back == Q_in_p(Partition{2, 1}));

    CHECK(rank({q_in_p(3), Q_in_p(Partition{3}), Q_in_p(Partition{2, 1})}) == 2);
    CHECK_THROWS_AS(solve_in_basis(p_of({3}), {q_in_p(3)}), Error);
}

TEST_CASE("json round trip and colored elements")
{
    const OmegaElem f = Q_in_p(Partition{4, 1}) + OmegaElem::scalar(Rational(-2, 5));
    CHECK(OmegaElem::from_json(f.to_json()) == f);

    const GroupPtr z2 = builtin_group("z2");
    const OmegaElem g = q_colored(3, *z2);
    CHECK(OmegaElem::from_json(g.to_json()) == g);
    CHECK(g.homogeneous_degree() == 3);
    const OmegaElem c = p_monomial(Partition{1}, 1, z2->labels());
    CHECK(inner(c, c, *z2) == 1);
    CHECK(c.str() == "p{c1:(1)}");
}

TEST_CASE("dimension series")
{
    CHECK(format_coefficients(omega_dim_series(10)) == "1 1 1 2 2 3 4 5 6 8 10");
    for (int n = 0; n <= 10; ++n)
        CHECK(omega_dim_series(10)[static_cast<std::size_t>(n)] ==
              Rational(static_cast<long>(enumerate(n, PartitionKind::strict).size())));
}

}
