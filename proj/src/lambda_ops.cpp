#include "qspin/lambda_ops.hpp"

#include "qspin/class_function.hpp"
#include "qspin/group_data.hpp"
#include "qspin/omega.hpp"

namespace qspin {

SplitElement::SplitElement(Polynomial poly) : poly_(std::move(poly))
{
    if (!poly_.is_integral())
        throw Error("split element with non-integer coefficient: " + poly_.str());
}

SplitElement SplitElement::line(std::size_t i, std::size_t variables)
{
    return SplitElement(Polynomial::variable(i, variables));
}

Integer SplitElement::rank() const
{
    Rational r = poly_.evaluate(std::vector<Rational>(poly_.variables(), Rational(1)));
    return r.get_num();
}

SplitElement& SplitElement::operator+=(const SplitElement& other)
{
    poly_ += other.poly_;
    return *this;
}

SplitElement& SplitElement::operator-=(const SplitElement& other)
{
    poly_ -= other.poly_;
    return *this;
}

SplitElement operator*(const SplitElement& a, const SplitElement& b)
{
    return SplitElement(a.poly_ * b.poly_);
}

OperationSeries::OperationSeries(TruncatedSeries<Polynomial> series) : series_(std::move(series))
{
    for (std::size_t n = 0; n <= series_.max_degree(); ++n)
        if (!series_[n].is_integral())
            throw Error("operation series coefficient of t^" + std::to_string(n) + " is not integral");
}

std::string OperationSeries::str() const
{
    std::string out;
    for (std::size_t n = 0; n <= max_degree(); ++n)
        out += "t^" + std::to_string(n) + ": " + series_[n].str() + "\n";
    return out;
}

namespace {

using PolySeries = TruncatedSeries<Polynomial>;

PolySeries zero_series(std::size_t variables, std::size_t N)
{
    return PolySeries(N, Polynomial(variables));
}

PolySeries one_series(std::size_t variables, std::size_t N)
{
    PolySeries out = zero_series(variables, N);
    out[0] = Polynomial::constant(1, variables);
    return out;
}

// psi^r for any r >= 1; even r only feeds the sigma_t and Lambda_t exponentials.
Polynomial any_adams(int r, const Polynomial& E)
{
    return E.power_substituted(r);
}

// exp(sum_{r=1}^N weight(r) psi^r(E) t^r / r).
PolySeries adams_exponential(const SplitElement& E, std::size_t N, long (*weight)(int))
{
    PolySeries a = zero_series(E.variables(), N);
    for (std::size_t r = 1; r <= N; ++r) {
        const long w = weight(static_cast<int>(r));
        if (w != 0)
            a[r] = any_adams(static_cast<int>(r), E.polynomial()) * ratio(w, static_cast<long>(r));
    }
    return exp(a, Polynomial::constant(1, E.variables()));
}

// 1 + sign * x t.
PolySeries linear_factor(const Polynomial& x, int sign, std::size_t N)
{
    PolySeries out = one_series(x.variables(), N);
    if (N >= 1)
        out[1] = x * Rational(sign);
    return out;
}

// sum_j (sign * x)^j t^j = 1 / (1 - sign * x t).
PolySeries geometric_factor(const Polynomial& x, int sign, std::size_t N)
{
    PolySeries out = one_series(x.variables(), N);
    for (std::size_t j = 1; j <= N; ++j)
        out[j] = out[j - 1] * x * Rational(sign);
    return out;
}

PolySeries power(const PolySeries& f, long k)
{
    PolySeries out = one_series(f[0].variables(), f.max_degree());
    for (long i = 0; i < k; ++i)
        out = out * f;
    return out;
}

// prod over lines x with multiplicity k of (positive factor)^k, or (negative factor)^{-k} for k < 0.
template <typename Factor>
OperationSeries line_product(const SplitElement& E, std::size_t N, Factor factor)
{
    PolySeries out = one_series(E.variables(), N);
    for (const auto& [exponents, k] : E.polynomial().terms()) {
        const Polynomial x = Polynomial::monomial(exponents);
        const long mult = k.get_num().get_si();
        out = out * power(factor(x, mult > 0), mult > 0 ? mult : -mult);
    }
    return OperationSeries(std::move(out));
}

long sym_weight(int) { return 1; }
long ext_weight(int r) { return r % 2 == 1 ? 1 : -1; }
long q_weight(int r) { return r % 2 == 1 ? 2 : 0; }

} // namespace

SplitElement adams(int r, const SplitElement& E)
{
    if (r < 1 || r % 2 == 0)
        throw Error("Adams operation psi^" + std::to_string(r) + ": only odd r >= 1 are defined");
    return SplitElement(any_adams(r, E.polynomial()));
}

OperationSeries sym_series(const SplitElement& E, std::size_t N)
{
    return OperationSeries(adams_exponential(E, N, sym_weight));
}

OperationSeries ext_series(const SplitElement& E, std::size_t N)
{
    return OperationSeries(adams_exponential(E, N, ext_weight));
}

OperationSeries q_series(const SplitElement& E, std::size_t N)
{
    return OperationSeries(adams_exponential(E, N, q_weight));
}

OperationSeries sym_series_product(const SplitElement& E, std::size_t N)
{
    return line_product(E, N, [N](const Polynomial& x, bool positive) {
        return positive ? geometric_factor(x, 1, N) : linear_factor(x, -1, N);
    });
}

OperationSeries ext_series_product(const SplitElement& E, std::size_t N)
{
    return line_product(E, N, [N](const Polynomial& x, bool positive) {
        return positive ? linear_factor(x, 1, N) : geometric_factor(x, -1, N);
    });
}

OperationSeries q_series_product(const SplitElement& E, std::size_t N)
{
    return line_product(E, N, [N](const Polynomial& x, bool positive) {
        return positive ? linear_factor(x, 1, N) * geometric_factor(x, 1, N)
                        : linear_factor(x, -1, N) * geometric_factor(x, -1, N);
    });
}

SplitElement qsusy(int n, const SplitElement& E)
{
    if (n < 0)
        throw Error("qsusy needs n >= 0");
    const auto N = static_cast<std::size_t>(n);
    const OperationSeries S = sym_series(E, N);
    const OperationSeries L = ext_series(E, N);
    Polynomial out(E.variables());
    for (std::size_t i = 0; i <= N; ++i)
        out += S.series()[i] * L.series()[N - i];
    return SplitElement(std::move(out));
}

QIdentityReport q_identities_check(const SplitElement& E, const SplitElement& F, std::size_t N)
{
    const OperationSeries QE = q_series(E, N);
    const OperationSeries QF = q_series(F, N);
    QIdentityReport report;
    report.sum_identity = q_series(E + F, N) == QE * QF;
    report.difference_identity = q_series(E - F, N) == QE * QF.negated_variable();
    return report;
}

int susy_exp_mismatch(const SplitElement& E, std::size_t N)
{
    const OperationSeries S = sym_series(E, N);
    const OperationSeries L = ext_series(E, N);
    const OperationSeries Q = q_series(E, N);
    for (std::size_t n = 0; n <= N; ++n) {
        Polynomial convolution(E.variables());
        for (std::size_t i = 0; i <= n; ++i)
            convolution += S.series()[i] * L.series()[n - i];
        if (!(convolution == Q.series()[n]))
            return static_cast<int>(n);
    }
    return -1;
}

Polynomial trace_of_op(const Partition& lambda, std::size_t m)
{
    if (!lambda.is_strict())
        throw Error("trace_of_op needs a strict partition, got " + lambda.str());
    if (m < 1)
        throw Error("trace_of_op needs at least one variable");
    const Rational scale = pow2(-static_cast<long>(lambda.length() / 2));
    const OmegaElem Q = Q_in_p(lambda);
    Polynomial out(m);
    for (const auto& [key, c] : Q.terms()) {
        Polynomial term = Polynomial::constant(c * scale, m);
        for (const auto& [label, mu] : key.entries()) {
            for (int r : mu.parts()) {
                Polynomial p(m);
                for (std::size_t i = 0; i < m; ++i)
                    p += Polynomial::variable(i, m).power_substituted(r);
                term = term * p;
            }
        }
        out += term;
    }
    return out;
}

std::pair<Rational, Integer> trace_dimension_check(std::size_t m, int n)
{
    if (n < 0)
        throw Error("trace_dimension_check needs n >= 0");
    const GroupPtr trivial = builtin_group("trivial");
    const std::vector<Rational> ones(m, Rational(1));
    const LabeledPartitionFn identity_class =
        LabeledPartitionFn::single(0, Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
    Rational lhs = 0;
    for (const Partition& lambda : enumerate(n, PartitionKind::strict)) {
        const Rational trace = trace_of_op(lambda, m).evaluate(ones);
        const Rational dim = irreducible_char(lambda, trivial).value(identity_class).to_rational();
        lhs += pow2(-static_cast<long>(lambda.length() % 2)) * trace * dim;
    }
    return {lhs, ipow(Integer(2 * static_cast<long>(m)), static_cast<unsigned long>(n))};
}

SplitElement random_split_element(std::mt19937_64& rng, std::size_t variables, int max_positive, int max_negative)
{
    if (variables < 1 || max_positive < 0 || max_negative < 0)
        throw Error("random_split_element needs variables >= 1 and nonnegative line counts");
    std::uniform_int_distribution<int> positive(max_positive > 0 ? 1 : 0, max_positive);
    std::uniform_int_distribution<int> negative(0, max_negative);
    std::uniform_int_distribution<std::size_t> var(0, variables - 1);
    std::uniform_int_distribution<int> degree(1, 2);
    auto random_line = [&]() {
        Polynomial::Exponents e(variables, 0);
        const int d = degree(rng);
        for (int i = 0; i < d; ++i)
            ++e[var(rng)];
        return SplitElement(Polynomial::monomial(std::move(e)));
    };
    SplitElement out(variables);
    const int pos = positive(rng);
    const int neg = negative(rng);
    for (int i = 0; i < pos; ++i)
        out += random_line();
    for (int i = 0; i < neg; ++i)
        out -= random_line();
    return out;
}

} // namespace qspin
