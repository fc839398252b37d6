#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qspin/core.hpp"

namespace qspin {

/// Power series c_0 + c_1 t + ... + c_N t^N, exact modulo t^{N+1}.
///
/// R is any commutative Q-algebra value type supporting +, -, * and
/// multiplication by a Rational. Ring identities are passed explicitly
/// because coefficient types such as colored Omega carry context (labels,
/// groups) that a default-constructed value cannot know.
template <typename R>
class TruncatedSeries {
public:
    TruncatedSeries(std::size_t max_degree, const R& zero) : coeffs_(max_degree + 1, zero) {}
    explicit TruncatedSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty())
            throw Error("series needs at least the constant coefficient");
    }

    std::size_t max_degree() const { return coeffs_.size() - 1; }
    const R& operator[](std::size_t n) const { return coeffs_.at(n); }
    R& operator[](std::size_t n) { return coeffs_.at(n); }
    const std::vector<R>& coefficients() const { return coeffs_; }

    TruncatedSeries& operator+=(const TruncatedSeries& other)
    {
        check_same(other);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] = coeffs_[i] + other.coeffs_[i];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& other)
    {
        check_same(other);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] = coeffs_[i] - other.coeffs_[i];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        a.check_same(b);
        TruncatedSeries out(a.coeffs_);
        for (std::size_t n = 0; n < a.coeffs_.size(); ++n) {
            R acc = a.coeffs_[0] * b.coeffs_[n];
            for (std::size_t k = 1; k <= n; ++k)
                acc = acc + a.coeffs_[k] * b.coeffs_[n - k];
            out.coeffs_[n] = std::move(acc);
        }
        return out;
    }

    TruncatedSeries scaled(const Rational& s) const
    {
        TruncatedSeries out = *this;
        for (auto& c : out.coeffs_)
            c = c * s;
        return out;
    }

    /// f(t) -> f(-t).
    TruncatedSeries negated_variable() const
    {
        TruncatedSeries out = *this;
        for (std::size_t n = 1; n < out.coeffs_.size(); n += 2)
            out.coeffs_[n] = out.coeffs_[n] * Rational(-1);
        return out;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    void check_same(const TruncatedSeries& other) const
    {
        if (other.coeffs_.size() != coeffs_.size())
            throw Error("series truncation degrees differ");
    }

    std::vector<R> coeffs_;
};

/// exp(a) for a with zero constant term: n b_n = sum_{k=1}^n k a_k b_{n-k}.
template <typename R>
TruncatedSeries<R> exp(const TruncatedSeries<R>& a, const R& one)
{
    const std::size_t N = a.max_degree();
    if (!(a[0] == a[0] * Rational(0)))
        throw Error("exp needs a series with zero constant term");
    std::vector<R> b;
    b.reserve(N + 1);
    b.push_back(one);
    for (std::size_t n = 1; n <= N; ++n) {
        R acc = a[1] * b[n - 1];
        for (std::size_t k = 2; k <= n; ++k)
            acc = acc + (a[k] * b[n - k]) * Rational(static_cast<long>(k));
        b.push_back(acc * Rational(1, static_cast<long>(n)));
    }
    return TruncatedSeries<R>(std::move(b));
}

/// log(b) for b with constant term `one`: n a_n = n b_n - sum_{k=1}^{n-1} k a_k b_{n-k}.
template <typename R>
TruncatedSeries<R> log(const TruncatedSeries<R>& b, const R& one)
{
    const std::size_t N = b.max_degree();
    if (!(b[0] == one))
        throw Error("log needs a series with constant term 1");
    std::vector<R> a;
    a.reserve(N + 1);
    a.push_back(b[0] * Rational(0));
    for (std::size_t n = 1; n <= N; ++n) {
        R acc = b[n] * Rational(static_cast<long>(n));
        for (std::size_t k = 1; k < n; ++k)
            acc = acc - (a[k] * b[n - k]) * Rational(static_cast<long>(k));
        a.push_back(acc * Rational(1, static_cast<long>(n)));
    }
    return TruncatedSeries<R>(std::move(a));
}

using PowerSeries = TruncatedSeries<Rational>;

/// 1/b for a rational series with b_0 != 0.
PowerSeries reciprocal(const PowerSeries& b);

/// Which exponents k >= 1 a product runs over.
enum class StepSet { odd, even, all };

/// prod_{k in steps, k <= N} (1 + sign * t^k)^exponent, for sign = +1 or -1 and any integer exponent.
PowerSeries power_product(std::size_t N, StepSet steps, int sign, long exponent);

/// Coefficients as integers; throws if any coefficient is not integral.
std::vector<Integer> integer_coefficients(const PowerSeries& s);

std::string format_coefficients(const PowerSeries& s, const std::string& separator = " ");

} // namespace qspin
