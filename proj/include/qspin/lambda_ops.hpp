#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qspin/partitions.hpp"
#include "qspin/polynomial.hpp"
#include "qspin/power_series.hpp"

namespace qspin {

/// Virtual sum of line elements: an integer polynomial in the line variables.
/// Each monomial with coefficient k stands for k copies of that line (k < 0 is virtual).
class SplitElement {
public:
    explicit SplitElement(std::size_t variables = 0) : poly_(variables) {}
    /// Throws if a coefficient is not an integer.
    explicit SplitElement(Polynomial poly);

    /// x_i as an element of rank 1 (0-based i).
    static SplitElement line(std::size_t i, std::size_t variables);

    const Polynomial& polynomial() const { return poly_; }
    std::size_t variables() const { return poly_.variables(); }
    bool is_zero() const { return poly_.is_zero(); }
    /// Value at x_i = 1.
    Integer rank() const;

    SplitElement& operator+=(const SplitElement& other);
    SplitElement& operator-=(const SplitElement& other);
    friend SplitElement operator+(SplitElement a, const SplitElement& b) { return a += b; }
    friend SplitElement operator-(SplitElement a, const SplitElement& b) { return a -= b; }
    friend SplitElement operator*(const SplitElement& a, const SplitElement& b);
    friend bool operator==(const SplitElement&, const SplitElement&) = default;

    std::string str() const { return poly_.str(); }

private:
    Polynomial poly_;
};

/// Series in t with split-element coefficients, exact modulo t^{N+1}.
class OperationSeries {
public:
    /// Throws if some coefficient is not integral.
    explicit OperationSeries(TruncatedSeries<Polynomial> series);

    std::size_t max_degree() const { return series_.max_degree(); }
    SplitElement coefficient(std::size_t n) const { return SplitElement(series_[n]); }
    const TruncatedSeries<Polynomial>& series() const { return series_; }

    friend OperationSeries operator*(const OperationSeries& a, const OperationSeries& b)
    {
        return OperationSeries(a.series_ * b.series_);
    }
    /// f(t) -> f(-t).
    OperationSeries negated_variable() const { return OperationSeries(series_.negated_variable()); }
    friend bool operator==(const OperationSeries&, const OperationSeries&) = default;

    /// One coefficient per line, t^0 first.
    std::string str() const;

private:
    TruncatedSeries<Polynomial> series_;
};

/// Odd Adams operation psi^r; throws on even r.
SplitElement adams(int r, const SplitElement& E);

/// sigma_t(E) = exp(sum_{r>=1} psi^r(E) t^r / r).
OperationSeries sym_series(const SplitElement& E, std::size_t N);
/// Lambda_t(E) = exp(sum_{r>=1} (-1)^{r-1} psi^r(E) t^r / r).
OperationSeries ext_series(const SplitElement& E, std::size_t N);
/// prod over lines (1 - x t)^{-k}: the closed form of sym_series.
OperationSeries sym_series_product(const SplitElement& E, std::size_t N);
/// prod over lines (1 + x t)^{k}: the closed form of ext_series.
OperationSeries ext_series_product(const SplitElement& E, std::size_t N);

/// sum_{i=0}^n S^i(E) Lambda^{n-i}(E).
SplitElement qsusy(int n, const SplitElement& E);
/// Q_t(E) = exp(sum_{r odd} 2 psi^r(E) t^r / r).
OperationSeries q_series(const SplitElement& E, std::size_t N);
/// prod over lines ((1 + x t) / (1 - x t))^{k}.
OperationSeries q_series_product(const SplitElement& E, std::size_t N);

struct QIdentityReport {
    bool sum_identity = false;        ///< Q_t(E + F) = Q_t(E) Q_t(F)
    bool difference_identity = false; ///< Q_t(E - F) = Q_t(E) Q_{-t}(F)
    bool passed() const { return sum_identity && difference_identity; }
};
QIdentityReport q_identities_check(const SplitElement& E, const SplitElement& F, std::size_t N);

/// First n in 0..N where qsusy(n, E) differs from the t^n coefficient of q_series, or -1.
int susy_exp_mismatch(const SplitElement& E, std::size_t N);

/// 2^{-floor(l/2)} Q_lambda evaluated at p_r = x_1^r + ... + x_m^r.
Polynomial trace_of_op(const Partition& lambda, std::size_t m);

/// Left and right sides of sum_{lambda strict, |lambda| = n} 2^{-delta(l)} trace_lambda(1..1) dim T^lambda = (2m)^n.
std::pair<Rational, Integer> trace_dimension_check(std::size_t m, int n);

/// Virtual element with up to max_positive lines minus up to max_negative lines,
/// each line a monomial of degree 1 or 2 in `variables` variables.
SplitElement random_split_element(std::mt19937_64& rng, std::size_t variables, int max_positive, int max_negative);

} // namespace qspin
