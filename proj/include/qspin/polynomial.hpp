#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "qspin/core.hpp"

namespace qspin {

/// Sparse polynomial in x_1..x_m with exact rational coefficients.
///
/// Terms are kept sorted by exponent vector with no zero coefficients, so
/// structural equality is polynomial equality.
class Polynomial {
public:
    using Exponents = boost::container::small_vector<std::int32_t, 8>;
    using Term = std::pair<Exponents, Rational>;

    explicit Polynomial(std::size_t variables = 0) : variables_(variables) {}
    static Polynomial constant(const Rational& c, std::size_t variables);
    /// x_i (0-based i).
    static Polynomial variable(std::size_t i, std::size_t variables);
    static Polynomial monomial(Exponents exponents, const Rational& c = 1);

    std::size_t variables() const { return variables_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Exponents& exponents) const;
    bool is_integral() const;
    /// Largest total degree; -1 for zero.
    int degree() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& s);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const { return *this * Rational(-1); }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// x^a -> x^{k a}.
    Polynomial power_substituted(int k) const;
    /// Value with x_i = point[i].
    Rational evaluate(const std::vector<Rational>& point) const;

    /// "x1^3 + 2 x1 x2 - 1/2"; "0" for zero.
    std::string str() const;

private:
    void check_variables(const Polynomial& other) const;
    Polynomial& merge(const Polynomial& other, bool negate);

    std::size_t variables_ = 0;
    std::vector<Term> terms_;
};

} // namespace qspin
