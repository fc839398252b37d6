#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qspin/core.hpp"

namespace qspin {

/// Exact element of a cyclotomic field Q(E(k)), E(k) = exp(2*pi*i/k).
///
/// Stored as coefficients on 1, E(k), ..., E(k)^(phi(k)-1), i.e. reduced
/// modulo the k-th cyclotomic polynomial. Rational values always use k = 1.
/// Mixed-order arithmetic lifts both operands to Q(E(lcm)).
class Cyclotomic {
public:
    Cyclotomic();
    Cyclotomic(const Rational& value); // NOLINT(google-explicit-constructor)
    Cyclotomic(long value);            // NOLINT(google-explicit-constructor)

    /// E(k)^j.
    static Cyclotomic root_of_unity(unsigned k, long j = 1);

    /// Parses sums of products of rationals and E(k)^j, e.g. "-1/2+3*E(4)", "E(3)^2".
    static Cyclotomic parse(std::string_view text);

    unsigned order() const { return order_; }
    bool is_zero() const;
    bool is_rational() const { return order_ == 1; }
    const Rational& to_rational() const;

    /// Complex conjugate.
    Cyclotomic conj() const;

    Cyclotomic& operator+=(const Cyclotomic& other);
    Cyclotomic& operator-=(const Cyclotomic& other);
    Cyclotomic& operator*=(const Cyclotomic& other);
    Cyclotomic& operator/=(const Rational& other);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Rational& b) { return a /= b; }
    Cyclotomic operator-() const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    std::string str() const;

private:
    Cyclotomic(unsigned order, std::vector<Rational> coeffs);
    Cyclotomic lifted(unsigned order) const;
    void normalize();

    unsigned order_ = 1;
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& value);

} // namespace qspin
