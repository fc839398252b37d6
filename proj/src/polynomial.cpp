#include "qspin/polynomial.hpp"

#include <algorithm>

namespace qspin {

Polynomial Polynomial::constant(const Rational& c, std::size_t variables)
{
    Polynomial out(variables);
    if (c != 0)
        out.terms_.emplace_back(Exponents(variables, 0), c);
    return out;
}

Polynomial Polynomial::variable(std::size_t i, std::size_t variables)
{
    if (i >= variables)
        throw Error("variable index " + std::to_string(i) + " out of range");
    Exponents e(variables, 0);
    e[i] = 1;
    return monomial(std::move(e));
}

Polynomial Polynomial::monomial(Exponents exponents, const Rational& c)
{
    if (std::any_of(exponents.begin(), exponents.end(), [](std::int32_t a) { return a < 0; }))
        throw Error("negative exponent in monomial");
    Polynomial out(exponents.size());
    if (c != 0)
        out.terms_.emplace_back(std::move(exponents), c);
    return out;
}

Rational Polynomial::coefficient(const Exponents& exponents) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponents,
                               [](const Term& t, const Exponents& key) { return t.first < key; });
    return it != terms_.end() && it->first == exponents ? it->second : Rational(0);
}

bool Polynomial::is_integral() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second.get_den() == 1; });
}

int Polynomial::degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int total = 0;
        for (auto a : e)
            total += a;
        d = std::max(d, total);
    }
    return d;
}

void Polynomial::check_variables(const Polynomial& other) const
{
    if (other.variables_ != variables_)
        throw Error("polynomials in " + std::to_string(variables_) + " and " + std::to_string(other.variables_) +
                    " variables");
}

Polynomial& Polynomial::merge(const Polynomial& other, bool negate)
{
    check_variables(other);
    if (other.terms_.empty())
        return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first < a->first) {
            merged.emplace_back(b->first, negate ? Rational(-b->second) : b->second);
            ++b;
        } else {
            Rational c = negate ? Rational(a->second - b->second) : Rational(a->second + b->second);
            if (c != 0)
                merged.emplace_back(std::move(a->first), std::move(c));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) { return merge(other, false); }
Polynomial& Polynomial::operator-=(const Polynomial& other) { return merge(other, true); }

Polynomial& Polynomial::operator*=(const Rational& s)
{
    if (s == 0)
        terms_.clear();
    for (auto& t : terms_)
        t.second *= s;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    a.check_variables(b);
    std::vector<Polynomial::Term> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Polynomial::Exponents e(ea);
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] += eb[i];
            products.emplace_back(std::move(e), ca * cb);
        }
    }
    std::sort(products.begin(), products.end(),
              [](const Polynomial::Term& x, const Polynomial::Term& y) { return x.first < y.first; });
    Polynomial out(a.variables_);
    for (auto& t : products) {
        if (!out.terms_.empty() && out.terms_.back().first == t.first) {
            out.terms_.back().second += t.second;
        } else {
            if (!out.terms_.empty() && out.terms_.back().second == 0)
                out.terms_.pop_back();
            out.terms_.push_back(std::move(t));
        }
    }
    if (!out.terms_.empty() && out.terms_.back().second == 0)
        out.terms_.pop_back();
    return out;
}

Polynomial Polynomial::power_substituted(int k) const
{
    if (k < 1)
        throw Error("power substitution needs k >= 1");
    Polynomial out = *this;
    for (auto& [e, c] : out.terms_)
        for (auto& a : e)
            a *= k;
    return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const
{
    if (point.size() != variables_)
        throw Error("evaluation point has the wrong number of coordinates");
    Rational out = 0;
    for (const auto& [e, c] : terms_) {
        Rational m = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k)
                m *= point[i];
        out += m;
    }
    return out;
}

std::string Polynomial::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    // Highest exponent vectors first reads naturally: x1^3 before x1 x2 before constants.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += " ";
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        std::string piece;
        if (mono.empty())
            piece = mag.get_str();
        else if (mag == 1)
            piece = mono;
        else
            piece = mag.get_str() + " " + mono;
        if (out.empty())
            out = negative ? "-" + piece : piece;
        else
            out += (negative ? " - " : " + ") + piece;
    }
    return out;
}

} // namespace qspin
