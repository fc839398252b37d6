#include "qspin/core.hpp"

#include <cctype>

namespace qspin {

Integer factorial(unsigned long n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer binomial(unsigned long n, unsigned long k)
{
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Integer ipow(const Integer& base, unsigned long exponent)
{
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

Rational ratio(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw Error("zero denominator");
    Rational out(num, den);
    out.canonicalize();
    return out;
}

Rational pow2(long e)
{
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0)
        return Rational(p);
    Rational out(Integer(1), p);
    out.canonicalize();
    return out;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(std::string_view text)
{
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char ch : s)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                return false;
        return true;
    };
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!valid_int(num, true) || !valid_int(den, false))
        throw Error("malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (!n.empty() && n.front() == '+')
        n.erase(0, 1);
    Integer d{std::string(den)};
    if (d == 0)
        throw Error("zero denominator in '" + std::string(text) + "'");
    Rational out(Integer(n), d);
    out.canonicalize();
    return out;
}

} // namespace qspin
