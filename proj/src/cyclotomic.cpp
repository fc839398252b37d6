#include "qspin/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>

namespace qspin {

namespace {

using IntPoly = std::vector<Integer>;

// Phi_k via x^k - 1 = prod_{d | k} Phi_d.
IntPoly compute_cyclotomic_polynomial(unsigned k, std::map<unsigned, IntPoly>& cache);

const IntPoly& cyclotomic_polynomial(unsigned k)
{
    static std::mutex mutex;
    static std::map<unsigned, IntPoly> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(k); it != cache.end())
        return it->second;
    auto poly = compute_cyclotomic_polynomial(k, cache);
    return cache.emplace(k, std::move(poly)).first->second;
}

IntPoly compute_cyclotomic_polynomial(unsigned k, std::map<unsigned, IntPoly>& cache)
{
    IntPoly num(k + 1);
    num[0] = -1;
    num[k] = 1;
    for (unsigned d = 1; d < k; ++d) {
        if (k % d != 0)
            continue;
        auto it = cache.find(d);
        if (it == cache.end())
            it = cache.emplace(d, compute_cyclotomic_polynomial(d, cache)).first;
        const IntPoly& div = it->second;
        // Exact division by a monic polynomial.
        const std::size_t dd = div.size() - 1;
        IntPoly quot(num.size() - dd);
        for (std::size_t i = num.size(); i-- > dd;) {
            Integer c = num[i];
            quot[i - dd] = c;
            if (c != 0)
                for (std::size_t j = 0; j <= dd; ++j)
                    num[i - dd + j] -= c * div[j];
        }
        num = std::move(quot);
    }
    return num;
}

std::vector<Rational> reduce(std::vector<Rational> poly, unsigned k)
{
    const IntPoly& phi = cyclotomic_polynomial(k);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = poly.size(); i-- > deg;) {
        if (poly[i] == 0)
            continue;
        Rational c = poly[i];
        for (std::size_t j = 0; j <= deg; ++j)
            poly[i - deg + j] -= c * phi[j];
    }
    poly.resize(deg);
    return poly;
}

} // namespace

Cyclotomic::Cyclotomic() : coeffs_(1) {}

Cyclotomic::Cyclotomic(const Rational& value) : coeffs_{value} {}

Cyclotomic::Cyclotomic(long value) : coeffs_{Rational(value)} {}

Cyclotomic::Cyclotomic(unsigned order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs))
{
    normalize();
}

Cyclotomic Cyclotomic::root_of_unity(unsigned k, long j)
{
    if (k == 0)
        throw Error("root of unity of order 0");
    long e = ((j % static_cast<long>(k)) + k) % k;
    std::vector<Rational> poly(static_cast<std::size_t>(e) + 1);
    poly[static_cast<std::size_t>(e)] = 1;
    return Cyclotomic(k, reduce(std::move(poly), k));
}

void Cyclotomic::normalize()
{
    if (order_ == 1)
        return;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return;
    Rational c = coeffs_.empty() ? Rational(0) : coeffs_[0];
    order_ = 1;
    coeffs_.assign(1, c);
}

bool Cyclotomic::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

const Rational& Cyclotomic::to_rational() const
{
    if (order_ != 1)
        throw Error("cyclotomic value " + str() + " is not rational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::lifted(unsigned order) const
{
    if (order == order_)
        return *this;
    const unsigned step = order / order_;
    std::vector<Rational> poly(step * (coeffs_.size() - 1) + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        poly[i * step] = coeffs_[i];
    Cyclotomic out;
    out.order_ = order;
    out.coeffs_ = reduce(std::move(poly), order);
    return out;
}

Cyclotomic Cyclotomic::conj() const
{
    if (order_ == 1)
        return *this;
    std::vector<Rational> poly(order_);
    poly[0] = coeffs_[0];
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        poly[order_ - i] += coeffs_[i];
    return Cyclotomic(order_, reduce(std::move(poly), order_));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other)
{
    if (order_ == other.order_) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += other.coeffs_[i];
        normalize();
        return *this;
    }
    unsigned l = std::lcm(order_, other.order_);
    Cyclotomic a = lifted(l);
    Cyclotomic b = other.lifted(l);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        a.coeffs_[i] += b.coeffs_[i];
    a.normalize();
    return *this = std::move(a);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) { return *this += -other; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other)
{
    if (order_ == 1 && other.order_ == 1) {
        coeffs_[0] *= other.coeffs_[0];
        return *this;
    }
    unsigned l = std::lcm(order_, other.order_);
    Cyclotomic a = lifted(l);
    Cyclotomic b = other.lifted(l);
    std::vector<Rational> poly(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            poly[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return *this = Cyclotomic(l, reduce(std::move(poly), l));
}

Cyclotomic& Cyclotomic::operator/=(const Rational& other)
{
    if (other == 0)
        throw Error("division by zero");
    for (auto& c : coeffs_)
        c /= other;
    return *this;
}

Cyclotomic Cyclotomic::operator-() const
{
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b)
{
    if (a.order_ == b.order_)
        return a.coeffs_ == b.coeffs_;
    unsigned l = std::lcm(a.order_, b.order_);
    return a.lifted(l).coeffs_ == b.lifted(l).coeffs_;
}

std::string Cyclotomic::str() const
{
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0)
            continue;
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (!out.empty())
            out += negative ? "-" : "+";
        else if (negative)
            out += "-";
        std::string root;
        if (i > 0) {
            root = "E(" + std::to_string(order_) + ")";
            if (i > 1)
                root += "^" + std::to_string(i);
        }
        if (root.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += root;
        else
            out += mag.get_str() + "*" + root;
    }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& value) { return os << value.str(); }

namespace {

class CyclotomicParser {
public:
    explicit CyclotomicParser(std::string_view text) : text_(text) {}

    Cyclotomic parse()
    {
        skip_space();
        Cyclotomic total;
        bool first = true;
        while (pos_ < text_.size()) {
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = peek() == '-';
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            Cyclotomic term = parse_term();
            total += negative ? -term : term;
            first = false;
            skip_space();
        }
        if (first)
            fail("empty expression");
        return total;
    }

private:
    Cyclotomic parse_term()
    {
        Cyclotomic value = parse_factor();
        skip_space();
        while (peek() == '*') {
            ++pos_;
            skip_space();
            value *= parse_factor();
            skip_space();
        }
        return value;
    }

    Cyclotomic parse_factor()
    {
        if (peek() == 'E') {
            ++pos_;
            expect('(');
            long k = parse_uint();
            expect(')');
            long j = 1;
            skip_space();
            if (peek() == '^') {
                ++pos_;
                j = parse_uint();
            }
            if (k <= 0)
                fail("root of unity order must be positive");
            return Cyclotomic::root_of_unity(static_cast<unsigned>(k), j);
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
            ++pos_;
        if (start == pos_)
            fail("expected number or E(k)");
        return Cyclotomic(parse_rational(text_.substr(start, pos_ - start)));
    }

    long parse_uint()
    {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected integer");
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    void expect(char ch)
    {
        skip_space();
        if (peek() != ch)
            fail(std::string("expected '") + ch + "'");
        ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error("cannot parse cyclotomic '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                    ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Cyclotomic Cyclotomic::parse(std::string_view text) { return CyclotomicParser(text).parse(); }

} // namespace qspin
