#pragma once

#include <cstdint>
#include <memory>
#include <numeric>

#include "qspin/core.hpp"

namespace qspin {

/// Exact rational with an inline 64-bit representation.
///
/// Values whose reduced numerator and denominator fit in int64 never touch the
/// heap; anything larger is promoted to a shared GMP rational, so results are
/// always exact.
class CompactRational {
public:
    CompactRational() = default;
    CompactRational(long value) : num_(value) {} // NOLINT(google-explicit-constructor)
    explicit CompactRational(const Rational& q) { assign(q); }
    static CompactRational fraction(long num, long den) { return make(num, den); }

    Rational to_rational() const
    {
        if (big_)
            return *big_;
        Rational out(Integer(static_cast<long>(num_)), Integer(static_cast<long>(den_)));
        return out;
    }

    bool is_zero() const { return !big_ && num_ == 0; }

    friend CompactRational operator+(const CompactRational& a, const CompactRational& b)
    {
        if (a.big_ || b.big_)
            return CompactRational(a.to_rational() + b.to_rational());
        if (a.den_ == b.den_)
            return make(static_cast<Wide>(a.num_) + b.num_, a.den_);
        const std::int64_t g = gcd(static_cast<Wide>(a.den_), static_cast<Wide>(b.den_));
        return make(static_cast<Wide>(a.num_) * (b.den_ / g) + static_cast<Wide>(b.num_) * (a.den_ / g),
                    static_cast<Wide>(a.den_) * (b.den_ / g));
    }

    friend CompactRational operator-(const CompactRational& a) { return a * CompactRational(-1); }
    friend CompactRational operator-(const CompactRational& a, const CompactRational& b) { return a + (-b); }

    friend CompactRational operator*(const CompactRational& a, const CompactRational& b)
    {
        if (a.big_ || b.big_)
            return CompactRational(a.to_rational() * b.to_rational());
        return make(static_cast<Wide>(a.num_) * b.num_, static_cast<Wide>(a.den_) * b.den_);
    }

    CompactRational& operator+=(const CompactRational& b) { return *this = *this + b; }
    CompactRational& operator*=(const CompactRational& b) { return *this = *this * b; }

    friend bool operator==(const CompactRational& a, const CompactRational& b)
    {
        if (a.big_ || b.big_)
            return a.to_rational() == b.to_rational();
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    __extension__ using Wide = __int128;
    __extension__ using UWide = unsigned __int128;

    static Wide gcd(Wide a, Wide b)
    {
        if (a < 0)
            a = -a;
        if (b < 0)
            b = -b;
        while (b != 0) {
            Wide t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static CompactRational make(Wide num, Wide den)
    {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (den != 1 && num >= -INT64_MAX && num <= INT64_MAX && den <= INT64_MAX) {
            const auto n64 = static_cast<std::int64_t>(num);
            const auto g = std::gcd(static_cast<std::uint64_t>(n64 < 0 ? -n64 : n64), static_cast<std::uint64_t>(den));
            if (g > 1) {
                num /= static_cast<Wide>(g);
                den /= static_cast<Wide>(g);
            }
        } else if (den != 1) {
            Wide g = gcd(num, den);
            if (g > 1) {
                num /= g;
                den /= g;
            }
        }
        if (num == 0)
            den = 1;
        CompactRational out;
        if (num >= INT64_MIN && num <= INT64_MAX && den <= INT64_MAX) {
            out.num_ = static_cast<std::int64_t>(num);
            out.den_ = static_cast<std::int64_t>(den);
        } else {
            out.big_ = std::make_shared<const Rational>(Rational(wide_integer(num), wide_integer(den)));
        }
        return out;
    }

    static Integer wide_integer(Wide v)
    {
        const bool negative = v < 0;
        UWide mag = negative ? static_cast<UWide>(-(v + 1)) + 1 : static_cast<UWide>(v);
        Integer hi(static_cast<unsigned long>(mag >> 64));
        Integer lo(static_cast<unsigned long>(mag & 0xffffffffffffffffULL));
        Integer out = hi * Integer(2) * Integer(static_cast<unsigned long>(1UL << 63)) + lo;
        return negative ? Integer(-out) : out;
    }

    void assign(const Rational& q)
    {
        if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
            num_ = q.get_num().get_si();
            den_ = q.get_den().get_si();
        } else {
            big_ = std::make_shared<const Rational>(q);
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const Rational> big_;
};

} // namespace qspin
