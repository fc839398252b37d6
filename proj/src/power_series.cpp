#include "qspin/power_series.hpp"

namespace qspin {

PowerSeries reciprocal(const PowerSeries& b)
{
    if (b[0] == 0)
        throw Error("reciprocal of a series with zero constant term");
    const std::size_t N = b.max_degree();
    std::vector<Rational> c(N + 1);
    c[0] = 1 / b[0];
    for (std::size_t n = 1; n <= N; ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k)
            acc += b[k] * c[n - k];
        c[n] = -acc / b[0];
    }
    return PowerSeries(std::move(c));
}

PowerSeries power_product(std::size_t N, StepSet steps, int sign, long exponent)
{
    if (sign != 1 && sign != -1)
        throw Error("power_product sign must be +1 or -1");
    std::vector<Rational> c(N + 1);
    c[0] = 1;
    const std::size_t first = steps == StepSet::even ? 2 : 1;
    const std::size_t stride = steps == StepSet::all ? 1 : 2;
    const unsigned long reps = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    for (std::size_t k = first; k <= N; k += stride) {
        for (unsigned long rep = 0; rep < reps; ++rep) {
            if (exponent > 0) {
                // multiply by (1 + sign t^k)
                for (std::size_t n = N; n >= k; --n)
                    c[n] += sign * c[n - k];
            } else {
                // divide by (1 + sign t^k)
                for (std::size_t n = k; n <= N; ++n)
                    c[n] -= sign * c[n - k];
            }
        }
    }
    return PowerSeries(std::move(c));
}

std::vector<Integer> integer_coefficients(const PowerSeries& s)
{
    std::vector<Integer> out;
    for (const auto& c : s.coefficients()) {
        if (c.get_den() != 1)
            throw Error("series coefficient " + c.get_str() + " is not an integer");
        out.push_back(c.get_num());
    }
    return out;
}

std::string format_coefficients(const PowerSeries& s, const std::string& separator)
{
    std::string out;
    for (std::size_t i = 0; i <= s.max_degree(); ++i) {
        if (i)
            out += separator;
        out += s[i].get_str();
    }
    return out;
}

} // namespace qspin
