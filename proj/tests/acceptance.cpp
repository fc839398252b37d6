// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qspin/class_function.hpp"
#include "qspin/fock.hpp"
#include "qspin/lambda_ops.hpp"
#include "qspin/omega.hpp"
#include "qspin/verify.hpp"

using namespace qspin;

namespace {

struct Tally {
    std::size_t checks = 0;
    std::string failure;

    void expect(bool ok, const std::string& what)
    {
        ++checks;
        if (!ok && failure.empty())
            failure = what;
    }
};

Rational count(std::size_t n) { return Rational(static_cast<long>(n)); }

Tally point_dimension()
{
    Tally t;
    for (const char* name : {"trivial", "z2", "z3"}) {
        const GroupPtr g = builtin_group(name);
        const PowerSeries series = dim_series_point(*g, 20);
        for (int n = 0; n <= 20; ++n)
            t.expect(series[static_cast<std::size_t>(n)] == count(enumerate(n, PartitionKind::odd, g->labels()).size()),
                     std::string(name) + " n=" + std::to_string(n));
    }
    return t;
}

Tally omega_dimension()
{
    Tally t;
    const PowerSeries series = omega_dim_series(30);
    for (int n = 0; n <= 30; ++n)
        t.expect(series[static_cast<std::size_t>(n)] == count(enumerate(n, PartitionKind::strict).size()),
                 "n=" + std::to_string(n));
    return t;
}

Tally basic_character_image()
{
    Tally t;
    const GroupPtr g = builtin_group("trivial");
    for (int n = 0; n <= 12; ++n)
        t.expect(ch_prime(xi(n, g)) == q_in_p(n), "n=" + std::to_string(n));
    return t;
}

Tally irreducible_orthogonality()
{
    Tally t;
    const GroupPtr g = builtin_group("trivial");
    for (int n = 0; n <= 10; ++n) {
        std::vector<std::pair<Partition, OmegaElem>> images;
        for (const Partition& lambda : enumerate(n, PartitionKind::strict))
            images.emplace_back(lambda, ch_prime(irreducible_char(lambda, g)));
        for (const auto& [a, fa] : images)
            for (const auto& [b, fb] : images) {
                const Rational expected = a == b ? Rational(a.length() % 2 == 1 ? 2 : 1) : Rational(0);
                t.expect(inner(fa, fb) == expected, a.str() + " vs " + b.str());
            }
    }
    return t;
}

const std::vector<std::pair<int, int>> sector_points{{1, 0}, {0, 1}, {2, 1}, {3, 2}};

Tally fock_counts()
{
    Tally t;
    for (auto [d0, d1] : sector_points) {
        const SectorModel model = SectorModel::point(d0, d1);
        const PowerSeries series = dim_series(model, 12);
        for (int n = 0; n <= 12; ++n)
            t.expect(count(fock_basis(model, n).size()) == series[static_cast<std::size_t>(n)],
                     model.describe() + " n=" + std::to_string(n));
    }
    return t;
}

Tally heisenberg()
{
    Tally t;
    for (auto [d0, d1] : sector_points) {
        const SectorModel model = SectorModel::point(d0, d1);
        const CommutatorReport report = commutator_check(model, 9, 50, 1);
        t.checks += report.checks;
        if (!report.passed && t.failure.empty())
            t.failure = model.describe() + ": " + report.first_failure;
    }
    return t;
}

Tally vertex_operator()
{
    Tally t;
    for (const char* name : {"trivial", "z2", "z3"}) {
        const GroupPtr g = builtin_group(name);
        for (std::size_t i = 0; i < g->irreducible_count(); ++i) {
            const auto direct = vertex_Q(g->character(i), g, 6);
            const auto exponential = vertex_Q_exponential(g->character(i), g, 6);
            for (std::size_t n = 0; n <= 6; ++n)
                t.expect(direct[n] == exponential[n],
                         std::string(name) + " V" + std::to_string(i) + " n=" + std::to_string(n));
        }
    }
    return t;
}

Tally q_lambda_identities()
{
    Tally t;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        std::mt19937_64 rng(seed);
        const SplitElement E = random_split_element(rng, 4, 4, 2);
        const SplitElement F = random_split_element(rng, 4, 4, 2);
        const std::string where = "seed " + std::to_string(seed);
        t.expect(susy_exp_mismatch(E, 8) == -1, where + " susy/exp");
        const QIdentityReport r = q_identities_check(E, F, 8);
        t.expect(r.sum_identity, where + " Q_t(E+F)");
        t.expect(r.difference_identity, where + " Q_t(E-F)");
    }
    return t;
}

Tally euler_series_counts()
{
    Tally t;
    for (long e = -2; e <= 3; ++e) {
        const SectorModel model = e >= 0 ? SectorModel::point(static_cast<int>(e) + 1, 1)
                                         : SectorModel::point(1, 1 - static_cast<int>(e));
        const PowerSeries series = euler_series(e, 10);
        for (int n = 0; n <= 10; ++n)
            t.expect(Rational(superdimension(model, n)) == series[static_cast<std::size_t>(n)],
                     "e=" + std::to_string(e) + " n=" + std::to_string(n));
    }
    return t;
}

Tally spin_module_count()
{
    Tally t;
    const PowerSeries series = euler_s_series(1, 20);
    for (int n = 0; n <= 20; ++n) {
        long expected = 0;
        for (const Partition& lambda : enumerate(n, PartitionKind::strict))
            expected += (n - static_cast<int>(lambda.length())) % 2 == 0 ? 1 : 2;
        t.expect(series[static_cast<std::size_t>(n)] == Rational(expected), "n=" + std::to_string(n));
    }
    return t;
}

Tally hopf_axioms()
{
    Tally t;
    for (const char* name : {"trivial", "z2"}) {
        VerifyConfig config;
        config.group = builtin_group(name);
        config.N = 8;
        for (const ItemResult& r : run_suite("hopf", config).items) {
            t.checks += r.checks;
            if (!r.passed && t.failure.empty())
                t.failure = std::string(name) + " " + r.id + ": " + r.detail;
        }
    }
    return t;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Tally()>>> criteria{
        {"1 point-case dimension series, n <= 20, |classes| in {1,2,3}", point_dimension},
        {"2 graded dimension of Omega equals strict partition count, n <= 30", omega_dimension},
        {"3 ch'(xi^n) = q_n, n <= 12", basic_character_image},
        {"4 orthogonality of ch' T^lambda, |lambda| <= 10", irreducible_orthogonality},
        {"5 Fock basis counts match the product formula, n <= 12", fock_counts},
        {"6 Heisenberg relations, degree <= 9, 50 samples per model", heisenberg},
        {"7 vertex operator agreement, trivial/Z2/Z3, n <= 6", vertex_operator},
        {"8 Q-lambda identities to t^8, 20 seeds", q_lambda_identities},
        {"9 Euler series against signed Fock dimensions, e in -2..3, n <= 10", euler_series_counts},
        {"10 e^s series equals the spin module count, n <= 20", spin_module_count},
        {"11 Hopf axioms on generators of degree <= 8, trivial and Z2", hopf_axioms},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Tally t;
        try {
            t = run();
        } catch (const std::exception& e) {
            t.failure = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = t.failure.empty() && t.checks > 0;
        if (!ok)
            ++failed;
        std::printf("%s %s (%zu checks, %.1fs)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), t.checks, seconds,
                    t.failure.empty() ? "" : ": ", t.failure.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
