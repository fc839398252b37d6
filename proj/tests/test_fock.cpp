#include <doctest.h>

#include "qspin/fock.hpp"

using namespace qspin;

namespace {

FockBasisState state(std::initializer_list<std::pair<int, std::size_t>> gens)
{
    FockBasisState s;
    for (auto [r, b] : gens)
        s.generators.push_back(make_generator(r, b));
    return s;
}

} // namespace

TEST_SUITE("fock") {

TEST_CASE("dimension tables")
{
    CHECK(format_coefficients(dim_series(SectorModel::point(1, 0), 12)) == "1 1 1 2 2 3 4 5 6 8 10 12 15");
    CHECK(format_coefficients(dim_series(SectorModel::point(0, 1), 12)) == "1 1 0 1 1 1 1 1 2 2 2 2 3");
    CHECK(format_coefficients(dim_series(SectorModel::point(2, 1), 12)) ==
          "1 3 5 10 18 29 48 75 114 172 254 368 527");
    CHECK(format_coefficients(dim_series(SectorModel::point(3, 2), 12)) ==
          "1 5 13 30 66 131 248 453 794 1356 2262 3688 5903");
    for (const auto& model : {SectorModel::point(1, 0), SectorModel::point(0, 1), SectorModel::point(2, 1)}) {
        const PowerSeries series = dim_series(model, 9);
        for (int n = 0; n <= 9; ++n)
            CHECK(Rational(static_cast<long>(fock_basis(model, n).size())) == series[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("model loading")
{
    const SectorModel m = SectorModel::load(QSPIN_DATA_DIR "/models/z2_mixed.json");
    CHECK(m.even_dim() == 2);
    CHECK(m.odd_dim() == 1);
    CHECK(m.euler_number() == 1);
    CHECK(format_coefficients(dim_series(m, 8)) == "1 3 5 10 18 29 48 75 114");
    CHECK(dim_series(SectorModel::load(QSPIN_DATA_DIR "/models/empty.json"), 4)[4] == 0);
    CHECK_THROWS_AS(SectorModel::from_json(nlohmann::json::parse(R"({"group":"z2","sectors":[{"class":"c7","d0":1,"d1":0}]})"),
                                           "."),
                    Error);
    CHECK_THROWS_AS(SectorModel::from_json(nlohmann::json::parse(R"({"group":"z2","sectors":[{"class":"c0","d0":-1,"d1":0}]})"),
                                           "."),
                    Error);
    CHECK_THROWS_AS(SectorModel::from_json(nlohmann::json::parse(R"({"sectors":[]})"), "."), Error);
}

TEST_CASE("creation and annihilation")
{
    const SectorModel even = SectorModel::point(1, 0);
    const FockVector vac = FockVector::vacuum();
    const FockVector one = a_create(1, {1}, vac, even);
    CHECK(one == FockVector::basis(state({{1, 0}})) * Rational(1, 2));
    CHECK(a_create(1, {1}, one, even) == FockVector::basis(state({{1, 0}, {1, 0}})) * Rational(1, 4));
    CHECK(a_annihilate(1, {1}, one, even) == vac * Rational(1, 2));
    CHECK(a_annihilate(1, {1}, vac, even).is_zero());
    CHECK(a_annihilate(3, {1}, one, even).is_zero());
    // d/dp on p^2 gives 2p
    const FockVector sq = FockVector::basis(state({{1, 0}, {1, 0}}));
    CHECK(a_annihilate(1, {1}, sq, even) == FockVector::basis(state({{1, 0}})) * Rational(2));

    const SectorModel odd = SectorModel::point(0, 1);
    const FockVector psi = a_create(3, {1}, vac, odd);
    CHECK(a_create(3, {1}, psi, odd).is_zero());
    const FockVector two = a_create(1, {1}, psi, odd);
    CHECK(two.terms().size() == 1);
    // the odd derivation picks up a sign passing the first odd generator
    CHECK(a_annihilate(3, {1}, two, odd) == a_create(1, {1}, vac, odd) * Rational(-3, 2));

    CHECK_THROWS_AS(a_create(2, {1}, vac, even), Error);
    CHECK_THROWS_AS(a_annihilate(4, {1}, vac, even), Error);
}

TEST_CASE("varpi and ch_n")
{
    const SectorModel m = SectorModel::point(2, 1);
    const SectorVector v{Rational(1), Rational(-2, 3), Rational(5)};
    CHECK(ch_n(3, varpi(3, v, m), m) == v);
    CHECK(ch_n(1, varpi(3, v, m), m) == SectorVector(3, Rational(0)));
    CHECK(pairing({1, 1, 1}, v) == Rational(16, 3));
}

TEST_CASE("superdimension matches the Euler series")
{
    for (const auto& model : {SectorModel::point(1, 0), SectorModel::point(0, 1), SectorModel::point(2, 1),
                              SectorModel::point(1, 3)}) {
        const PowerSeries e = euler_series(model.euler_number(), 9);
        for (int n = 0; n <= 9; ++n)
            CHECK(Rational(superdimension(model, n)) == e[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("euler series")
{
    CHECK(format_coefficients(euler_series(-2, 10)) == "1 -2 1 -2 4 -4 5 -6 9 -12 13");
    CHECK(format_coefficients(euler_series(0, 4)) == "1 0 0 0 0");
    CHECK(format_coefficients(euler_series(3, 10)) == "1 3 6 13 24 42 73 120 192 302 465");
    CHECK(format_coefficients(euler_s_series(1, 20)) == "1 1 2 3 3 5 6 8 9 12 15 18 23 27 33 40 48 57 69 81 96");
}

TEST_CASE("cyclicity and commutators")
{
    const SectorModel m = SectorModel::point(2, 1);
    for (int n = 0; n <= 5; ++n)
        for (const auto& s : fock_basis(m, n))
            CHECK(cyclicity_check(FockVector::basis(s), m));
    CHECK_FALSE(cyclicity_check(FockVector(), m));

    for (const auto& model : {SectorModel::point(1, 0), SectorModel::point(0, 1), SectorModel::point(2, 1)}) {
        const CommutatorReport report = commutator_check(model, 5, 3, 7);
        CHECK_MESSAGE(report.passed, report.first_failure);
        CHECK(report.checks > 0);
    }
}

}
