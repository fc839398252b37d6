#include <doctest.h>

#include "qspin/class_function.hpp"

using namespace qspin;

namespace {

LabeledPartitionFn at0(Partition p) { return LabeledPartitionFn::single(0, std::move(p)); }

Cyclotomic C(long v) { return Cyclotomic(v); }

} // namespace

TEST_SUITE("spinchar") {

TEST_CASE("sigma values")
{
    const GroupPtr g = builtin_group("trivial");
    const ClassFunction s = sigma_rho(at0(Partition{3}), g);
    CHECK(s.value(at0(Partition{3})) == C(6));
    CHECK(s.value(at0(Partition{1, 1, 1})) == C(0));
    CHECK(s.sigma_coordinate(at0(Partition{3})) == C(1));
    // sigma_r carries value r zeta_c, half of sigma^{(r)}
    CHECK(sigma(3, 0, g) * Rational(2) == s);
    CHECK_THROWS_AS(sigma(2, 0, g), Error);
    // sigma^rho sigma^tau = sigma^{rho u tau}
    CHECK(sigma(1, 0, g) * sigma(1, 0, g) * Rational(4) == sigma_rho(at0(Partition{1, 1}), g));
    ClassFunction bad(g, 2);
    CHECK_THROWS_AS(bad.set(at0(Partition{2}), C(1)), Error);
}

TEST_CASE("basic and irreducible characters in degree 3")
{
    const GroupPtr g = builtin_group("trivial");
    const ClassFunction x = xi(3, g);
    CHECK(x.value(at0(Partition{3})) == C(2));
    CHECK(x.value(at0(Partition{1, 1, 1})) == C(8));
    const ClassFunction T = irreducible_char(Partition{2, 1}, g);
    CHECK(T.value(at0(Partition{3})) == C(-2));
    CHECK(T.value(at0(Partition{1, 1, 1})) == C(4));
    CHECK(irreducible_char(Partition{3}, g) == x);
}

TEST_CASE("characteristic map")
{
    const GroupPtr g = builtin_group("trivial");
    CHECK(ch_prime(xi(2, g)) == p_monomial(Partition{1, 1}) * Rational(2));
    for (int n = 0; n <= 8; ++n)
        CHECK(ch_prime(xi(n, g)) == q_in_p(n));
    const ClassFunction T = irreducible_char(Partition{3, 1}, g);
    CHECK(ch_prime(T) == Q_in_p(Partition{3, 1}) * Rational(1, 2));
    CHECK(ch_prime_inverse(ch_prime(T), g) == T);
    CHECK(ch_prime(one(g)) == OmegaElem::scalar(1));
}

TEST_CASE("star with linear characters")
{
    const GroupPtr z2 = builtin_group("z2");
    const ClassFunction x = xi(2, z2);
    CHECK(star(0, x) == x);
    const ClassFunction s = star(1, x);
    const auto mixed = LabeledPartitionFn::from_named(z2->labels(), {{"c0", Partition{1}}, {"c1", Partition{1}}});
    const auto twisted = LabeledPartitionFn::from_named(z2->labels(), {{"c1", Partition{1, 1}}});
    CHECK(s.value(mixed) == C(-4));
    CHECK(s.value(twisted) == C(4));
    CHECK(star(std::vector<Cyclotomic>{C(1), C(-1)}, x) == s);
    const GroupPtr trivial = builtin_group("trivial");
    CHECK(star(0, xi(4, trivial)) == xi(4, trivial));
}

TEST_CASE("vertex operator routes agree")
{
    const GroupPtr z3 = builtin_group("z3");
    for (std::size_t i = 0; i < z3->irreducible_count(); ++i)
        CHECK(vertex_Q(z3->character(i), z3, 4) == vertex_Q_exponential(z3->character(i), z3, 4));
}

TEST_CASE("coproduct, counit and antipode")
{
    const GroupPtr g = builtin_group("trivial");
    const LabeledPartitionFn empty;
    const LabeledPartitionFn one_box = at0(Partition{1});
    const Tensor d = coproduct(sigma(1, 0, g));
    CHECK(d.terms().size() == 2);
    CHECK(d.terms().at({one_box, empty}) == Cyclotomic(Rational(1, 2)));
    CHECK(d.terms().at({empty, one_box}) == Cyclotomic(Rational(1, 2)));

    // sigma^{(1,1)} -> 1 (x) s11 + 2 s1 (x) s1 + s11 (x) 1
    const LabeledPartitionFn two_boxes = at0(Partition{1, 1});
    const Tensor d2 = coproduct(sigma_rho(two_boxes, g));
    CHECK(d2.terms().at({one_box, one_box}) == C(2));
    CHECK(d2.terms().at({two_boxes, empty}) == C(1));

    CHECK(antipode(sigma(1, 0, g)) == sigma(1, 0, g) * Rational(-1));
    CHECK(antipode(sigma_rho(two_boxes, g)) == sigma_rho(two_boxes, g));
    CHECK(counit(sigma(1, 0, g)) == C(0));
    CHECK(counit(one(g)) == C(1));
}

TEST_CASE("point dimension series")
{
    CHECK(format_coefficients(dim_series_point(*builtin_group("trivial"), 6)) == "1 1 1 2 2 3 4");
    CHECK(format_coefficients(dim_series_point(*builtin_group("z3"), 5)) == "1 3 6 13 24 42");
    CHECK(split_classes(3, *builtin_group("trivial")).odd.size() == 1);
}

TEST_CASE("character table")
{
    const CharTable empty = chartable(builtin_group("trivial"), 0);
    CHECK(empty.classes.size() == 1);
    CHECK(empty.centralizers == std::vector<Integer>{1});
    CHECK(empty.warnings.empty());

    const CharTable t3 = chartable(builtin_group("trivial"), 3);
    bool found = false;
    for (const auto& row : t3.rows)
        if (row.name == "T(2,1)") {
            found = true;
            CHECK(row.values == std::vector<Cyclotomic>{C(-2), C(4)});
        }
    CHECK(found);

    const CharTable bare = chartable(load_group(QSPIN_TEST_DATA_DIR "/z2_no_table.json"), 1);
    REQUIRE(bare.warnings.size() == 1);
    CHECK(bare.warnings[0].find("no character table") != std::string::npos);
}

}
