#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "qspin/group_data.hpp"
#include "qspin/partitions.hpp"

using namespace qspin;

namespace {

// Every multiset of positive integers summing to n, found by brute force over
// nonincreasing sequences built one part at a time with no pruning by kind.
std::set<std::vector<int>> brute_partitions(int n)
{
    std::set<std::vector<int>> out;
    std::vector<std::vector<int>> stack{{}};
    while (!stack.empty()) {
        auto cur = stack.back();
        stack.pop_back();
        const int sum = std::accumulate(cur.begin(), cur.end(), 0);
        if (sum == n) {
            std::sort(cur.begin(), cur.end(), std::greater<>());
            out.insert(cur);
            continue;
        }
        for (int part = 1; part <= n - sum; ++part) {
            auto next = cur;
            next.push_back(part);
            stack.push_back(next);
        }
    }
    return out;
}

// Number of permutations of n points with the given cycle type.
Integer permutations_with_cycle_type(const Partition& mu)
{
    const int n = mu.weight();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Integer count = 0;
    do {
        std::vector<bool> seen(perm.size());
        std::vector<int> cycles;
        for (std::size_t i = 0; i < perm.size(); ++i) {
            if (seen[i])
                continue;
            int len = 0;
            for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
                seen[j] = true;
                ++len;
            }
            cycles.push_back(len);
        }
        if (Partition(cycles) == mu)
            ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

} // namespace

TEST_SUITE("partitions") {

TEST_CASE("enumeration matches brute force for every kind")
{
    for (int n = 0; n <= 9; ++n) {
        const auto all = brute_partitions(n);
        for (auto kind : {PartitionKind::all, PartitionKind::strict, PartitionKind::odd}) {
            std::set<std::vector<int>> expected;
            for (const auto& p : all)
                if (matches(Partition(p), kind))
                    expected.insert(p);
            std::set<std::vector<int>> got;
            for (const auto& p : enumerate(n, kind))
                got.insert(p.parts());
            CHECK(got == expected);
            CHECK(enumerate(n, kind).size() == expected.size());
        }
    }
}

TEST_CASE("small enumerations and z values")
{
    CHECK(enumerate(5, PartitionKind::strict) == std::vector<Partition>{Partition{5}, Partition{4, 1}, Partition{3, 2}});
    CHECK(enumerate(5, PartitionKind::odd) ==
          std::vector<Partition>{Partition{5}, Partition{3, 1, 1}, Partition{1, 1, 1, 1, 1}});
    CHECK(enumerate(0, PartitionKind::strict) == std::vector<Partition>{Partition{}});
    CHECK(z_of(Partition{3, 1, 1}) == 6);
    CHECK(z_of(Partition{}) == 1);
}

TEST_CASE("z_lambda equals n! over the size of the conjugacy class")
{
    for (int n = 1; n <= 7; ++n)
        for (const Partition& mu : enumerate(n, PartitionKind::all))
            CHECK(z_of(mu) * permutations_with_cycle_type(mu) == factorial(static_cast<unsigned long>(n)));
}

TEST_CASE("partition basics")
{
    const Partition p{1, 3, 3};
    CHECK(p.parts() == std::vector<int>{3, 3, 1});
    CHECK(p.weight() == 7);
    CHECK(p.multiplicity(3) == 2);
    CHECK(p.is_odd());
    CHECK_FALSE(p.is_strict());
    CHECK(p.merged(Partition{2}) == Partition{3, 3, 2, 1});
    CHECK(p.str() == "(3,3,1)");
    CHECK(Partition::from_multiplicities({{1, 2}, {5, 1}}) == Partition{5, 1, 1});
    CHECK_THROWS_AS(Partition({0, 1}), Error);
}

TEST_CASE("labeled partitions")
{
    const LabelSet labels({"a", "b"});
    const auto rho = LabeledPartitionFn::from_named(labels, {{"b", Partition{3}}, {"a", Partition{1, 1}}});
    CHECK(rho.total_weight() == 5);
    CHECK(rho.total_length() == 3);
    CHECK(rho.str(labels) == "{a:(1,1), b:(3)}");
    const auto alpha = LabeledPartitionFn::single(0, Partition{1});
    CHECK(rho.difference(alpha).disjoint_union(alpha) == rho);
    CHECK_THROWS_AS(rho.difference(LabeledPartitionFn::single(1, Partition{1})), Error);
    CHECK_THROWS_AS(labels.index_of("c"), Error);

    // |OP_n(L)| for two labels: coefficients of prod_{r odd} (1 - t^r)^{-2}
    const std::vector<std::size_t> expected{1, 2, 3, 6, 9, 14, 22, 32, 46};
    for (int n = 0; n <= 8; ++n)
        CHECK(enumerate(n, PartitionKind::odd, labels).size() == expected[static_cast<std::size_t>(n)]);
    for (int n = 0; n <= 12; ++n) {
        auto [op, sp] = count_identity_check(n, LabelSet({"x", "y", "z"}));
        CHECK(op == sp);
    }
}

TEST_CASE("Z_rho for Z3")
{
    const GroupPtr z3 = builtin_group("Z3");
    // rho = {c0:(1), c1:(3)}: 2^2 * z_(1) * 3 * z_(3) * 3 = 4 * 1 * 3 * 3 * 3
    const auto rho = LabeledPartitionFn::from_named(z3->labels(), {{"c0", Partition{1}}, {"c1", Partition{3}}});
    CHECK(Z_of(rho, *z3) == 108);
}

TEST_CASE("group fixtures")
{
    CHECK(builtin_group_names() == std::vector<std::string>{"s3", "trivial", "z2", "z3"});
    for (const auto& name : builtin_group_names()) {
        const GroupPtr g = builtin_group(name);
        Rational sum = 0;
        for (std::size_t c = 0; c < g->class_count(); ++c)
            sum += ratio(g->order(), g->centralizer_order(c));
        CHECK(sum == Rational(g->order()));
        CHECK(GroupData::from_json(g->to_json()) == *g);
    }
    CHECK(builtin_group("S3")->irreducible_count() == 3);
    CHECK(builtin_group("z2") == builtin_group("Z2"));
    CHECK_THROWS_AS(builtin_group("Z5"), Error);
}

TEST_CASE("group validation errors")
{
    CHECK_THROWS_WITH_AS(parse_group(R"({"name":"bad","order":2,"classes":[{"label":"c0","centralizer_order":2}]})"),
                         doctest::Contains("class sizes sum"), Error);
    CHECK_THROWS_WITH_AS(parse_group(R"({"name":"bad","order":2,
        "classes":[{"label":"c0","centralizer_order":2},{"label":"c1","centralizer_order":2}],
        "character_table":[["1","1"],["1","1"]]})"),
                         doctest::Contains("orthogonality"), Error);
    CHECK_THROWS_WITH_AS(parse_group("{\n\"name\": ,\n}", "g.json"), doctest::Contains("g.json:2:"), Error);
    CHECK_THROWS_WITH_AS(load_group(QSPIN_TEST_DATA_DIR "/bad_group.json"), doctest::Contains("bad_group.json:3:"),
                         Error);
    CHECK_THROWS_AS(load_group("/nonexistent/group.json"), Error);
}

}
