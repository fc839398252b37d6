#include <doctest.h>

#include <algorithm>
#include <tuple>

#include "qspin/verify.hpp"

using namespace qspin;

TEST_SUITE("verify") {

TEST_CASE("registry layout")
{
    const auto& items = verify_registry();
    CHECK(items.size() == 32);
    CHECK(std::is_sorted(items.begin(), items.end(), [](const VerifyItem& a, const VerifyItem& b) {
        return std::tie(a.suite, a.id) < std::tie(b.suite, b.id);
    }));
    for (const auto& item : items) {
        CHECK(item.id.rfind(item.suite + ".", 0) == 0);
        CHECK_FALSE(item.identity.empty());
    }
    CHECK(verify_suites() == std::vector<std::string>{"fock", "heisenberg", "hopf", "omega", "partitions", "qlambda",
                                                      "spinchar", "vertex", "all"});
    CHECK_THROWS_WITH_AS(run_suite("nope", VerifyConfig{}), "unknown suite 'nope'", Error);
}

TEST_CASE("small runs pass and are deterministic")
{
    VerifyConfig config;
    config.N = 4;
    config.D = 5;
    config.heisenberg_samples = 2;
    config.qlambda_seeds = 3;
    for (const std::string suite : {"fock", "heisenberg", "hopf", "omega", "qlambda", "spinchar", "vertex"}) {
        const VerifyReport a = run_suite(suite, config);
        CHECK_MESSAGE(a.passed(), render_text(a));
        CHECK(to_json(a) == to_json(run_suite(suite, config)));
    }
}

TEST_CASE("report rendering")
{
    VerifyConfig config;
    config.N = 3;
    config.seed = 5;
    const VerifyReport r = run_suite("vertex", config);
    const nlohmann::json doc = to_json(r);
    CHECK(doc["suite"] == "vertex");
    CHECK(doc["seed"] == 5);
    CHECK(doc["passed"] == true);
    REQUIRE(doc["items"].size() == 1);
    CHECK(doc["items"][0]["id"] == "vertex.exponential_agreement");
    CHECK(doc["items"][0]["checks"].get<std::size_t>() > 0);
    const std::string text = render_text(r);
    CHECK(text.rfind("PASS vertex.exponential_agreement", 0) == 0);
    CHECK(text.find("suite vertex, seed 5: 1/1 passed") != std::string::npos);

    ItemResult failing{"x.y", "x", "identity", false, 1, "counterexample"};
    VerifyReport bad{"x", 1, {failing}};
    CHECK_FALSE(bad.passed());
    CHECK(render_text(bad).rfind("FAIL x.y", 0) == 0);
}

}
