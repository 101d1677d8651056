#include <doctest.h>

#include "fh/checks/suites.hpp"

using namespace fh::checks;

TEST_CASE("every suite passes with several seeds")
{
    for (const auto& name : suite_names()) {
        for (unsigned seed : {1u, 7u}) {
            auto r = run_suite(name, seed);
            INFO(name << " seed " << seed << ": " << (r.failures.empty() ? "" : r.failures.front()));
            CHECK(r.ok());
            CHECK(r.passed > 0);
        }
    }
}

TEST_CASE("suites are deterministic and names are checked")
{
    auto a = run_suite("manifold", 3), b = run_suite("manifold", 3);
    CHECK(a.passed == b.passed);
    CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
    auto j = to_json(run_suite("corr"));
    CHECK(j["failed"] == 0);
    CHECK(j["suite"] == "corr");
}
