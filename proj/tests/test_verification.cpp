#include <doctest.h>

#include <stdexcept>

#include "singline/verification.hpp"

using namespace singline;

namespace {

VerifyOptions small() {
    VerifyOptions o;
    o.grid_max = 8;
    o.sym_max = 10;
    o.planes_max = 10;
    o.localization_max = 6;
    o.newton_samples = 20;
    return o;
}

}  // namespace

TEST_CASE("suites that hold on a small grid") {
    for (const char* name : {"ring", "inverse-chern", "sym", "rank", "planes", "newton", "localization"}) {
        CAPTURE(name);
        const SuiteResult r = run_suite(name, small());
        CHECK(r.passed());
        CHECK(r.checks > 0);
    }
}

TEST_CASE("perturbed multiplication table fails the ring suite") {
    ProductTable broken = ProductTable::standard();
    ProductTable::Row top{};
    top[index(Schubert::S22)] = 1;
    broken.set_product(Schubert::S11, Schubert::S2, top);
    VerifyOptions o = small();
    o.table = &broken;
    const SuiteResult r = run_suite("ring", o);
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.messages.empty());
}

TEST_CASE("printed table cells off the edges u = 0, k = 1 are not reproduced") {
    const SuiteResult r = run_suite("table");
    CHECK(r.checks == 27);
    CHECK(r.failed == 15);
}

TEST_CASE("suite registry") {
    CHECK(suite_names().size() == 9);
    CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
}
