#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffmobius/verify.hpp"

using namespace ffmobius;

TEST_CASE("partition: invariant pairs match the raw relation for every (s, g) from the pipeline") {
    // classes of degree-n monic polynomials, q in {2, 3}, n <= 8
    for (int q : {2, 3}) {
        auto r = verify::partition_suite(Field::from_order(q), 8);
        CHECK(r.failures == 0);
        CHECK(r.checks > 0);
    }
}

TEST_CASE("suites carry timing and check counts") {
    auto r = verify::fq_properties(Field::from_order(4));
    CHECK(r.pass());
    CHECK(r.checks > 0);
    CHECK(r.seconds >= 0.0);
}
