#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eala/exceptions.hpp"
#include "eala/probe.hpp"
#include "eala/section.hpp"

using namespace eala;

TEST_CASE("box 0 has a trivial kernel slice") {
    VerificationReport r = nonfreeness_probe(0);
    CHECK(r.status == CheckStatus::not_falsified);
    CHECK(r.samples == 0);
    CHECK(r.box == 0);
}

TEST_CASE("box 1 is not falsified") {
    VerificationReport r = nonfreeness_probe(1);
    CHECK(r.status == CheckStatus::not_falsified);
    CHECK(r.samples == 3);  // the kernel slice is 3-dimensional
    CHECK(!r.witness.has_value());
}

TEST_CASE("box 2 is not falsified") {
    VerificationReport r = nonfreeness_probe(2);
    CHECK(r.status == CheckStatus::not_falsified);
    CHECK(r.samples > 3);
}

TEST_CASE("bad box is rejected") {
    CHECK_THROWS_AS(nonfreeness_probe(-1), ConfigError);
}
