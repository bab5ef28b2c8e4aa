#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eala/linear.hpp"

using namespace eala;

namespace {

ScalarMatrix make(std::initializer_list<std::initializer_list<int>> rows) {
    ScalarMatrix m(rows.size(), rows.begin()->size());
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (int v : row) m.at(r, c++) = Scalar(v);
        ++r;
    }
    return m;
}

}  // namespace

TEST_CASE("unique solution") {
    auto sol = solve_linear(make({{2, 1}, {1, -1}}), {Scalar(5), Scalar(1)});
    REQUIRE(sol.consistent);
    CHECK(sol.nullspace.empty());
    CHECK(sol.particular == std::vector<Scalar>{Scalar(2), Scalar(1)});
}

TEST_CASE("inconsistent system") {
    auto sol = solve_linear(make({{1, 1}, {2, 2}}), {Scalar(1), Scalar(3)});
    CHECK(!sol.consistent);
}

TEST_CASE("underdetermined system with nullspace") {
    auto sol = solve_linear(make({{1, 1, 1}}), {Scalar(6)});
    REQUIRE(sol.consistent);
    CHECK(sol.rank == 1);
    REQUIRE(sol.nullspace.size() == 2);
    // Residual check for particular + each basis vector.
    for (const auto& v : sol.nullspace) {
        Scalar dot(0);
        for (const auto& x : v) dot += x;
        CHECK(dot.is_zero());
    }
    Scalar sum(0);
    for (const auto& x : sol.particular) sum += x;
    CHECK(sum == Scalar(6));
}

TEST_CASE("irrational coefficients") {
    ScalarMatrix a(1, 1);
    a.at(0, 0) = Scalar::rt2();
    auto sol = solve_linear(std::move(a), {Scalar(2)});
    REQUIRE(sol.consistent);
    CHECK(sol.particular[0] == Scalar::rt2());
}

TEST_CASE("consistency of many right-hand sides") {
    auto flags = consistent_many(make({{1, 1}, {2, 2}}),
                                 {{Scalar(1), Scalar(2)}, {Scalar(1), Scalar(3)}});
    CHECK(flags == std::vector<bool>{true, false});
}

TEST_CASE("determinant") {
    CHECK(determinant(make({{1, 2}, {3, 4}})) == Scalar(-2));
    CHECK(determinant(make({{1, 2}, {2, 4}})).is_zero());
    CHECK(determinant(make({{0, 1}, {1, 0}})) == Scalar(-1));
}
