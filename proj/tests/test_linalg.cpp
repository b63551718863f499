#include <catch2/catch_amalgamated.hpp>

#include "dsilt/fp.hpp"

using namespace dsilt;

TEST_CASE("field arithmetic") {
    fp::set_modulus(10007);
    CHECK(fp::add(10000, 10) == 3);
    CHECK(fp::neg(1) == 10006);
    CHECK(fp::mul(fp::inv(1234), 1234) == 1);
    CHECK_THROWS(fp::set_modulus(10));
    fp::set_modulus(10007);
}

TEST_CASE("rank, nullspace, solve") {
    fp::set_modulus(10007);
    Mat m(2, 3);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(0, 2) = 3;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    m.at(1, 2) = 6;
    CHECK(rank(m) == 1);
    Mat ns = nullspace(m);
    CHECK(ns.nc == 2);
    // every nullspace column really lies in the kernel
    for (int c = 0; c < ns.nc; ++c)
        for (int r = 0; r < m.nr; ++r) {
            i64 acc = 0;
            for (int k = 0; k < m.nc; ++k) acc = fp::add(acc, fp::mul(m.at(r, k), ns.at(k, c)));
            CHECK(acc == 0);
        }
    std::vector<i64> b{3, 6};
    auto sol = solve(m, b);
    REQUIRE(sol.has_value());
    i64 acc = 0;
    for (int k = 0; k < 3; ++k) acc = fp::add(acc, fp::mul(m.at(0, k), (*sol)[k]));
    CHECK(acc == 3);
    CHECK_FALSE(solve(m, {1, 0}).has_value());
}

TEST_CASE("span insert and membership") {
    fp::set_modulus(10007);
    Span s(3);
    CHECK(s.insert({1, 0, 0}));
    CHECK(s.insert({1, 1, 0}));
    CHECK_FALSE(s.insert({2, 3, 0}));
    CHECK(s.contains({5, 5, 0}));
    CHECK_FALSE(s.contains({0, 0, 1}));
    CHECK((int)s.lead.size() == 2);
}
