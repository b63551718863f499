#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace dsilt;

TEST_CASE("A2 path algebra") {
    fp::set_modulus(10007);
    QuiverAlgebra A(fixtures::a2());
    CHECK(A.n == 2);
    CHECK(A.dim == 3);  // e1, e2, a
    auto c = A.cartan();
    CHECK(c == std::vector<std::vector<int>>{{1, 0}, {1, 1}});
    // Hom(P_2, P_1) is one-dimensional (spanned by the arrow), Hom(P_1, P_2) zero
    CHECK(A.hom_proj(1, 0).size() == 1);
    CHECK(A.hom_proj(0, 1).size() == 0);
}

TEST_CASE("Nakayama 2-cycle with radical square zero") {
    fp::set_modulus(10007);
    QuiverAlgebra A(fixtures::nakayama2());
    CHECK(A.n == 2);
    CHECK(A.dim == 4);  // e1, e2, a, b
    auto c = A.cartan();
    CHECK(c == std::vector<std::vector<int>>{{1, 1}, {1, 1}});
}

TEST_CASE("Kronecker algebra") {
    fp::set_modulus(10007);
    QuiverAlgebra A(fixtures::kronecker());
    CHECK(A.dim == 4);  // e1, e2, a, b
    auto c = A.cartan();
    CHECK(c == std::vector<std::vector<int>>{{1, 0}, {2, 1}});
}

TEST_CASE("spec parser rejects bad input") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_algebra_spec(in);
    };
    CHECK_THROWS_AS(parse("vertices 2\narrow a 1 3\n"), ParseError);
    CHECK_THROWS_AS(parse("vertices 2\narrow a 1 2\narrow a 2 1\n"), ParseError);
    // a cycle with no relations and no nilpotency bound is infinite dimensional
    std::istringstream in("vertices 2\narrow a 1 2\narrow b 2 1\n");
    AlgebraSpec sp = parse_algebra_spec(in);
    CHECK_THROWS_AS(QuiverAlgebra(sp), NotFiniteDimensional);
}

TEST_CASE("idempotents and multiplication") {
    fp::set_modulus(10007);
    QuiverAlgebra A(fixtures::nakayama2());
    for (int v = 0; v < A.n; ++v) {
        AlgElem e = A.idempotent(v);
        CHECK(A.mul(e, e) == e);
    }
    // both length-2 composites vanish by the relations
    int ia = -1, ib = -1;
    for (int i = 0; i < A.dim; ++i)
        if (A.basis[i].arrows.size() == 1) (ia < 0 ? ia : ib) = i;
    REQUIRE(ia >= 0);
    REQUIRE(ib >= 0);
    CHECK(QuiverAlgebra::is_zero(A.mul(A.unit_of(ia), A.unit_of(ib))));
    CHECK(QuiverAlgebra::is_zero(A.mul(A.unit_of(ib), A.unit_of(ia))));
}
