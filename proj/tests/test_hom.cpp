#include <catch2/catch_amalgamated.hpp>

#include "dsilt/hom.hpp"
#include "fixtures.hpp"

using namespace dsilt;

namespace {

ProjComplex s1_complex(const QuiverAlgebra& A) {
    // minimal projective resolution of the simple at vertex 1: P2 -> P1
    ProjComplex t;
    t.A = &A;
    t.lo = -1;
    t.hi = 0;
    t.summ = {{1}, {0}};
    LambdaMat d(1, 1);
    d.at(0, 0) = A.unit_of(2);
    t.diff = {d, LambdaMat(0, 1)};
    return t;
}

}  // namespace

TEST_CASE("Hom dimensions between projective stalks match the Cartan matrix") {
    fp::set_modulus(10007);
    QuiverAlgebra A(fixtures::a2());
    auto c = A.cartan();
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j)
            CHECK(hom_K_dim(stalk_complex(A, i, 0), stalk_complex(A, j, 0)) == c[i][j]);
}

TEST_CASE("ext between window objects of A2") {
    fp::set_modulus(10007);
    QuiverAlgebra A(fixtures::a2());
    ProjComplex s1 = s1_complex(A);
    ProjComplex p1 = stalk_complex(A, 0, 0);
    ProjComplex p2 = stalk_complex(A, 1, 0);
    // Hom(S1, P1) = 0: the socle of P1 is the simple at the other vertex
    CHECK(hom_K_dim(s1, p1) == 0);
    CHECK(hom_K_dim(p1, s1) == 1);  // the quotient map onto the top
    CHECK(hom_K_dim(p2, s1) == 0);
    // Ext^1(S1, P2) = Hom(S1, Sigma P2) is one-dimensional
    CHECK(ext_dim(s1, p2, 1) == 1);
    CHECK(ext_dim(s1, p1, 1) == 0);
    CHECK(ext_dim(p1, p2, 1) == 0);
}

TEST_CASE("stable Hom agrees with the derived computation") {
    fp::set_modulus(10007);
    QuiverAlgebra A(fixtures::a2());
    int d = 3;
    std::vector<ProjComplex> objs = {stalk_complex(A, 0, 0), stalk_complex(A, 1, 0),
                                     stalk_complex(A, 0, -1), stalk_complex(A, 1, -2),
                                     s1_complex(A), shift(s1_complex(A), 1)};
    for (const auto& x : objs)
        for (const auto& y : objs)
            CHECK(stable_hom_dim(x, y, d) == derived_hom_dim(x, y, d, 0));
}

TEST_CASE("duality defect vanishes and Euler pairing equals Cartan pairing") {
    fp::set_modulus(10007);
    QuiverAlgebra A(fixtures::nakayama2());
    int d = 3;
    std::vector<ProjComplex> objs = {stalk_complex(A, 0, 0), stalk_complex(A, 1, -1),
                                     stalk_complex(A, 0, -2)};
    for (const auto& x : objs)
        for (const auto& y : objs) {
            auto [l, r] = duality_dims(x, y, d);
            CHECK(l == r);
            CHECK(duality_defect(x, y, d) == 0);
            CHECK(euler_pairing(x, y) == cartan_pairing(A, x.k0(), y.k0()));
        }
}

TEST_CASE("Nakayama functor sends projectives to injectives") {
    fp::set_modulus(10007);
    QuiverAlgebra A(fixtures::a2());
    // nu P1 = I1 has dimension 1, nu P2 = I2 has dimension 2 over A2
    ModuleComplex n1 = nakayama(stalk_complex(A, 0, 0));
    ModuleComplex n2 = nakayama(stalk_complex(A, 1, 0));
    CHECK(n1.dim_at(0) == 1);
    CHECK(n2.dim_at(0) == 2);
}

TEST_CASE("Hom into shifted module complexes detects the silting order") {
    fp::set_modulus(10007);
    QuiverAlgebra A(fixtures::a2());
    int d = 3;
    // Hom_D(P1, Sigma tau(S1)) = Ext^1(P1, S1) = 0 since P1 is projective
    ProjComplex p1 = stalk_complex(A, 0, 0);
    CHECK(hom_D_dim(p1, shift_mod(mod_of_tau(s1_complex(A), d), 1)) == 0);
}
