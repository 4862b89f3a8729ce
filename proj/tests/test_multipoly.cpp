#include <doctest.h>

#include <cmath>

#include "glucas/multipoly.hpp"

using namespace glucas;

TEST_CASE("eval, derivative, section") {
    MultiPoly f(2); // z1^2 + z2^2
    f.add_term(cplx(1.0), {2, 0});
    f.add_term(cplx(1.0), {0, 2});

    CHECK(f.eval({cplx(2.0), cplx(0.0, 1.0)}) == cplx(3.0));

    MultiPoly d1 = f.partial_derivative(0); // 2 z1
    CHECK(d1.eval({cplx(3.0), cplx(9.0)}) == cplx(6.0));
    CHECK(f.partial_derivative(0).partial_derivative(1).is_zero());

    ComplexPoly g = f.section(0, {cplx(0.0), cplx(2.0)}); // w^2 + 4
    REQUIRE(g.degree() == 2);
    CHECK(g.coeffs()[0] == cplx(4.0));
    CHECK(g.coeffs()[2] == cplx(1.0));
}

TEST_CASE("product of affine forms expands correctly") {
    // (z1 + z2)(z1 - z2 + 2)
    MultiPoly f = MultiPoly::product_of_affine(
        2, {{{cplx(1.0), cplx(1.0)}, cplx(0.0)}, {{cplx(1.0), cplx(-1.0)}, cplx(2.0)}});
    for (cplx z1 : {cplx(0.3, 1.0), cplx(-2.0)}) {
        for (cplx z2 : {cplx(1.5), cplx(0.0, -0.7)}) {
            cplx direct = (z1 + z2) * (z1 - z2 + cplx(2.0));
            CHECK(std::abs(f.eval({z1, z2}) - direct) < 1e-12);
        }
    }
}

TEST_CASE("terms cancel to the zero polynomial") {
    MultiPoly f(1);
    f.add_term(cplx(1.0), {3});
    f.add_term(cplx(-1.0), {3});
    CHECK(f.is_zero());
}

TEST_CASE("arity mismatches are rejected") {
    MultiPoly f(2);
    CHECK_THROWS(f.add_term(cplx(1.0), {1}));
    f.add_term(cplx(1.0), {1, 1});
    CHECK_THROWS(f.eval({cplx(1.0)}));
    CHECK_THROWS(f.partial_derivative(2));
    CHECK_THROWS(f.section(0, {cplx(1.0)}));
}
