#include <doctest.h>

#include "liestar/lie_algebra.hpp"

using namespace liestar;

TEST_CASE("catalog algebras validate") {
    for (const char* name : {"su2", "sl2", "heisenberg3", "aff1", "abelian(4)",
                             "direct_sum(su2,aff1)"}) {
        LieAlgebra L = LieAlgebra::catalog(name);
        CHECK(L.dim() >= 1);
    }
    CHECK(LieAlgebra::catalog("su2").c(2, 0, 1) == Rational(1));
    CHECK(LieAlgebra::catalog("heisenberg3").c(2, 0, 1) == Rational(1));
    CHECK(LieAlgebra::catalog("aff1").c(1, 0, 1) == Rational(1));
    CHECK_THROWS_AS(LieAlgebra::catalog("so7"), UnknownNameError);
}

TEST_CASE("antisymmetry violation reported") {
    int n = 3;
    std::vector<Rational> c(27, Rational(0));
    c[(2 * n + 0) * n + 1] = Rational(1);  // c^3_{12} = 1
    c[(2 * n + 1) * n + 0] = Rational(1);  // c^3_{21} = 1  (should be -1)
    ValidationReport rep;
    auto alg = LieAlgebra::validate("bad", n, c, &rep);
    CHECK(!alg.has_value());
    REQUIRE(!rep.violations.empty());
    CHECK(rep.violations.front().kind == StructureViolation::Kind::antisymmetry);
}

TEST_CASE("jacobi violation reported") {
    // epsilon table with one sign flipped fails Jacobi
    int n = 3;
    std::vector<Rational> c(27, Rational(0));
    auto set = [&](int k, int i, int j, int v) {
        c[(k * n + i) * n + j] = Rational(v);
        c[(k * n + j) * n + i] = Rational(-v);
    };
    set(2, 0, 1, 1);   // [e1,e2] = e3
    set(0, 1, 2, 1);   // [e2,e3] = e1
    set(1, 2, 0, -1);  // [e3,e1] = -e2 (flipped)
    ValidationReport rep;
    auto alg = LieAlgebra::validate("bad", n, c, &rep);
    CHECK(!alg.has_value());
    REQUIRE(!rep.violations.empty());
    CHECK(rep.violations.front().kind == StructureViolation::Kind::jacobi);
}

TEST_CASE("unimodularity") {
    CHECK(LieAlgebra::catalog("su2").unimodular().unimodular);
    CHECK(LieAlgebra::catalog("heisenberg3").unimodular().unimodular);
    CHECK(LieAlgebra::catalog("abelian(5)").unimodular().unimodular);
    CHECK(LieAlgebra::catalog("sl2").unimodular().unimodular);

    auto u = LieAlgebra::catalog("aff1").unimodular();
    CHECK(!u.unimodular);
    CHECK(u.witness_j == 1);
    CHECK(u.witness_value == Rational(-1));
}

TEST_CASE("adjoint matrix") {
    LieAlgebra su2 = LieAlgebra::catalog("su2");
    auto m = su2.adjoint_matrix({Rational(0), Rational(0), Rational(1)});
    CHECK(m[0][1] == Rational(-1));
    CHECK(m[1][0] == Rational(1));
    Rational tr = m[0][0] + m[1][1] + m[2][2];
    CHECK(tr.is_zero());

    LieAlgebra ab = LieAlgebra::catalog("abelian(3)");
    auto z = ab.adjoint_matrix({Rational(1), Rational(2), Rational(3)});
    for (const auto& row : z)
        for (const auto& v : row) CHECK(v.is_zero());

    LieAlgebra aff = LieAlgebra::catalog("aff1");
    auto a = aff.adjoint_matrix({Rational(1), Rational(0)});
    CHECK(a[0][0] + a[1][1] == Rational(1));  // ad(e1) e2 = e2
}

TEST_CASE("trace of adjoint is linear and detects unimodularity") {
    for (const char* name : {"su2", "aff1", "heisenberg3"}) {
        LieAlgebra L = LieAlgebra::catalog(name);
        bool all_zero = true;
        for (int j = 0; j < L.dim(); ++j) {
            std::vector<Rational> x(L.dim(), Rational(0));
            x[j] = Rational(1);
            auto m = L.adjoint_matrix(x);
            Rational tr(0);
            for (int i = 0; i < L.dim(); ++i) tr += m[i][i];
            if (!tr.is_zero()) all_zero = false;
        }
        CHECK(all_zero == L.unimodular().unimodular);
    }
}

TEST_CASE("json roundtrip") {
    LieAlgebra su2 = LieAlgebra::catalog("su2");
    LieAlgebra back = LieAlgebra::from_json_text(su2.to_json_text());
    CHECK(back.dim() == 3);
    CHECK(back.canonical_table() == su2.canonical_table());

    CHECK_THROWS(LieAlgebra::from_json_text(
        R"({"dim":2,"brackets":[{"i":2,"j":1,"k":2,"value":"1"}]})"));
}

TEST_CASE("poisson bracket") {
    LieAlgebra su2 = LieAlgebra::catalog("su2");
    auto x1 = PolyQ::variable(3, 0), x2 = PolyQ::variable(3, 1),
         x3 = PolyQ::variable(3, 2);
    CHECK(poisson_bracket(su2, x1, x2) == x3);
    CHECK(poisson_bracket(su2, x2, x3) == x1);
    auto f = x1 * x2 + x3 * x3;
    CHECK(poisson_bracket(su2, f, f).is_zero());

    LieAlgebra h3 = LieAlgebra::catalog("heisenberg3");
    auto g = PolyQ::variable(3, 0) * PolyQ::variable(3, 1) * PolyQ::variable(3, 2);
    CHECK(poisson_bracket(h3, PolyQ::variable(3, 2), g).is_zero());
}

TEST_CASE("poisson bracket satisfies jacobi and leibniz on samples") {
    LieAlgebra su2 = LieAlgebra::catalog("su2");
    auto x1 = PolyQ::variable(3, 0), x2 = PolyQ::variable(3, 1),
         x3 = PolyQ::variable(3, 2);
    std::vector<PolyQ> fs = {x1 * x1, x2 * x3 + x1, x3 * x3 * x1, x1 + x2,
                             x2 * x2 - x1 * x3};
    for (size_t a = 0; a < fs.size(); ++a)
        for (size_t b = a + 1; b < fs.size(); ++b)
            for (size_t c = b + 1; c < fs.size(); ++c) {
                const auto &f = fs[a], &g = fs[b], &h = fs[c];
                auto jac = poisson_bracket(su2, f, poisson_bracket(su2, g, h)) +
                           poisson_bracket(su2, g, poisson_bracket(su2, h, f)) +
                           poisson_bracket(su2, h, poisson_bracket(su2, f, g));
                CHECK(jac.is_zero());
                auto leib = poisson_bracket(su2, f, g * h) -
                            poisson_bracket(su2, f, g) * h -
                            g * poisson_bracket(su2, f, h);
                CHECK(leib.is_zero());
            }
}
