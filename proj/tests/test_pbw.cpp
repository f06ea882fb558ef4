#include <doctest.h>

#include "liestar/pbw.hpp"

#include "sample_rng.hpp"

using namespace liestar;

namespace {

PbwElement<LambdaPoly> mono(int n, const Multi& a) {
    return {PolyQ::monomial(n, a, LambdaPoly::one())};
}

PolyQ random_poly(SampleRng& rng, int n, int maxdeg, int nterms) {
    PolyQ p(n);
    auto monos = monomials_up_to(n, maxdeg);
    for (int t = 0; t < nterms; ++t) {
        const Multi& a = monos[static_cast<size_t>(rng.pick(0, static_cast<int>(monos.size()) - 1))];
        p.add_term(a, LambdaPoly(Rational(rng.pick(-5, 5), rng.pick(1, 3))));
    }
    return p;
}

} // namespace

TEST_CASE("straightening examples") {
    StraightenTable su2(LieAlgebra::catalog("su2"));
    // e2 e1 = e1 e2 - e3   ([e2,e1] = -e3)
    auto r = pbw_mul(su2, mono(3, {0, 1, 0}), mono(3, {1, 0, 0}));
    PolyQ expect(3);
    expect.add_term({1, 1, 0}, LambdaPoly::one());
    expect.add_term({0, 0, 1}, -LambdaPoly::one());
    CHECK(r.terms == expect);

    StraightenTable ab(LieAlgebra::catalog("abelian(3)"));
    auto rc = pbw_mul(ab, mono(3, {0, 1, 0}), mono(3, {1, 0, 0}));
    CHECK(rc.terms == PolyQ::monomial(3, {1, 1, 0}, LambdaPoly::one()));

    // h3: e2 . (e1 e3) = e1 e2 e3 - e3^2
    StraightenTable h3(LieAlgebra::catalog("heisenberg3"));
    auto rh = pbw_mul(h3, mono(3, {0, 1, 0}), mono(3, {1, 0, 1}));
    PolyQ eh(3);
    eh.add_term({1, 1, 1}, LambdaPoly::one());
    eh.add_term({0, 0, 2}, -LambdaPoly::one());
    CHECK(rh.terms == eh);
}

TEST_CASE("symmetrize examples") {
    StraightenTable su2(LieAlgebra::catalog("su2"));
    // sigma(x1^) = nu e1
    auto s1 = symmetrize(su2, PolyQ::variable(3, 0));
    CHECK(s1.terms == PolyQ::monomial(3, {1, 0, 0}, LambdaPoly::nu_pow(1)));

    // sigma(x1 x2) = nu^2 e1e2 - (nu^2/2) e3
    auto s2 = symmetrize(su2, PolyQ::variable(3, 0) * PolyQ::variable(3, 1));
    PolyQ expect(3);
    expect.add_term({1, 1, 0}, LambdaPoly::nu_pow(2));
    expect.add_term({0, 0, 1}, LambdaPoly::nu_pow(2).times(Rational(-1, 2)));
    CHECK(s2.terms == expect);

    // sigma(1) = unit
    auto s0 = symmetrize(su2, PolyQ::one(3));
    CHECK(s0.terms == PolyQ::one(3));
}

TEST_CASE("unsymmetrize examples") {
    StraightenTable su2(LieAlgebra::catalog("su2"));
    auto f = unsymmetrize(su2, PbwElement<LambdaPoly>{PolyQ::monomial(3, {1, 0, 0}, LambdaPoly::nu_pow(1))});
    CHECK(f == PolyQ::variable(3, 0));

    // nu^2 e1e2 -> x1 x2 + (nu/2) x3^
    auto g = unsymmetrize(su2, PbwElement<LambdaPoly>{PolyQ::monomial(3, {1, 1, 0}, LambdaPoly::nu_pow(2))});
    PolyQ expect = PolyQ::variable(3, 0) * PolyQ::variable(3, 1) +
                   PolyQ::variable(3, 2).times_nu_pow(1).times(Rational(1, 2));
    CHECK(g == expect);

    CHECK(unsymmetrize(su2, PbwElement<LambdaPoly>::unit(3)) == PolyQ::one(3));

    // a bare e1 (coefficient 1, not divisible by nu) is not in the image
    CHECK_THROWS_AS(unsymmetrize(su2, mono(3, {1, 0, 0})),
                    NonInvertibleCoefficient);
}

TEST_CASE("unsymmetrize inverts symmetrize on random polynomials") {
    for (const char* name : {"su2", "heisenberg3", "sl2"}) {
        StraightenTable tab(LieAlgebra::catalog(name));
        SampleRng rng(42);
        for (int t = 0; t < 8; ++t) {
            PolyQ p = random_poly(rng, 3, 6, 5);
            CHECK(unsymmetrize(tab, symmetrize(tab, p)) == p);
        }
    }
}

TEST_CASE("pbw product is associative") {
    StraightenTable su2(LieAlgebra::catalog("su2"));
    SampleRng rng(5);
    for (int t = 0; t < 6; ++t) {
        PbwElement<LambdaPoly> A{random_poly(rng, 3, 3, 3)};
        PbwElement<LambdaPoly> B{random_poly(rng, 3, 3, 3)};
        PbwElement<LambdaPoly> C{random_poly(rng, 3, 3, 3)};
        auto lhs = pbw_mul(su2, pbw_mul(su2, A, B), C);
        auto rhs = pbw_mul(su2, A, pbw_mul(su2, B, C));
        CHECK(lhs.terms == rhs.terms);
    }
}

TEST_CASE("commutator of symmetrized generators is nu^2 bracket") {
    for (const char* name : {"su2", "sl2", "aff1", "heisenberg3"}) {
        LieAlgebra L = LieAlgebra::catalog(name);
        StraightenTable tab(L);
        for (int i = 0; i < L.dim(); ++i)
            for (int j = 0; j < L.dim(); ++j) {
                auto si = symmetrize(tab, PolyQ::variable(L.dim(), i));
                auto sj = symmetrize(tab, PolyQ::variable(L.dim(), j));
                auto comm = pbw_mul(tab, si, sj).terms - pbw_mul(tab, sj, si).terms;
                PolyQ expect(L.dim());
                for (int k = 0; k < L.dim(); ++k) {
                    const Rational& v = L.c(k, i, j);
                    if (!v.is_zero())
                        expect.add_term(multi_unit(L.dim(), k),
                                        LambdaPoly::nu_pow(2).times(v));
                }
                CHECK(comm == expect);
            }
    }
}
