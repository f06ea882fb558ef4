#include <doctest.h>

#include "liestar/star_bch.hpp"

#include "sample_rng.hpp"

using namespace liestar;

namespace {

PolyQ random_poly(SampleRng& rng, int n, int maxdeg, int nterms) {
    PolyQ p(n);
    auto monos = monomials_up_to(n, maxdeg);
    for (int t = 0; t < nterms; ++t) {
        const Multi& a = monos[static_cast<size_t>(rng.pick(0, static_cast<int>(monos.size()) - 1))];
        p.add_term(a, LambdaPoly(Rational(rng.pick(-4, 4), rng.pick(1, 3))));
    }
    return p;
}

} // namespace

TEST_CASE("star bch basics") {
    StraightenTable su2(LieAlgebra::catalog("su2"));
    auto x1 = PolyQ::variable(3, 0), x2 = PolyQ::variable(3, 1),
         x3 = PolyQ::variable(3, 2);

    // x1 * x2 = x1 x2 + (nu/2) x3
    CHECK(star_bch(su2, x1, x2) ==
          x1 * x2 + x3.times_nu_pow(1).times(Rational(1, 2)));

    auto f = x1 * x1 * x2 + x3;
    CHECK(star_bch(su2, PolyQ::one(3), f) == f);
    CHECK(star_bch(su2, f, PolyQ::one(3)) == f);

    StraightenTable ab(LieAlgebra::catalog("abelian(3)"));
    SampleRng rng(1);
    auto g = random_poly(rng, 3, 3, 4);
    auto h = PolyQ::variable(3, 0) * PolyQ::variable(3, 2);
    CHECK(star_bch(ab, g, h) == g * h);
}

TEST_CASE("strong invariance") {
    for (const char* name : {"su2", "heisenberg3", "aff1"}) {
        LieAlgebra L = LieAlgebra::catalog(name);
        StraightenTable tab(L);
        auto monos = monomials_up_to(L.dim(), 4);
        for (int x = 0; x < L.dim(); ++x)
            for (const auto& a : monos) {
                auto f = PolyQ::monomial(L.dim(), a, LambdaPoly::one());
                CHECK(strong_invariance_defect(tab, x, f).is_zero());
            }
    }
}

TEST_CASE("covariance") {
    for (const char* name : {"su2", "sl2", "heisenberg3", "aff1"}) {
        LieAlgebra L = LieAlgebra::catalog(name);
        StraightenTable tab(L);
        for (int i = 0; i < L.dim(); ++i)
            for (int j = 0; j < L.dim(); ++j)
                CHECK(covariance_defect<LambdaPoly>(tab, i, j).is_zero());
    }
}

TEST_CASE("hermitian property") {
    StraightenTable su2(LieAlgebra::catalog("su2"));
    auto star = star_bch_fn<LambdaPoly>(su2);
    SampleRng rng(9);
    for (int t = 0; t < 10; ++t) {
        PolyQ f = random_poly(rng, 3, 3, 4);
        PolyQ g = random_poly(rng, 3, 3, 4);
        // also give them imaginary parts
        f += random_poly(rng, 3, 2, 2).times(GaussianRational::i());
        CHECK(hermitian_defect(star, f, g).is_zero());
    }
}

TEST_CASE("homogeneity") {
    StraightenTable su2(LieAlgebra::catalog("su2"));
    auto star = star_bch_fn<LambdaPoly>(su2);
    auto monos = monomials_up_to(3, 4);
    for (const auto& a : monos)
        for (const auto& b : monos) {
            if (multi_degree(a) + multi_degree(b) > 6) continue;
            auto f = PolyQ::monomial(3, a, LambdaPoly::one());
            auto g = PolyQ::monomial(3, b, LambdaPoly::one());
            CHECK(homogeneity_defect(star, f, g).is_zero());
        }
    // pointwise product is homogeneous as well
    auto pw = pointwise_fn<LambdaPoly>();
    CHECK(homogeneity_defect(pw, PolyQ::variable(3, 0),
                             PolyQ::variable(3, 1) * PolyQ::variable(3, 1))
              .is_zero());
}

TEST_CASE("associativity on random triples") {
    for (const char* name : {"su2", "heisenberg3", "aff1"}) {
        LieAlgebra L = LieAlgebra::catalog(name);
        StraightenTable tab(L);
        auto star = star_bch_fn<LambdaPoly>(tab);
        SampleRng rng(13);
        for (int t = 0; t < 5; ++t) {
            PolyQ f = random_poly(rng, L.dim(), 3, 3);
            PolyQ g = random_poly(rng, L.dim(), 3, 3);
            PolyQ h = random_poly(rng, L.dim(), 3, 3);
            CHECK(associativity_defect(star, f, g, h).is_zero());
        }
    }
}
