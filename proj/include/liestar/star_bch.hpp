#pragma once

#include <functional>

#include "liestar/pbw.hpp"

namespace liestar {

/// f *_BCH g = sigma_nu^{-1}( sigma_nu(f) . sigma_nu(g) ).  Exact; the result
/// is polynomial in nu = i lambda of nu-degree <= deg f + deg g.
template <class C>
Poly<C> star_bch(const StraightenTable& tab, const Poly<C>& f, const Poly<C>& g) {
    return unsymmetrize(tab, pbw_mul(tab, symmetrize(tab, f), symmetrize(tab, g)));
}

template <class C>
using StarFn = std::function<Poly<C>(const Poly<C>&, const Poly<C>&)>;

template <class C>
StarFn<C> star_bch_fn(const StraightenTable& tab) {
    return [&tab](const Poly<C>& f, const Poly<C>& g) { return star_bch(tab, f, g); };
}

template <class C>
StarFn<C> pointwise_fn() {
    return [](const Poly<C>& f, const Poly<C>& g) { return f * g; };
}

/// x_hat * f - f * x_hat - nu {x_hat, f}; zero certifies strong invariance.
template <class C>
Poly<C> strong_invariance_defect(const StraightenTable& tab, int x_index,
                                 const Poly<C>& f) {
    const LieAlgebra& L = tab.algebra();
    Poly<C> xh = Poly<C>::variable(L.dim(), x_index);
    Poly<C> lhs = star_bch(tab, xh, f) - star_bch(tab, f, xh);
    return lhs - poisson_bracket(L, xh, f).times_nu_pow(1);
}

/// x_hat * y_hat - y_hat * x_hat - nu [x,y]^ for basis elements.
template <class C>
Poly<C> covariance_defect(const StraightenTable& tab, int i, int j) {
    const LieAlgebra& L = tab.algebra();
    Poly<C> xi = Poly<C>::variable(L.dim(), i);
    Poly<C> xj = Poly<C>::variable(L.dim(), j);
    Poly<C> comm = star_bch(tab, xi, xj) - star_bch(tab, xj, xi);
    return comm - L.bracket_hat<C>(i, j).times_nu_pow(1);
}

/// conj(f * g) - conj(g) * conj(f); zero certifies the Hermitian property.
template <class C>
Poly<C> hermitian_defect(const StarFn<C>& star, const Poly<C>& f, const Poly<C>& g) {
    return star(f, g).conjugate() - star(g.conjugate(), f.conjugate());
}

/// H(f*g) - Hf*g - f*Hg with H = lambda d/dlambda + Euler degree; zero
/// certifies homogeneity on (f, g).
template <class C>
Poly<C> homogeneity_defect(const StarFn<C>& star, const Poly<C>& f, const Poly<C>& g) {
    Poly<C> fg = star(f, g);
    return fg.homogeneity_weight() - star(f.homogeneity_weight(), g) -
           star(f, g.homogeneity_weight());
}

template <class C>
Poly<C> associativity_defect(const StarFn<C>& star, const Poly<C>& f,
                             const Poly<C>& g, const Poly<C>& h) {
    return star(star(f, g), h) - star(f, star(g, h));
}

} // namespace liestar
