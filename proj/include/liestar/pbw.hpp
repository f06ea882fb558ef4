#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "liestar/lie_algebra.hpp"
#include "liestar/poly.hpp"

namespace liestar {

/// One PBW monomial with a rational weight.
struct PbwTerm {
    Multi mono;
    Rational coeff;
};

/// Per-algebra memo of straightening and symmetrization results over Q.
/// Inserts are idempotent; lookups behave as if computed fresh.
class StraightenTable {
  public:
    explicit StraightenTable(LieAlgebra alg) : alg_(std::move(alg)) {}

    const LieAlgebra& algebra() const { return alg_; }

    /// Normal form of e^a * e_j (0-based generator index).
    std::vector<PbwTerm> rmul(const Multi& a, int j) const {
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = rmul_.find({a, j});
            if (it != rmul_.end()) return it->second;
        }
        std::vector<PbwTerm> r = rmul_compute(a, j);
        std::lock_guard<std::mutex> lk(mu_);
        rmul_.emplace(std::make_pair(a, j), r);
        return r;
    }

    /// Total symmetrization of the degree-|alpha| monomial with multiset alpha,
    /// in PBW normal form (no nu factors; those enter via sigma_nu).
    std::vector<PbwTerm> sym(const Multi& alpha) const {
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = sym_.find(alpha);
            if (it != sym_.end()) return it->second;
        }
        std::vector<PbwTerm> r = sym_compute(alpha);
        std::lock_guard<std::mutex> lk(mu_);
        sym_.emplace(alpha, r);
        return r;
    }

    // Snapshot/restore of the memo, for the persistent cache.
    std::map<std::pair<Multi, int>, std::vector<PbwTerm>> rmul_snapshot() const {
        std::lock_guard<std::mutex> lk(mu_);
        return rmul_;
    }
    std::map<Multi, std::vector<PbwTerm>> sym_snapshot() const {
        std::lock_guard<std::mutex> lk(mu_);
        return sym_;
    }
    void preload(std::map<std::pair<Multi, int>, std::vector<PbwTerm>> rmul_entries,
                 std::map<Multi, std::vector<PbwTerm>> sym_entries) const {
        std::lock_guard<std::mutex> lk(mu_);
        for (auto& [k, v] : rmul_entries) rmul_.emplace(std::move(k), std::move(v));
        for (auto& [k, v] : sym_entries) sym_.emplace(std::move(k), std::move(v));
    }

  private:
    static void accumulate(std::map<Multi, Rational>& acc, const Multi& m,
                           const Rational& v) {
        auto it = acc.find(m);
        if (it == acc.end()) {
            acc.emplace(m, v);
        } else {
            it->second += v;
            if (it->second.is_zero()) acc.erase(it);
        }
    }

    static std::vector<PbwTerm> to_terms(const std::map<Multi, Rational>& acc) {
        std::vector<PbwTerm> r;
        r.reserve(acc.size());
        for (const auto& [m, v] : acc) r.push_back({m, v});
        return r;
    }

    std::vector<PbwTerm> rmul_compute(const Multi& a, int j) const {
        const int n = alg_.dim();
        int m = -1;
        for (int i = n - 1; i >= 0; --i)
            if (a[static_cast<size_t>(i)] > 0) { m = i; break; }
        if (m <= j) {
            Multi b = a;
            b[static_cast<size_t>(j)] += 1;
            return {{b, Rational(1)}};
        }
        // e^a e_j = (e^{a'} e_j) e_m + e^{a'} [e_m, e_j]
        Multi ap = a;
        ap[static_cast<size_t>(m)] -= 1;
        std::map<Multi, Rational> acc;
        for (const auto& t : rmul(ap, j))
            for (const auto& u : rmul(t.mono, m))
                accumulate(acc, u.mono, t.coeff * u.coeff);
        for (int k = 0; k < n; ++k) {
            const Rational& ck = alg_.c(k, m, j);
            if (ck.is_zero()) continue;
            for (const auto& t : rmul(ap, k)) accumulate(acc, t.mono, ck * t.coeff);
        }
        return to_terms(acc);
    }

    // S(alpha) = (1/k) sum_v alpha_v S(alpha - delta_v) . e_v
    std::vector<PbwTerm> sym_compute(const Multi& alpha) const {
        const int k = multi_degree(alpha);
        if (k == 0) return {{alpha, Rational(1)}};
        std::map<Multi, Rational> acc;
        Rational inv_k = Rational(1, k);
        for (int v = 0; v < alg_.dim(); ++v) {
            int mult = alpha[static_cast<size_t>(v)];
            if (mult == 0) continue;
            Multi am = alpha;
            am[static_cast<size_t>(v)] -= 1;
            Rational w = Rational(mult) * inv_k;
            for (const auto& t : sym(am))
                for (const auto& u : rmul(t.mono, v))
                    accumulate(acc, u.mono, w * t.coeff * u.coeff);
        }
        return to_terms(acc);
    }

    LieAlgebra alg_;
    mutable std::map<std::pair<Multi, int>, std::vector<PbwTerm>> rmul_;
    mutable std::map<Multi, std::vector<PbwTerm>> sym_;
    mutable std::mutex mu_;
};

/// Element of U(g)[nu] in PBW normal form: ordered monomials e^a with
/// coefficients in C.
template <class C>
struct PbwElement {
    Poly<C> terms;  // exponent vector -> coefficient

    static PbwElement zero(int n) { return {Poly<C>::zero(n)}; }
    static PbwElement unit(int n) { return {Poly<C>::one(n)}; }

    bool is_zero() const { return terms.is_zero(); }
    bool operator==(const PbwElement& o) const { return terms == o.terms; }
};

/// Product in U(g), straightened to normal form.
template <class C>
PbwElement<C> pbw_mul(const StraightenTable& tab, const PbwElement<C>& A,
                      const PbwElement<C>& B) {
    const int n = tab.algebra().dim();
    PbwElement<C> out = PbwElement<C>::zero(n);
    for (const auto& [b, cb] : B.terms.terms()) {
        // cur = A * e^b, multiplying generators of b left to right
        Poly<C> cur = A.terms;
        for (int v = 0; v < n; ++v) {
            for (int rep = 0; rep < b[static_cast<size_t>(v)]; ++rep) {
                Poly<C> next(n);
                for (const auto& [a, ca] : cur.terms())
                    for (const auto& t : tab.rmul(a, v))
                        next.add_term(t.mono, ca.times(t.coeff));
                cur = std::move(next);
            }
        }
        out.terms += cur.map_coeffs([&](const C& c) { return c * cb; });
    }
    return out;
}

/// sigma_nu: each degree-k monomial maps to (nu^k/k!) times the sum over all
/// orderings, in normal form.  Linear in f.
template <class C>
PbwElement<C> symmetrize(const StraightenTable& tab, const Poly<C>& f) {
    const int n = tab.algebra().dim();
    PbwElement<C> out = PbwElement<C>::zero(n);
    for (const auto& [alpha, coeff] : f.terms()) {
        C scaled = coeff.times_nu_pow(multi_degree(alpha));
        for (const auto& t : tab.sym(alpha))
            out.terms.add_term(t.mono, scaled.times(t.coeff));
    }
    return out;
}

/// Inverse of sigma_nu, top filtration degree down.  Throws
/// NonInvertibleCoefficient when the input is not in the image of sigma_nu
/// on Pol[nu].
template <class C>
Poly<C> unsymmetrize(const StraightenTable& tab, PbwElement<C> A) {
    const int n = tab.algebra().dim();
    Poly<C> f(n);
    while (!A.terms.is_zero()) {
        int d = A.terms.degree();
        Poly<C> layer(n);
        for (const auto& [a, c] : A.terms.terms())
            if (multi_degree(a) == d) layer.add_term(a, c.divide_by_nu_pow(d));
        f += layer;
        A.terms -= symmetrize(tab, layer).terms;
    }
    return f;
}

} // namespace liestar
