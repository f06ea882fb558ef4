#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "liestar/symbolic.hpp"

namespace liestar {

/// Exponent multi-index.
using Multi = std::vector<int>;

inline int multi_degree(const Multi& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

inline Multi multi_zero(int n) { return Multi(static_cast<size_t>(n), 0); }

inline Multi multi_unit(int n, int i) {
    Multi a = multi_zero(n);
    a[static_cast<size_t>(i)] = 1;
    return a;
}

inline Multi multi_add(const Multi& a, const Multi& b) {
    Multi r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

/// a - b when b <= a componentwise; false otherwise.
inline bool multi_sub(const Multi& a, const Multi& b, Multi* out) {
    *out = a;
    for (size_t i = 0; i < a.size(); ++i) {
        (*out)[i] -= b[i];
        if ((*out)[i] < 0) return false;
    }
    return true;
}

inline Rational multi_factorial(const Multi& a) {
    Rational r(1);
    for (int e : a) r *= Rational::factorial(e);
    return r;
}

/// All multi-indices over n variables of total degree exactly d, graded-lex.
void enumerate_degree(int n, int d, std::vector<Multi>* out);
/// All multi-indices of total degree <= d, by increasing degree.
std::vector<Multi> monomials_up_to(int n, int d);

/// Sparse multivariate polynomial over the coefficient ring C
/// (C is LambdaPoly or SymbolicScalar).
template <class C>
class Poly {
  public:
    Poly() : n_(0) {}
    explicit Poly(int nvars) : n_(nvars) {}

    static Poly zero(int nvars) { return Poly(nvars); }
    static Poly constant(int nvars, C c) {
        Poly p(nvars);
        if (!c.is_zero()) p.terms_.emplace(multi_zero(nvars), std::move(c));
        return p;
    }
    static Poly one(int nvars) { return constant(nvars, C(1)); }
    static Poly variable(int nvars, int i) {
        Poly p(nvars);
        p.terms_.emplace(multi_unit(nvars, i), C(1));
        return p;
    }
    static Poly monomial(int nvars, const Multi& a, C c) {
        Poly p(nvars);
        if (!c.is_zero()) p.terms_.emplace(a, std::move(c));
        return p;
    }

    int nvars() const { return n_; }
    const std::map<Multi, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const {
        int d = -1;
        for (const auto& [a, c] : terms_) d = std::max(d, multi_degree(a));
        return d;
    }

    C coeff(const Multi& a) const {
        auto it = terms_.find(a);
        return it == terms_.end() ? C() : it->second;
    }

    C constant_term() const { return coeff(multi_zero(n_)); }

    void add_term(const Multi& a, const C& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(a);
        if (it == terms_.end()) {
            terms_.emplace(a, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& [a, c] : r.terms_) c = -c;
        return r;
    }

    Poly operator+(const Poly& o) const {
        Poly r(*this);
        for (const auto& [a, c] : o.terms_) r.add_term(a, c);
        return r;
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        Poly r(n_);
        for (const auto& [a, ca] : terms_)
            for (const auto& [b, cb] : o.terms_) r.add_term(multi_add(a, b), ca * cb);
        return r;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [a, c] : o.terms_) add_term(a, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly times(const Rational& r) const {
        return map_coeffs([&](const C& c) { return c.times(r); });
    }
    Poly times(const GaussianRational& z) const {
        return map_coeffs([&](const C& c) { return c.times(z); });
    }
    Poly times(const C& s) const {
        return map_coeffs([&](const C& c) { return c * s; });
    }
    Poly times_nu_pow(int k) const {
        return map_coeffs([&](const C& c) { return c.times_nu_pow(k); });
    }

    Poly conjugate() const {
        return map_coeffs([](const C& c) { return c.conjugate(); });
    }

    Poly truncate_lambda(int order) const {
        return map_coeffs([&](const C& c) { return c.truncated(order); });
    }
    Poly without_trunc() const {
        return map_coeffs([](const C& c) { return c.without_trunc(); });
    }

    Poly derivative(int i) const {
        Poly r(n_);
        for (const auto& [a, c] : terms_) {
            int e = a[static_cast<size_t>(i)];
            if (e == 0) continue;
            Multi b = a;
            b[static_cast<size_t>(i)] -= 1;
            r.add_term(b, c.times(Rational(e)));
        }
        return r;
    }

    Poly derivative(const Multi& beta) const {
        Poly r = *this;
        for (size_t i = 0; i < beta.size(); ++i)
            for (int k = 0; k < beta[i]; ++k) r = r.derivative(static_cast<int>(i));
        return r;
    }

    /// H = lambda d/dlambda + Euler degree, applied termwise.
    Poly homogeneity_weight() const {
        Poly r(n_);
        for (const auto& [a, c] : terms_) {
            C w = c.lambda_euler() + c.times(Rational(multi_degree(a)));
            r.add_term(a, w);
        }
        return r;
    }

    /// Full composition: substitute images[i] for variable i.
    Poly substitute(const std::vector<Poly>& images) const {
        int m = images.empty() ? n_ : images.front().nvars();
        Poly r(m);
        for (const auto& [a, c] : terms_) {
            Poly t = Poly::constant(m, c);
            for (size_t i = 0; i < a.size(); ++i)
                for (int k = 0; k < a[i]; ++k) t *= images[i];
            r += t;
        }
        return r;
    }

    template <class F>
    Poly map_coeffs(F&& f) const {
        Poly r(n_);
        for (const auto& [a, c] : terms_) {
            C d = f(c);
            if (!d.is_zero()) r.terms_.emplace(a, std::move(d));
        }
        return r;
    }

    bool operator==(const Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [a, c] : terms_) {
            if (!first) s += " + ";
            first = false;
            s += "(" + c.str() + ")";
            for (size_t i = 0; i < a.size(); ++i) {
                if (a[i] == 0) continue;
                std::string v = i < names.size() ? names[i]
                                                 : ("x" + std::to_string(i + 1));
                s += "*" + v;
                if (a[i] > 1) s += "^" + std::to_string(a[i]);
            }
        }
        return s;
    }

  private:
    int n_;
    std::map<Multi, C> terms_;  // no zero coefficients
};

using PolyQ = Poly<LambdaPoly>;      // coefficients in Q(i)[lambda]
using PolyS = Poly<SymbolicScalar>;  // coefficients may carry symbolic units

inline PolyS embed_symbolic(const PolyQ& p) {
    PolyS r(p.nvars());
    for (const auto& [a, c] : p.terms()) r.add_term(a, SymbolicScalar(c));
    return r;
}

inline void enumerate_degree_impl(int n, int d, Multi& cur, int pos,
                                  std::vector<Multi>* out) {
    if (pos == n - 1) {
        cur[static_cast<size_t>(pos)] = d;
        out->push_back(cur);
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur[static_cast<size_t>(pos)] = e;
        enumerate_degree_impl(n, d - e, cur, pos + 1, out);
    }
}

inline void enumerate_degree(int n, int d, std::vector<Multi>* out) {
    Multi cur = multi_zero(n);
    if (n == 0) return;
    enumerate_degree_impl(n, d, cur, 0, out);
}

inline std::vector<Multi> monomials_up_to(int n, int d) {
    std::vector<Multi> out;
    for (int k = 0; k <= d; ++k) enumerate_degree(n, k, &out);
    return out;
}

} // namespace liestar
