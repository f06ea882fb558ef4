#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "liestar/rational.hpp"

namespace liestar {

enum class SeriesSign { zero, positive, negative, non_real };

inline const char* to_string(SeriesSign s) {
    switch (s) {
        case SeriesSign::zero: return "zero";
        case SeriesSign::positive: return "positive";
        case SeriesSign::negative: return "negative";
        default: return "non-real";
    }
}

/// Polynomial in the formal parameter lambda over Q(i), optionally truncated
/// at a maximal stored order L.  nu is represented as i*lambda, so nu^2 = -lambda^2.
///
/// Truncation is a property of the value: ops combine orders by taking the
/// minimum of those present.  operator== compares stored terms only.
class LambdaPoly {
  public:
    using Term = std::pair<int, GaussianRational>;

    LambdaPoly() = default;
    LambdaPoly(GaussianRational c) {
        if (!c.is_zero()) terms_.push_back({0, std::move(c)});
    }
    LambdaPoly(Rational r) : LambdaPoly(GaussianRational(std::move(r))) {}
    LambdaPoly(long n) : LambdaPoly(GaussianRational(n)) {}

    static LambdaPoly zero() { return {}; }
    static LambdaPoly one() { return LambdaPoly(1); }

    /// c * lambda^k
    static LambdaPoly term(int k, GaussianRational c) {
        LambdaPoly p;
        if (!c.is_zero()) p.terms_.push_back({k, std::move(c)});
        return p;
    }

    /// nu^k = (i*lambda)^k
    static LambdaPoly nu_pow(int k) {
        return term(k, GaussianRational(1).times_i_pow(k));
    }

    static LambdaPoly lambda() { return term(1, GaussianRational(1)); }

    const std::vector<Term>& terms() const { return terms_; }
    std::optional<int> trunc_order() const { return trunc_; }

    bool is_zero() const { return terms_.empty(); }

    GaussianRational coeff(int k) const {
        for (const auto& [e, c] : terms_)
            if (e == k) return c;
        return GaussianRational();
    }

    /// Order of the lowest nonzero term; -1 when zero.
    int valuation() const { return terms_.empty() ? -1 : terms_.front().first; }
    int degree() const { return terms_.empty() ? -1 : terms_.back().first; }

    LambdaPoly operator-() const {
        LambdaPoly r(*this);
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    LambdaPoly operator+(const LambdaPoly& o) const {
        LambdaPoly r;
        r.trunc_ = combine_trunc(trunc_, o.trunc_);
        auto a = terms_.begin(), b = o.terms_.begin();
        while (a != terms_.end() || b != o.terms_.end()) {
            if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
                r.push(a->first, a->second);
                ++a;
            } else if (a == terms_.end() || b->first < a->first) {
                r.push(b->first, b->second);
                ++b;
            } else {
                r.push(a->first, a->second + b->second);
                ++a; ++b;
            }
        }
        r.apply_trunc();
        return r;
    }

    LambdaPoly operator-(const LambdaPoly& o) const { return *this + (-o); }

    LambdaPoly operator*(const LambdaPoly& o) const {
        LambdaPoly r;
        r.trunc_ = combine_trunc(trunc_, o.trunc_);
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) {
                int e = ea + eb;
                if (r.trunc_ && e > *r.trunc_) continue;
                r.add_to(e, ca * cb);
            }
        r.normalize();
        return r;
    }

    LambdaPoly& operator+=(const LambdaPoly& o) { *this = *this + o; return *this; }
    LambdaPoly& operator-=(const LambdaPoly& o) { *this = *this - o; return *this; }
    LambdaPoly& operator*=(const LambdaPoly& o) { *this = *this * o; return *this; }

    LambdaPoly times(const Rational& r) const {
        LambdaPoly p(*this);
        if (r.is_zero()) { p.terms_.clear(); return p; }
        for (auto& [e, c] : p.terms_) c = c * r;
        return p;
    }
    LambdaPoly times(const GaussianRational& z) const {
        LambdaPoly p(*this);
        if (z.is_zero()) { p.terms_.clear(); return p; }
        for (auto& [e, c] : p.terms_) c = c * z;
        return p;
    }

    LambdaPoly times_i_pow(int k) const {
        LambdaPoly p(*this);
        for (auto& [e, c] : p.terms_) c = c.times_i_pow(k);
        return p;
    }

    /// Multiplication by lambda^k (k >= 0); shifts the truncation window with it.
    LambdaPoly times_lambda_pow(int k) const {
        LambdaPoly p(*this);
        for (auto& [e, c] : p.terms_) e += k;
        if (p.trunc_) *p.trunc_ += k;
        return p;
    }

    /// Multiplication by nu^k = (i lambda)^k.
    LambdaPoly times_nu_pow(int k) const {
        return times_lambda_pow(k).times_i_pow(k);
    }

    /// Exact division by nu^k; throws when some term has lambda-order < k.
    LambdaPoly divide_by_nu_pow(int k) const {
        LambdaPoly p(*this);
        for (auto& [e, c] : p.terms_) {
            if (e < k)
                throw NonInvertibleCoefficient(
                    "coefficient not divisible by nu^" + std::to_string(k));
            e -= k;
            c = c.times_i_pow(-k);
        }
        if (p.trunc_) *p.trunc_ -= k;
        return p;
    }

    /// Coefficient-wise conjugation (lambda is treated as real).
    LambdaPoly conjugate() const {
        LambdaPoly p(*this);
        for (auto& [e, c] : p.terms_) c = c.conjugate();
        return p;
    }

    /// sum_k k * c_k lambda^k, i.e. lambda d/dlambda.
    LambdaPoly lambda_euler() const {
        LambdaPoly p(*this);
        for (auto& [e, c] : p.terms_) c = c * Rational(e);
        p.normalize();
        return p;
    }

    LambdaPoly truncated(int order) const {
        LambdaPoly p(*this);
        p.trunc_ = trunc_ ? std::min(*trunc_, order) : order;
        p.apply_trunc();
        return p;
    }

    LambdaPoly without_trunc() const {
        LambdaPoly p(*this);
        p.trunc_.reset();
        return p;
    }

    /// Ordered-ring verdict on R[[lambda]]: sign of the lowest nonzero real
    /// coefficient; non_real if any coefficient has an imaginary part.
    SeriesSign sign() const {
        if (terms_.empty()) return SeriesSign::zero;
        for (const auto& [e, c] : terms_)
            if (!c.is_real()) return SeriesSign::non_real;
        return terms_.front().second.re().sign() > 0 ? SeriesSign::positive
                                                     : SeriesSign::negative;
    }

    bool operator==(const LambdaPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LambdaPoly& o) const { return !(*this == o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) s += " + ";
            first = false;
            if (e == 0) {
                s += c.str();
            } else {
                if (!c.is_real() || !(c.re().is_one())) s += c.str() + "*";
                s += (e == 1) ? "λ" : ("λ^" + std::to_string(e));
            }
        }
        if (trunc_) s += " + O(λ^" + std::to_string(*trunc_ + 1) + ")";
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const LambdaPoly& p) {
        return os << p.str();
    }

  private:
    static std::optional<int> combine_trunc(const std::optional<int>& a,
                                            const std::optional<int>& b) {
        if (a && b) return std::min(*a, *b);
        return a ? a : b;
    }

    void push(int e, GaussianRational c) {
        if (!c.is_zero()) terms_.push_back({e, std::move(c)});
    }

    void add_to(int e, const GaussianRational& c) {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, int k) { return t.first < k; });
        if (it != terms_.end() && it->first == e)
            it->second += c;
        else
            terms_.insert(it, {e, c});
    }

    void normalize() {
        std::erase_if(terms_, [](const Term& t) { return t.second.is_zero(); });
    }

    void apply_trunc() {
        if (trunc_)
            std::erase_if(terms_, [&](const Term& t) { return t.first > *trunc_; });
        normalize();
    }

    std::vector<Term> terms_;       // sorted by exponent, no zero coefficients
    std::optional<int> trunc_;      // highest stored order, if truncated
};

inline SeriesSign series_sign(const LambdaPoly& p) { return p.sign(); }

} // namespace liestar
