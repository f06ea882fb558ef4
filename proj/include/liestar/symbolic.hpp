#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "liestar/lambda_poly.hpp"

namespace liestar {

/// Interned names for the commuting symbolic units (sqrt2, sqrtpi, r2,
/// group parameters, ...).  Ids are stable within a process.
using UnitId = int;

namespace detail {
struct UnitRegistry {
    std::vector<std::string> names;
    std::map<std::string, UnitId> ids;
    std::mutex mu;

    static UnitRegistry& instance() {
        static UnitRegistry r;
        return r;
    }
};
} // namespace detail

inline UnitId unit_id(const std::string& name) {
    auto& reg = detail::UnitRegistry::instance();
    std::lock_guard<std::mutex> lk(reg.mu);
    auto it = reg.ids.find(name);
    if (it != reg.ids.end()) return it->second;
    UnitId id = static_cast<UnitId>(reg.names.size());
    reg.names.push_back(name);
    reg.ids.emplace(name, id);
    return id;
}

inline std::string unit_name(UnitId id) {
    auto& reg = detail::UnitRegistry::instance();
    std::lock_guard<std::mutex> lk(reg.mu);
    return reg.names.at(static_cast<size_t>(id));
}

namespace units {
// Canonical basis: sqrt(2 pi)^n is stored as (sqrt2*sqrtpi)^n and pi as
// sqrtpi^2; e^{m^2/2} as exp_quarter^{2 m^2}.
inline UnitId sqrt2() { static UnitId u = unit_id("sqrt2"); return u; }
inline UnitId sqrtpi() { static UnitId u = unit_id("sqrtpi"); return u; }
inline UnitId r2() { static UnitId u = unit_id("r2"); return u; }
inline UnitId exp_quarter() { static UnitId u = unit_id("e^(1/4)"); return u; }
} // namespace units

/// Product of unit powers; exponents are integers (E * E^{-1} = 1 holds by
/// exponent addition).
class UnitMono {
  public:
    UnitMono() = default;

    static UnitMono one() { return {}; }
    static UnitMono unit(UnitId id, int exp = 1) {
        UnitMono m;
        if (exp != 0) m.e_.push_back({id, exp});
        return m;
    }

    bool is_one() const { return e_.empty(); }
    const std::vector<std::pair<UnitId, int>>& exps() const { return e_; }

    int exponent(UnitId id) const {
        for (const auto& [u, k] : e_)
            if (u == id) return k;
        return 0;
    }

    UnitMono operator*(const UnitMono& o) const {
        UnitMono r;
        auto a = e_.begin(), b = o.e_.begin();
        while (a != e_.end() || b != o.e_.end()) {
            if (b == o.e_.end() || (a != e_.end() && a->first < b->first)) {
                r.e_.push_back(*a); ++a;
            } else if (a == e_.end() || b->first < a->first) {
                r.e_.push_back(*b); ++b;
            } else {
                int k = a->second + b->second;
                if (k != 0) r.e_.push_back({a->first, k});
                ++a; ++b;
            }
        }
        return r;
    }

    UnitMono pow(int k) const {
        UnitMono r(*this);
        if (k == 0) return one();
        for (auto& [u, e] : r.e_) e *= k;
        return r;
    }

    /// Removes the unit, returning its exponent.
    UnitMono without(UnitId id, int* exp_out) const {
        UnitMono r;
        *exp_out = 0;
        for (const auto& t : e_) {
            if (t.first == id)
                *exp_out = t.second;
            else
                r.e_.push_back(t);
        }
        return r;
    }

    bool operator==(const UnitMono& o) const { return e_ == o.e_; }
    bool operator<(const UnitMono& o) const { return e_ < o.e_; }

    std::string str() const {
        std::string s;
        for (const auto& [u, k] : e_) {
            if (!s.empty()) s += "*";
            s += unit_name(u);
            if (k != 1) s += "^" + std::to_string(k);
        }
        return s;
    }

  private:
    std::vector<std::pair<UnitId, int>> e_;  // sorted by id, no zero exponents
};

/// Exact scalar: a finite sum of unit-monomials with LambdaPoly coefficients.
/// The unit-free case is a plain lambda-polynomial over Q(i).
class SymbolicScalar {
  public:
    SymbolicScalar() = default;
    SymbolicScalar(LambdaPoly p) { set(UnitMono::one(), std::move(p)); }
    SymbolicScalar(GaussianRational c) : SymbolicScalar(LambdaPoly(std::move(c))) {}
    SymbolicScalar(Rational r) : SymbolicScalar(LambdaPoly(std::move(r))) {}
    SymbolicScalar(long n) : SymbolicScalar(LambdaPoly(n)) {}

    static SymbolicScalar zero() { return {}; }
    static SymbolicScalar one() { return SymbolicScalar(1); }
    static SymbolicScalar unit(UnitId id, int exp = 1) {
        SymbolicScalar s;
        s.set(UnitMono::unit(id, exp), LambdaPoly::one());
        return s;
    }
    static SymbolicScalar term(UnitMono m, LambdaPoly p) {
        SymbolicScalar s;
        s.set(std::move(m), std::move(p));
        return s;
    }
    static SymbolicScalar nu_pow(int k) { return SymbolicScalar(LambdaPoly::nu_pow(k)); }

    const std::map<UnitMono, LambdaPoly>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_unit_free() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    /// The lambda-polynomial part; requires the value to be unit-free.
    LambdaPoly to_lambda() const {
        if (terms_.empty()) return LambdaPoly::zero();
        if (!is_unit_free())
            throw Error("SymbolicScalar: not unit-free: " + str());
        return terms_.begin()->second;
    }

    SymbolicScalar operator-() const {
        SymbolicScalar r(*this);
        for (auto& [m, p] : r.terms_) p = -p;
        return r;
    }

    SymbolicScalar operator+(const SymbolicScalar& o) const {
        SymbolicScalar r(*this);
        for (const auto& [m, p] : o.terms_) r.add_to(m, p);
        return r;
    }
    SymbolicScalar operator-(const SymbolicScalar& o) const { return *this + (-o); }

    SymbolicScalar operator*(const SymbolicScalar& o) const {
        SymbolicScalar r;
        for (const auto& [ma, pa] : terms_)
            for (const auto& [mb, pb] : o.terms_) r.add_to(ma * mb, pa * pb);
        return r;
    }

    SymbolicScalar& operator+=(const SymbolicScalar& o) { *this = *this + o; return *this; }
    SymbolicScalar& operator-=(const SymbolicScalar& o) { *this = *this - o; return *this; }
    SymbolicScalar& operator*=(const SymbolicScalar& o) { *this = *this * o; return *this; }

    SymbolicScalar times(const Rational& c) const {
        SymbolicScalar r(*this);
        for (auto& [m, p] : r.terms_) p = p.times(c);
        r.normalize();
        return r;
    }
    SymbolicScalar times(const GaussianRational& c) const {
        SymbolicScalar r(*this);
        for (auto& [m, p] : r.terms_) p = p.times(c);
        r.normalize();
        return r;
    }

    SymbolicScalar times_nu_pow(int k) const { return map([&](const LambdaPoly& p) { return p.times_nu_pow(k); }); }
    SymbolicScalar times_lambda_pow(int k) const { return map([&](const LambdaPoly& p) { return p.times_lambda_pow(k); }); }
    SymbolicScalar times_i_pow(int k) const { return map([&](const LambdaPoly& p) { return p.times_i_pow(k); }); }
    SymbolicScalar divide_by_nu_pow(int k) const { return map([&](const LambdaPoly& p) { return p.divide_by_nu_pow(k); }); }
    SymbolicScalar conjugate() const { return map([](const LambdaPoly& p) { return p.conjugate(); }); }
    SymbolicScalar lambda_euler() const { return map([](const LambdaPoly& p) { return p.lambda_euler(); }); }
    SymbolicScalar truncated(int order) const { return map([&](const LambdaPoly& p) { return p.truncated(order); }); }
    SymbolicScalar without_trunc() const { return map([](const LambdaPoly& p) { return p.without_trunc(); }); }

    /// Substitutes a rational value for one unit.
    SymbolicScalar bind_unit(UnitId id, const Rational& value) const {
        SymbolicScalar r;
        for (const auto& [m, p] : terms_) {
            int k = 0;
            UnitMono rest = m.without(id, &k);
            r.add_to(rest, p.times(value.pow(k)));
        }
        return r;
    }

    /// Coefficient of lambda^k as a symbolic scalar (lambda stripped).
    SymbolicScalar lambda_coefficient(int k) const {
        SymbolicScalar r;
        for (const auto& [m, p] : terms_) {
            GaussianRational c = p.coeff(k);
            if (!c.is_zero()) r.add_to(m, LambdaPoly(c));
        }
        return r;
    }

    int lambda_degree() const {
        int d = -1;
        for (const auto& [m, p] : terms_) d = std::max(d, p.degree());
        return d;
    }

    /// Series sign; requires a unit-free value.
    SeriesSign sign() const { return to_lambda().sign(); }

    bool operator==(const SymbolicScalar& o) const {
        return (*this - o).is_zero();
    }
    bool operator!=(const SymbolicScalar& o) const { return !(*this == o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, p] : terms_) {
            if (!first) s += " + ";
            first = false;
            if (m.is_one()) {
                s += "(" + p.str() + ")";
            } else {
                s += "(" + p.str() + ")*" + m.str();
            }
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const SymbolicScalar& s) {
        return os << s.str();
    }

  private:
    template <class F>
    SymbolicScalar map(F&& f) const {
        SymbolicScalar r;
        for (const auto& [m, p] : terms_) {
            LambdaPoly q = f(p);
            if (!q.is_zero()) r.terms_.emplace(m, std::move(q));
        }
        return r;
    }

    void set(UnitMono m, LambdaPoly p) {
        if (!p.is_zero()) terms_.emplace(std::move(m), std::move(p));
    }

    void add_to(const UnitMono& m, const LambdaPoly& p) {
        if (p.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, p);
        } else {
            it->second += p;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void normalize() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second.is_zero())
                it = terms_.erase(it);
            else
                ++it;
        }
    }

    std::map<UnitMono, LambdaPoly> terms_;  // no zero values
};

inline SeriesSign series_sign(const SymbolicScalar& s) { return s.sign(); }

/// sqrt(2 pi)^n in the canonical unit basis.
inline SymbolicScalar sqrt_two_pi_pow(int n) {
    return SymbolicScalar::term(
        UnitMono::unit(units::sqrt2(), n) * UnitMono::unit(units::sqrtpi(), n),
        LambdaPoly::one());
}

} // namespace liestar
