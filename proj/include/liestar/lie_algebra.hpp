#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liestar/poly.hpp"
#include "liestar/rational.hpp"

namespace liestar {

/// One violated antisymmetry or Jacobi instance found during validation.
struct StructureViolation {
    enum class Kind { antisymmetry, jacobi } kind;
    int i = 0, j = 0, k = 0, l = 0;  // 1-based indices; l used for jacobi only
    Rational value;                  // the nonzero defect

    std::string str() const;
};

struct ValidationReport {
    std::vector<StructureViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Finite-dimensional real Lie algebra given by exact structure constants
/// [e_i, e_j] = c^k_{ij} e_k.  Immutable after construction.
class LieAlgebra {
  public:
    static constexpr int kMaxDim = 16;

    /// Validates antisymmetry and the Jacobi identity; on failure the report
    /// lists every violated instance.
    static std::optional<LieAlgebra> validate(const std::string& name, int dim,
                                              const std::vector<Rational>& c_table,
                                              ValidationReport* report);

    /// su2, sl2, heisenberg3, aff1, abelian(n), direct_sum(a,b,...).
    static LieAlgebra catalog(const std::string& name);

    /// Loads {name, dim, basis, brackets:[{i,j,k,value}]} from a JSON file;
    /// only i<j entries are accepted, antisymmetry is implied.
    static LieAlgebra from_json_file(const std::string& path);
    static LieAlgebra from_json_text(const std::string& text);

    const std::string& name() const { return name_; }
    int dim() const { return n_; }
    const std::vector<std::string>& basis() const { return basis_; }

    /// c^k_{ij}, 0-based indices.
    const Rational& c(int k, int i, int j) const {
        return c_[static_cast<size_t>((k * n_ + i) * n_ + j)];
    }

    /// Coefficient vector of [x, y].
    std::vector<Rational> bracket(const std::vector<Rational>& x,
                                  const std::vector<Rational>& y) const;

    /// hat([e_i, e_j]) as a linear polynomial, with coefficients in C.
    template <class C>
    Poly<C> bracket_hat(int i, int j) const {
        Poly<C> p(n_);
        for (int k = 0; k < n_; ++k) {
            const Rational& v = c(k, i, j);
            if (!v.is_zero()) p.add_term(multi_unit(n_, k), C(1).times(v));
        }
        return p;
    }

    /// Matrix of ad(x): rows k, columns j, entry sum_i x^i c^k_{ij}.
    std::vector<std::vector<Rational>> adjoint_matrix(const std::vector<Rational>& x) const;

    /// True iff sum_i c^i_{ij} = 0 for every j; otherwise a witness column j
    /// (1-based) and the nonzero sum.
    struct Unimodularity {
        bool unimodular;
        int witness_j = 0;
        Rational witness_value;
    };
    Unimodularity unimodular() const;

    /// Canonical serialization of the constants (name-independent),
    /// used for cache keys.
    std::string canonical_table() const;

    std::string to_json_text() const;

  private:
    LieAlgebra(std::string name, int n, std::vector<std::string> basis,
               std::vector<Rational> c)
        : name_(std::move(name)), n_(n), basis_(std::move(basis)), c_(std::move(c)) {}

    std::string name_;
    int n_;
    std::vector<std::string> basis_;
    std::vector<Rational> c_;  // dense (k*n + i)*n + j
};

/// {f, g} = xi_k c^k_{ij} df/dxi_i dg/dxi_j, exact.
template <class C>
Poly<C> poisson_bracket(const LieAlgebra& L, const Poly<C>& f, const Poly<C>& g) {
    if (f.nvars() != L.dim() || g.nvars() != L.dim())
        throw Error("poisson_bracket: variable count mismatch");
    Poly<C> r(L.dim());
    for (int i = 0; i < L.dim(); ++i) {
        Poly<C> dfi = f.derivative(i);
        if (dfi.is_zero()) continue;
        for (int j = 0; j < L.dim(); ++j) {
            Poly<C> dgj = g.derivative(j);
            if (dgj.is_zero()) continue;
            Poly<C> lin = L.bracket_hat<C>(i, j);
            if (lin.is_zero()) continue;
            r += lin * dfi * dgj;
        }
    }
    return r;
}

} // namespace liestar
