#include "liestar/lie_algebra.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace liestar {

using nlohmann::json;

std::string StructureViolation::str() const {
    std::ostringstream os;
    if (kind == Kind::antisymmetry)
        os << "antisymmetry violated at (i,j,k)=(" << i << "," << j << "," << k
           << "): c^k_ij + c^k_ji = " << value;
    else
        os << "Jacobi violated at (i,j,k,l)=(" << i << "," << j << "," << k << ","
           << l << "): defect " << value;
    return os.str();
}

std::optional<LieAlgebra> LieAlgebra::validate(const std::string& name, int dim,
                                               const std::vector<Rational>& c_table,
                                               ValidationReport* report) {
    ValidationReport local;
    ValidationReport& rep = report ? *report : local;
    rep.violations.clear();

    if (dim < 1 || dim > kMaxDim)
        throw Error("LieAlgebra: dimension out of range (1.." +
                    std::to_string(kMaxDim) + ")");
    const size_t need = static_cast<size_t>(dim) * dim * dim;
    if (c_table.size() != need)
        throw Error("LieAlgebra: structure constant table has wrong size");

    auto c = [&](int k, int i, int j) -> const Rational& {
        return c_table[static_cast<size_t>((k * dim + i) * dim + j)];
    };

    for (int k = 0; k < dim; ++k)
        for (int i = 0; i < dim; ++i)
            for (int j = i; j < dim; ++j) {
                Rational s = c(k, i, j) + c(k, j, i);
                if (!s.is_zero())
                    rep.violations.push_back({StructureViolation::Kind::antisymmetry,
                                              i + 1, j + 1, k + 1, 0, s});
            }

    // sum_m ( c^m_{ij} c^l_{mk} + c^m_{jk} c^l_{mi} + c^m_{ki} c^l_{mj} ) = 0
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (int k = j + 1; k < dim; ++k)
                for (int l = 0; l < dim; ++l) {
                    Rational s(0);
                    for (int m = 0; m < dim; ++m) {
                        s += c(m, i, j) * c(l, m, k);
                        s += c(m, j, k) * c(l, m, i);
                        s += c(m, k, i) * c(l, m, j);
                    }
                    if (!s.is_zero())
                        rep.violations.push_back({StructureViolation::Kind::jacobi,
                                                  i + 1, j + 1, k + 1, l + 1, s});
                }

    if (!rep.ok()) return std::nullopt;

    std::vector<std::string> basis;
    for (int i = 1; i <= dim; ++i) basis.push_back("e" + std::to_string(i));
    return LieAlgebra(name, dim, std::move(basis), c_table);
}

namespace {

void set_bracket(std::vector<Rational>& c, int dim, int i, int j, int k,
                 const Rational& v) {
    // [e_i, e_j] = v e_k plus the antisymmetric partner; 0-based inputs
    c[static_cast<size_t>((k * dim + i) * dim + j)] += v;
    c[static_cast<size_t>((k * dim + j) * dim + i)] -= v;
}

LieAlgebra build(const std::string& name, int dim,
                 const std::vector<std::tuple<int, int, int, Rational>>& brackets) {
    std::vector<Rational> c(static_cast<size_t>(dim) * dim * dim, Rational(0));
    for (const auto& [i, j, k, v] : brackets) set_bracket(c, dim, i, j, k, v);
    ValidationReport rep;
    auto alg = LieAlgebra::validate(name, dim, c, &rep);
    if (!alg) throw Error("catalog algebra failed validation: " + name);
    return *alg;
}

bool parse_call(const std::string& s, const std::string& fn, std::string* args) {
    if (s.size() <= fn.size() + 2) return false;
    if (s.compare(0, fn.size(), fn) != 0) return false;
    if (s[fn.size()] != '(' || s.back() != ')') return false;
    *args = s.substr(fn.size() + 1, s.size() - fn.size() - 2);
    return true;
}

std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(') depth++;
        if (ch == ')') depth--;
        if (ch == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    return parts;
}

LieAlgebra direct_sum(const std::string& name, const std::vector<LieAlgebra>& parts) {
    int dim = 0;
    for (const auto& p : parts) dim += p.dim();
    if (dim > LieAlgebra::kMaxDim) throw Error("direct_sum: dimension exceeds cap");
    std::vector<std::tuple<int, int, int, Rational>> brackets;
    int off = 0;
    for (const auto& p : parts) {
        for (int i = 0; i < p.dim(); ++i)
            for (int j = i + 1; j < p.dim(); ++j)
                for (int k = 0; k < p.dim(); ++k) {
                    const Rational& v = p.c(k, i, j);
                    if (!v.is_zero())
                        brackets.push_back({i + off, j + off, k + off, v});
                }
        off += p.dim();
    }
    return build(name, dim, brackets);
}

} // namespace

LieAlgebra LieAlgebra::catalog(const std::string& name) {
    Rational one(1);
    if (name == "su2")
        return build("su2", 3,
                     {{0, 1, 2, one}, {1, 2, 0, one}, {2, 0, 1, one}});
    if (name == "sl2")
        // basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
        return build("sl2", 3,
                     {{0, 1, 1, Rational(2)}, {0, 2, 2, Rational(-2)}, {1, 2, 0, one}});
    if (name == "heisenberg3" || name == "h3")
        return build("heisenberg3", 3, {{0, 1, 2, one}});
    if (name == "aff1")
        return build("aff1", 2, {{0, 1, 1, one}});
    std::string args;
    if (parse_call(name, "abelian", &args)) {
        int n = std::stoi(args);
        if (n < 1 || n > kMaxDim) throw Error("abelian: bad dimension");
        return build(name, n, {});
    }
    if (parse_call(name, "direct_sum", &args)) {
        std::vector<LieAlgebra> parts;
        for (const auto& part : split_top_level(args)) parts.push_back(catalog(part));
        if (parts.empty()) throw UnknownNameError(name);
        return direct_sum(name, parts);
    }
    throw UnknownNameError(name);
}

LieAlgebra LieAlgebra::from_json_text(const std::string& text) {
    json doc = json::parse(text);
    std::string name = doc.value("name", "algebra");
    int dim = doc.at("dim").get<int>();
    if (dim < 1 || dim > kMaxDim) throw Error("algebra file: bad dim");
    std::vector<Rational> c(static_cast<size_t>(dim) * dim * dim, Rational(0));
    if (doc.contains("brackets")) {
        for (const auto& b : doc.at("brackets")) {
            int i = b.at("i").get<int>();
            int j = b.at("j").get<int>();
            int k = b.at("k").get<int>();
            if (i < 1 || j < 1 || k < 1 || i > dim || j > dim || k > dim)
                throw Error("algebra file: bracket index out of range");
            if (i >= j)
                throw Error("algebra file: only i<j entries accepted "
                            "(antisymmetry is implied)");
            Rational v = Rational::parse(b.at("value").get<std::string>());
            set_bracket(c, dim, i - 1, j - 1, k - 1, v);
        }
    }
    ValidationReport rep;
    auto alg = validate(name, dim, c, &rep);
    if (!alg) {
        std::string msg = "algebra file failed validation:";
        for (const auto& v : rep.violations) msg += "\n  " + v.str();
        throw Error(msg);
    }
    if (doc.contains("basis")) {
        auto labels = doc.at("basis").get<std::vector<std::string>>();
        if (static_cast<int>(labels.size()) == dim) alg->basis_ = labels;
    }
    return *alg;
}

LieAlgebra LieAlgebra::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open algebra file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string LieAlgebra::to_json_text() const {
    json doc;
    doc["name"] = name_;
    doc["dim"] = n_;
    doc["basis"] = basis_;
    json brackets = json::array();
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            for (int k = 0; k < n_; ++k) {
                const Rational& v = c(k, i, j);
                if (v.is_zero()) continue;
                brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1},
                                    {"value", v.str()}});
            }
    doc["brackets"] = brackets;
    return doc.dump(2);
}

std::vector<Rational> LieAlgebra::bracket(const std::vector<Rational>& x,
                                          const std::vector<Rational>& y) const {
    std::vector<Rational> r(static_cast<size_t>(n_), Rational(0));
    for (int i = 0; i < n_; ++i) {
        if (x[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < n_; ++j) {
            if (y[static_cast<size_t>(j)].is_zero()) continue;
            Rational f = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
            for (int k = 0; k < n_; ++k) {
                const Rational& v = c(k, i, j);
                if (!v.is_zero()) r[static_cast<size_t>(k)] += f * v;
            }
        }
    }
    return r;
}

std::vector<std::vector<Rational>> LieAlgebra::adjoint_matrix(
    const std::vector<Rational>& x) const {
    std::vector<std::vector<Rational>> m(static_cast<size_t>(n_),
                                         std::vector<Rational>(static_cast<size_t>(n_),
                                                               Rational(0)));
    for (int k = 0; k < n_; ++k)
        for (int j = 0; j < n_; ++j) {
            Rational s(0);
            for (int i = 0; i < n_; ++i) s += x[static_cast<size_t>(i)] * c(k, i, j);
            m[static_cast<size_t>(k)][static_cast<size_t>(j)] = s;
        }
    return m;
}

LieAlgebra::Unimodularity LieAlgebra::unimodular() const {
    for (int j = 0; j < n_; ++j) {
        Rational s(0);
        for (int i = 0; i < n_; ++i) s += c(i, i, j);
        if (!s.is_zero()) return {false, j + 1, s};
    }
    return {true, 0, Rational(0)};
}

std::string LieAlgebra::canonical_table() const {
    std::ostringstream os;
    os << "dim=" << n_ << ";";
    for (int k = 0; k < n_; ++k)
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                const Rational& v = c(k, i, j);
                if (!v.is_zero()) os << k << "," << i << "," << j << ":" << v << ";";
            }
    return os.str();
}

} // namespace liestar
