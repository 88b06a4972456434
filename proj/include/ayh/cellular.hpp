#pragma once

#include <functional>
#include <optional>

#include "ayh/laurent.hpp"
#include "ayh/report.hpp"

namespace ayh {

// Sparse multivariate Laurent polynomial over Z in a small fixed number of
// variables; the coefficient rings of the cellular layers are all of this shape.
class MultiLaurent {
public:
    MultiLaurent() = default;
    explicit MultiLaurent(int nvars) : nvars_(nvars) {}

    static MultiLaurent constant(int nvars, long long c) {
        MultiLaurent p(nvars);
        p.add_term(std::vector<int>(nvars, 0), c);
        return p;
    }
    static MultiLaurent monomial(int nvars, std::vector<int> exps, long long c) {
        MultiLaurent p(nvars);
        p.add_term(std::move(exps), c);
        return p;
    }
    static MultiLaurent variable(int nvars, int i, int exp = 1) {
        std::vector<int> e(nvars, 0);
        e[i] = exp;
        return monomial(nvars, std::move(e), 1);
    }

    int nvars() const { return nvars_; }
    const std::map<std::vector<int>, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(std::vector<int> exps, long long c) {
        if (c == 0) return;
        if (static_cast<int>(exps.size()) != nvars_)
            throw std::invalid_argument("MultiLaurent: wrong arity");
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            terms_.emplace(std::move(exps), c);
        } else {
            it->second = checked_add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend MultiLaurent operator+(const MultiLaurent& a, const MultiLaurent& b) {
        check(a, b);
        MultiLaurent out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, c);
        return out;
    }
    friend MultiLaurent operator-(const MultiLaurent& a, const MultiLaurent& b) {
        check(a, b);
        MultiLaurent out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, checked_mul(c, -1));
        return out;
    }
    friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
        check(a, b);
        MultiLaurent out(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                std::vector<int> e(a.nvars_);
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                out.add_term(std::move(e), checked_mul(ca, cb));
            }
        return out;
    }
    MultiLaurent& operator+=(const MultiLaurent& o) { return *this = *this + o; }
    MultiLaurent& operator*=(const MultiLaurent& o) { return *this = *this * o; }
    friend bool operator==(const MultiLaurent& a, const MultiLaurent& b) = default;

    static MultiLaurent from_laurent(const LaurentZ& a) {
        MultiLaurent out(1);
        for (const auto& [e, c] : a.terms()) out.add_term({e}, c);
        return out;
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            std::string mono;
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += i < static_cast<int>(names.size()) ? names[i]
                                                           : "x" + std::to_string(i);
                if (e[i] != 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty())
                out += std::to_string(c);
            else
                out += (c == 1 ? "" : std::to_string(c) + "*") + mono;
        }
        return out;
    }

private:
    static void check(const MultiLaurent& a, const MultiLaurent& b) {
        if (a.nvars_ != b.nvars_) throw std::invalid_argument("MultiLaurent: arity mismatch");
    }

    int nvars_ = 1;
    std::map<std::vector<int>, long long> terms_;
};

// ring involution of the coefficient ring given by a signed monomial
// substitution per variable (enough for identity and all bar-type maps)
class RingInvolution {
public:
    static RingInvolution identity(int nvars) {
        RingInvolution s;
        s.nvars_ = nvars;
        for (int i = 0; i < nvars; ++i) s.images_.push_back(MultiLaurent::variable(nvars, i));
        return s;
    }
    // q_i -> q_i^-1 on the listed variables
    static RingInvolution bar(int nvars, const std::vector<int>& inverted) {
        RingInvolution s = identity(nvars);
        for (int i : inverted) s.images_[i] = MultiLaurent::variable(nvars, i, -1);
        return s;
    }

    int nvars() const { return nvars_; }

    MultiLaurent apply(const MultiLaurent& p) const {
        if (p.nvars() != nvars_) throw std::invalid_argument("RingInvolution: arity mismatch");
        MultiLaurent out(nvars_);
        for (const auto& [e, c] : p.terms()) {
            MultiLaurent term = MultiLaurent::constant(nvars_, c);
            for (int i = 0; i < nvars_; ++i)
                for (int rep = 0; rep < std::abs(e[i]); ++rep)
                    term = term * (e[i] > 0 ? images_[i] : invert_monomial(images_[i]));
            out += term;
        }
        return out;
    }

    bool is_involution() const {
        for (int i = 0; i < nvars_; ++i)
            if (!(apply(images_[i]) == MultiLaurent::variable(nvars_, i))) return false;
        return true;
    }

private:
    static MultiLaurent invert_monomial(const MultiLaurent& m) {
        if (m.terms().size() != 1 || std::abs(m.terms().begin()->second) != 1)
            throw std::invalid_argument("RingInvolution: image not an invertible monomial");
        auto [e, c] = *m.terms().begin();
        std::vector<int> inv(e.size());
        for (size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
        return MultiLaurent::monomial(static_cast<int>(e.size()), std::move(inv), c);
    }

    int nvars_ = 1;
    std::vector<MultiLaurent> images_;
};

using BMatrix = std::vector<std::vector<MultiLaurent>>;

inline BMatrix zero_matrix(int dim, int nvars) {
    return BMatrix(dim, std::vector<MultiLaurent>(dim, MultiLaurent(nvars)));
}

inline BMatrix identity_matrix(int dim, int nvars) {
    BMatrix m = zero_matrix(dim, nvars);
    for (int i = 0; i < dim; ++i) m[i][i] = MultiLaurent::constant(nvars, 1);
    return m;
}

// E_{jl}(b), 1-indexed
inline BMatrix unit_matrix(int dim, int j, int l, const MultiLaurent& b) {
    BMatrix m = zero_matrix(dim, b.nvars());
    m[j - 1][l - 1] = b;
    return m;
}

inline BMatrix mat_mul_plain(const BMatrix& x, const BMatrix& y) {
    int dim = static_cast<int>(x.size());
    int nv = x[0][0].nvars();
    BMatrix out = zero_matrix(dim, nv);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) out[i][j] += x[i][k] * y[k][j];
    return out;
}

// Generalized matrix algebra (M_dim(B), rho): multiplication twisted by the
// form matrix, x . y = x Psi y. The checked factory enforces that sigma is an
// involution compatible with the form, which is exactly when the transpose-
// with-sigma map is an anti-automorphism.
class GenMatrixAlgebra {
public:
    static GenMatrixAlgebra make(int dim, int nvars, BMatrix psi, RingInvolution sigma) {
        GenMatrixAlgebra A = make_unchecked(dim, nvars, std::move(psi), std::move(sigma));
        if (!A.sigma_.is_involution())
            throw std::invalid_argument("GenMatrixAlgebra: sigma is not an involution");
        if (!A.involution_compatible())
            throw std::invalid_argument("GenMatrixAlgebra: sigma(Psi)^t != Psi");
        return A;
    }

    // for negative controls in the tests
    static GenMatrixAlgebra make_unchecked(int dim, int nvars, BMatrix psi,
                                           RingInvolution sigma) {
        GenMatrixAlgebra A;
        A.dim_ = dim;
        A.nvars_ = nvars;
        A.psi_ = std::move(psi);
        A.sigma_ = std::move(sigma);
        if (static_cast<int>(A.psi_.size()) != dim)
            throw std::invalid_argument("GenMatrixAlgebra: form matrix has wrong size");
        return A;
    }

    int dim() const { return dim_; }
    int nvars() const { return nvars_; }
    const BMatrix& psi() const { return psi_; }
    const RingInvolution& sigma() const { return sigma_; }

    bool involution_compatible() const {
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                if (!(sigma_.apply(psi_[j][i]) == psi_[i][j])) return false;
        return true;
    }

    BMatrix mul(const BMatrix& x, const BMatrix& y) const {
        if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
            throw std::invalid_argument("gma_mul: shape mismatch");
        return mat_mul_plain(mat_mul_plain(x, psi_), y);
    }

    // kappa: E_{jl}(b) -> E_{lj}(sigma(b))
    BMatrix involution(const BMatrix& x) const {
        if (!involution_compatible())
            throw std::invalid_argument("gma_involution: sigma(Psi)^t != Psi");
        return involution_unchecked(x);
    }

    BMatrix involution_unchecked(const BMatrix& x) const {
        BMatrix out = zero_matrix(dim_, nvars_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) out[j][i] = sigma_.apply(x[i][j]);
        return out;
    }

private:
    int dim_ = 1;
    int nvars_ = 1;
    BMatrix psi_;
    RingInvolution sigma_;
};

// layer bookkeeping for affine cell chains
struct CellLayer {
    std::string label;
    long long rank = 1;      // rank of the free module V
    int nvars = 0;           // number of variables of the layer's coefficient ring
    std::optional<BMatrix> psi; // form matrix when tracked
};

struct ChainSpec {
    std::vector<CellLayer> layers;
};

inline BMatrix kronecker(const BMatrix& a, const BMatrix& b, int nvars_a, int nvars_b) {
    int da = static_cast<int>(a.size()), db = static_cast<int>(b.size());
    int nv = nvars_a + nvars_b;
    BMatrix out = zero_matrix(da * db, nv);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
            for (int k = 0; k < db; ++k)
                for (int l = 0; l < db; ++l) {
                    MultiLaurent entry(nv);
                    for (const auto& [ea, ca] : a[i][j].terms())
                        for (const auto& [eb, cb] : b[k][l].terms()) {
                            std::vector<int> e = ea;
                            e.insert(e.end(), eb.begin(), eb.end());
                            entry.add_term(std::move(e), checked_mul(ca, cb));
                        }
                    out[i * db + k][j * db + l] = entry;
                }
    return out;
}

// The interleaved chain of the tensor product: the layer added
// at step a*m + b is (layer a+1 of the first chain) x (layer b of the second).
// Ranks multiply, coefficient rings tensor, forms compose as rho1 x rho2.
inline ChainSpec chain_tensor(const ChainSpec& c1, const ChainSpec& c2) {
    ChainSpec out;
    for (const auto& l1 : c1.layers)
        for (const auto& l2 : c2.layers) {
            CellLayer layer;
            layer.label = l1.label + "(x)" + l2.label;
            layer.rank = checked_mul(l1.rank, l2.rank);
            layer.nvars = l1.nvars + l2.nvars;
            if (l1.psi && l2.psi) layer.psi = kronecker(*l1.psi, *l2.psi, l1.nvars, l2.nvars);
            out.layers.push_back(std::move(layer));
        }
    return out;
}

// A finite-rank cell-ideal instance: a basis of the ideal, its multiplication
// and involution, exact coordinates in the basis, and the claimed isomorphism
// onto a generalized matrix algebra given on basis elements.
template <class Elem>
struct CellIdealInstance {
    std::vector<Elem> basis;
    std::function<Elem(const Elem&, const Elem&)> mul;
    std::function<Elem(const Elem&)> invol;
    std::function<std::optional<std::vector<MultiLaurent>>(const Elem&)> coords;
    GenMatrixAlgebra gma;
    std::vector<std::tuple<int, int, MultiLaurent>> iso; // basis k -> E_{j,l}(b)
};

// the three conditions of the affine-cell-ideal characterization, on a
// finite-rank instance; each line carries the first counterexample found
template <class Elem>
std::vector<RelationCheck> cell_ideal_check(const CellIdealInstance<Elem>& inst) {
    std::vector<RelationCheck> out;
    const auto& A = inst.gma;
    auto image = [&](const std::vector<MultiLaurent>& coords) {
        BMatrix m = zero_matrix(A.dim(), A.nvars());
        for (size_t k = 0; k < coords.size(); ++k) {
            auto [j, l, b] = inst.iso[k];
            m[j - 1][l - 1] += coords[k] * b;
        }
        return m;
    };

    // (a) the involution preserves the ideal
    {
        bool ok = true;
        std::string witness;
        for (size_t k = 0; k < inst.basis.size(); ++k)
            if (!inst.coords(inst.invol(inst.basis[k]))) {
                ok = false;
                witness = " (basis element " + std::to_string(k) + ")";
                break;
            }
        out.push_back({"involution preserves the ideal" + witness, ok});
    }

    // (b) the map to the generalized matrix algebra is multiplicative
    {
        bool ok = true;
        std::string witness;
        for (size_t k1 = 0; ok && k1 < inst.basis.size(); ++k1)
            for (size_t k2 = 0; ok && k2 < inst.basis.size(); ++k2) {
                auto prod = inst.coords(inst.mul(inst.basis[k1], inst.basis[k2]));
                if (!prod) {
                    ok = false;
                    witness = " (product " + std::to_string(k1) + "*" + std::to_string(k2) +
                              " left the span)";
                    break;
                }
                auto [j1, l1, b1] = inst.iso[k1];
                auto [j2, l2, b2] = inst.iso[k2];
                BMatrix lhs = A.mul(unit_matrix(A.dim(), j1, l1, b1),
                                    unit_matrix(A.dim(), j2, l2, b2));
                if (!(lhs == image(*prod))) {
                    ok = false;
                    witness = " (pair " + std::to_string(k1) + "," + std::to_string(k2) + ")";
                }
            }
        out.push_back({"basis map is multiplicative" + witness, ok});
    }

    // (c) the involution corresponds to E_{jl}(b) -> E_{lj}(sigma(b))
    {
        bool ok = true;
        std::string witness;
        for (size_t k = 0; k < inst.basis.size(); ++k) {
            auto ic = inst.coords(inst.invol(inst.basis[k]));
            if (!ic) continue; // reported by (a)
            auto [j, l, b] = inst.iso[k];
            BMatrix expect = unit_matrix(A.dim(), l, j, A.sigma().apply(b));
            if (!(image(*ic) == expect)) {
                ok = false;
                witness = " (basis element " + std::to_string(k) + ")";
                break;
            }
        }
        out.push_back({"involution matches E_{jl}(b) -> E_{lj}(sigma(b))" + witness, ok});
    }
    return out;
}

} // namespace ayh
