#pragma once

#include "ayh/affine_hecke.hpp"

namespace ayh {

// pure tensor of Bernstein elements, one per nonzero block of the sorted tuple
struct TensorElem {
    std::vector<BernsteinElem> comps;
};

// The parabolic subalgebra attached to a sorted residue tuple: the tensor
// product of extended affine Hecke algebras over the blocks of equal entries,
// together with the isomorphism phi onto the idempotent-truncated corner
// 1_lam Hhat 1_lam. phi sends Z^a T_w to X^a 1_lam g_w monomial by monomial;
// that it is multiplicative is checked by the test suites, not assumed.
class YoungHecke {
public:
    explicit YoungHecke(ResidueTuple lam0) : lam0_(std::move(lam0)) {
        if (!is_sorted_rep(lam0_))
            throw std::invalid_argument("YoungHecke: tuple must be a sorted representative");
        int offset = 0;
        for (int count : value_counts(lam0_)) {
            if (count > 0)
                factors_.push_back({count, offset, std::make_shared<AffineHecke>(count)});
            offset += count;
        }
    }

    const ResidueTuple& lam0() const { return lam0_; }
    int n() const { return lam0_.n(); }
    int r() const { return lam0_.r(); }
    size_t factor_count() const { return factors_.size(); }
    const AffineHecke& factor(size_t f) const { return *factors_[f].H; }
    int factor_size(size_t f) const { return factors_[f].size; }
    int factor_offset(size_t f) const { return factors_[f].offset; }

    // block sizes (n_1, ..., n_r) including zero blocks
    std::vector<int> block_sizes() const { return value_counts(lam0_); }

    bool in_young(const Perm& w) const { return stabilizes(w, lam0_); }
    bool in_young(const ExtAffineElem& what) const { return in_young(what.w); }

    // an element of Z^n x| W_lam splits into one factor per block
    std::vector<ExtAffineElem> split(const ExtAffineElem& what) const {
        if (!in_young(what)) throw std::invalid_argument("YoungHecke: element not in the subgroup");
        std::vector<ExtAffineElem> out;
        for (const auto& f : factors_) {
            std::vector<long long> t(what.trans.begin() + f.offset,
                                     what.trans.begin() + f.offset + f.size);
            std::vector<int> img(f.size);
            for (int j = 1; j <= f.size; ++j) img[j - 1] = what.w(f.offset + j) - f.offset;
            out.emplace_back(std::move(t), Perm(std::move(img)));
        }
        return out;
    }

    ExtAffineElem assemble(const std::vector<ExtAffineElem>& parts) const {
        std::vector<long long> t(n(), 0);
        std::vector<int> img(n());
        for (int i = 1; i <= n(); ++i) img[i - 1] = i;
        for (size_t f = 0; f < factors_.size(); ++f) {
            for (int j = 1; j <= factors_[f].size; ++j) {
                t[factors_[f].offset + j - 1] = parts[f].trans[j - 1];
                img[factors_[f].offset + j - 1] = parts[f].w(j) + factors_[f].offset;
            }
        }
        return ExtAffineElem(std::move(t), Perm(std::move(img)));
    }

    // length in the product of the factors
    int young_length(const ExtAffineElem& what) const {
        int len = 0;
        for (const auto& part : split(what)) len += part.length();
        return len;
    }

    // all elements with factor-length sum <= max_len and per-factor pi-exponent
    // inside the window
    std::vector<ExtAffineElem> ball(int max_len, long long pi_min, long long pi_max) const {
        std::vector<std::vector<ExtAffineElem>> per;
        for (const auto& f : factors_)
            per.push_back(enumerate_ball(f.size, max_len, pi_min, pi_max));
        std::vector<ExtAffineElem> out;
        std::vector<size_t> idx(factors_.size(), 0);
        while (true) {
            std::vector<ExtAffineElem> parts;
            int len = 0;
            for (size_t f = 0; f < factors_.size(); ++f) {
                parts.push_back(per[f][idx[f]]);
                len += parts.back().length();
            }
            if (len <= max_len) out.push_back(assemble(parts));
            size_t f = 0;
            while (f < idx.size() && ++idx[f] == per[f].size()) idx[f++] = 0;
            if (f == idx.size()) break;
        }
        return out;
    }

    // --- phi and its inverse ---

    HhatElem<LaurentZ> phi(const BernsteinElem& b) const {
        if (b.m != n()) throw std::invalid_argument("phi: size mismatch");
        HhatElem<LaurentZ> out(r(), n());
        for (const auto& [k, c] : b.terms) {
            if (!in_young(k.w))
                throw std::invalid_argument("phi: input not supported on the Young subgroup");
            out.add({k.a, lam0_, k.w}, c);
        }
        return out;
    }

    HhatElem<LaurentZ> phi(const TensorElem& t) const { return phi(embed(t)); }

    BernsteinElem phi_inv(const HhatElem<LaurentZ>& v) const {
        if (v.r != r() || v.n != n()) throw std::invalid_argument("phi_inv: parameter mismatch");
        BernsteinElem out(n());
        for (const auto& [k, c] : v.terms) {
            if (!(k.lam == lam0_) || !in_young(k.w))
                throw std::invalid_argument("phi_inv: element not in the corner subalgebra");
            out.add({k.alpha, k.w}, c);
        }
        return out;
    }

    // distribute a pure tensor over the blocks
    BernsteinElem embed(const TensorElem& t) const {
        if (t.comps.size() != factors_.size())
            throw std::invalid_argument("embed: wrong number of tensor components");
        BernsteinElem out(n());
        BKey unit{std::vector<int>(n(), 0), Perm::identity(n())};
        out.add(unit, LaurentZ(1));
        for (size_t f = 0; f < factors_.size(); ++f) {
            if (t.comps[f].m != factors_[f].size)
                throw std::invalid_argument("embed: component size mismatch");
            BernsteinElem next(n());
            for (const auto& [gk, gc] : out.terms)
                for (const auto& [fk, fc] : t.comps[f].terms) {
                    BKey key = gk;
                    std::vector<int> img = gk.w.images();
                    for (int j = 1; j <= factors_[f].size; ++j) {
                        key.a[factors_[f].offset + j - 1] = fk.a[j - 1];
                        img[factors_[f].offset + j - 1] = fk.w(j) + factors_[f].offset;
                    }
                    key.w = Perm(std::move(img));
                    next.add(key, gc * fc);
                }
            out = std::move(next);
        }
        return out;
    }

    TensorElem tensor_mul(const TensorElem& a, const TensorElem& b) const {
        if (a.comps.size() != factors_.size() || b.comps.size() != factors_.size())
            throw std::invalid_argument("tensor_mul: wrong number of components");
        TensorElem out;
        for (size_t f = 0; f < factors_.size(); ++f)
            out.comps.push_back(factors_[f].H->mul(a.comps[f], b.comps[f]));
        return out;
    }

    // g_{what,lam} = phi(T_what), the standard basis of the corner subalgebra
    const HhatElem<LaurentZ>& g_basis(const ExtAffineElem& what) const {
        auto it = gbasis_cache_.find(what);
        if (it != gbasis_cache_.end()) return it->second;
        auto parts = split(what);
        TensorElem t;
        for (size_t f = 0; f < factors_.size(); ++f)
            t.comps.push_back(factors_[f].H->bernstein_of_T(parts[f]));
        return gbasis_cache_.emplace(what, phi(t)).first->second;
    }

    // canonical basis coefficients of c_what over {T_y}, tensored per factor
    std::map<ExtAffineElem, LaurentZ> kl_young(const ExtAffineElem& what,
                                               int len_guard = 10) const {
        if (young_length(what) > len_guard) throw guard_error("kl_young: length guard exceeded");
        auto parts = split(what);
        std::vector<KLBasisElem> kls;
        for (size_t f = 0; f < factors_.size(); ++f)
            kls.push_back(factors_[f].H->kl(parts[f], len_guard));
        std::map<ExtAffineElem, LaurentZ> out;
        std::vector<std::map<ExtAffineElem, LaurentZ>::const_iterator> idx;
        for (const auto& k : kls) idx.push_back(k.expansion.terms.begin());
        while (true) {
            std::vector<ExtAffineElem> parts_y;
            LaurentZ coeff(1);
            for (size_t f = 0; f < kls.size(); ++f) {
                parts_y.push_back(idx[f]->first);
                coeff *= idx[f]->second;
            }
            out[assemble(parts_y)] = coeff;
            size_t f = 0;
            for (; f < idx.size(); ++f) {
                if (++idx[f] != kls[f].expansion.terms.end()) break;
                idx[f] = kls[f].expansion.terms.begin();
            }
            if (f == idx.size()) break;
        }
        return out;
    }

    // c_{what,lam} = phi(c_what)
    HhatElem<LaurentZ> c_basis_block(const ExtAffineElem& what, int len_guard = 10) const {
        HhatElem<LaurentZ> out(r(), n());
        for (const auto& [y, c] : kl_young(what, len_guard)) {
            HhatElem<LaurentZ> g = g_basis(y);
            for (const auto& [k, v] : g.terms) out.add(k, v * c);
        }
        return out;
    }

    // the bar involution transported to the corner subalgebra through phi
    HhatElem<LaurentZ> bar_block(const HhatElem<LaurentZ>& v) const {
        BernsteinElem b = phi_inv(v);
        BernsteinElem acc(n());
        for (const auto& [k, c] : b.terms) {
            TensorElem t;
            for (size_t f = 0; f < factors_.size(); ++f) {
                std::vector<int> a(k.a.begin() + factors_[f].offset,
                                   k.a.begin() + factors_[f].offset + factors_[f].size);
                std::vector<int> img(factors_[f].size);
                for (int j = 1; j <= factors_[f].size; ++j)
                    img[j - 1] = k.w(factors_[f].offset + j) - factors_[f].offset;
                t.comps.push_back(
                    factors_[f].H->bar(factors_[f].H->monomial(std::move(a), Perm(std::move(img)))));
            }
            acc = acc + embed(t).scaled(c.bar());
        }
        return phi(acc);
    }

    // coordinates of a corner element in the basis {g_{what,lam}}
    std::map<ExtAffineElem, LaurentZ> im_coords(const HhatElem<LaurentZ>& v) const {
        BernsteinElem b = phi_inv(v);
        std::map<ExtAffineElem, LaurentZ> out;
        for (const auto& [k, c] : b.terms) {
            std::vector<IMElem> per;
            for (size_t f = 0; f < factors_.size(); ++f) {
                std::vector<int> a(k.a.begin() + factors_[f].offset,
                                   k.a.begin() + factors_[f].offset + factors_[f].size);
                std::vector<int> img(factors_[f].size);
                for (int j = 1; j <= factors_[f].size; ++j)
                    img[j - 1] = k.w(factors_[f].offset + j) - factors_[f].offset;
                per.push_back(factors_[f].H->im_of_bernstein(
                    factors_[f].H->monomial(std::move(a), Perm(std::move(img)))));
            }
            std::vector<std::map<ExtAffineElem, LaurentZ>::const_iterator> idx;
            for (const auto& p : per) {
                if (p.terms.empty()) throw std::logic_error("im_coords: empty factor expansion");
                idx.push_back(p.terms.begin());
            }
            while (true) {
                std::vector<ExtAffineElem> parts;
                LaurentZ coeff = c;
                for (size_t f = 0; f < per.size(); ++f) {
                    parts.push_back(idx[f]->first);
                    coeff *= idx[f]->second;
                }
                ExtAffineElem key = assemble(parts);
                auto [it, inserted] = out.emplace(key, coeff);
                if (!inserted) {
                    it->second += coeff;
                    if (it->second.is_zero()) out.erase(it);
                }
                size_t f = 0;
                for (; f < idx.size(); ++f) {
                    if (++idx[f] != per[f].terms.end()) break;
                    idx[f] = per[f].terms.begin();
                }
                if (f == idx.size()) break;
            }
        }
        return out;
    }

private:
    struct Factor {
        int size;
        int offset;
        std::shared_ptr<AffineHecke> H;
    };

    ResidueTuple lam0_;
    std::vector<Factor> factors_;
    mutable std::map<ExtAffineElem, HhatElem<LaurentZ>> gbasis_cache_;
};

} // namespace ayh
