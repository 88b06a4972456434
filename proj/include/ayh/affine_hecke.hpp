#pragma once

#include <memory>

#include "ayh/hhat.hpp"

namespace ayh {

// basis monomial Z^a T_w of the Bernstein presentation
struct BKey {
    std::vector<int> a;
    Perm w;

    friend bool operator==(const BKey& x, const BKey& y) = default;
    friend auto operator<=>(const BKey& x, const BKey& y) = default;

    std::string str() const {
        std::string out;
        bool zero = true;
        for (int v : a) zero &= (v == 0);
        if (!zero) {
            out += "Z[";
            for (size_t i = 0; i < a.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(a[i]);
            }
            out += "]";
        }
        if (!w.is_identity()) {
            if (!out.empty()) out += " ";
            out += "T" + w.str();
        }
        return out.empty() ? "1" : out;
    }
};

struct BernsteinElem {
    int m = 1;
    std::map<BKey, LaurentZ> terms;

    BernsteinElem() = default;
    explicit BernsteinElem(int m_) : m(m_) {}

    bool is_zero() const { return terms.empty(); }

    void add(const BKey& key, const LaurentZ& c) {
        if (c.is_zero()) return;
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    friend BernsteinElem operator+(const BernsteinElem& a, const BernsteinElem& b) {
        check_compat(a, b);
        BernsteinElem out = a;
        for (const auto& [k, c] : b.terms) out.add(k, c);
        return out;
    }
    friend BernsteinElem operator-(const BernsteinElem& a, const BernsteinElem& b) {
        check_compat(a, b);
        BernsteinElem out = a;
        for (const auto& [k, c] : b.terms) out.add(k, -c);
        return out;
    }
    BernsteinElem scaled(const LaurentZ& c) const {
        BernsteinElem out(m);
        for (const auto& [k, v] : terms) out.add(k, v * c);
        return out;
    }
    friend bool operator==(const BernsteinElem& a, const BernsteinElem& b) = default;

    static void check_compat(const BernsteinElem& a, const BernsteinElem& b) {
        if (a.m != b.m) throw std::invalid_argument("BernsteinElem: size mismatch");
    }

    std::string str() const {
        if (terms.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : terms) {
            if (!out.empty()) out += " + ";
            std::string cs = c.str();
            if (cs != "1") out += "(" + cs + ")*";
            out += k.str();
        }
        return out;
    }
};

// expansion in the Iwahori-Matsumoto basis {T_what}
struct IMElem {
    int m = 1;
    std::map<ExtAffineElem, LaurentZ> terms;

    IMElem() = default;
    explicit IMElem(int m_) : m(m_) {}

    bool is_zero() const { return terms.empty(); }

    void add(const ExtAffineElem& key, const LaurentZ& c) {
        if (c.is_zero()) return;
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    friend IMElem operator+(const IMElem& a, const IMElem& b) {
        if (a.m != b.m) throw std::invalid_argument("IMElem: size mismatch");
        IMElem out = a;
        for (const auto& [k, c] : b.terms) out.add(k, c);
        return out;
    }
    IMElem scaled(const LaurentZ& c) const {
        IMElem out(m);
        for (const auto& [k, v] : terms) out.add(k, v * c);
        return out;
    }
    friend bool operator==(const IMElem& a, const IMElem& b) = default;

    std::string str() const {
        if (terms.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : terms) {
            if (!out.empty()) out += " + ";
            std::string cs = c.str();
            if (cs != "1") out += "(" + cs + ")*";
            out += "T{" + k.str() + "}";
        }
        return out;
    }
};

struct KLBasisElem {
    ExtAffineElem top;
    IMElem expansion; // unitriangular: coefficient of T_top is 1
};

// The extended affine Hecke algebra of GL_m over A, in both presentations.
// The Bernstein side is the PBW engine with a single residue value; the IM
// side multiplies T-basis expansions directly. The two sides are bridged by
// the generator image pi -> Z_1 T_{s_1} ... T_{s_{m-1}} (and back). With the
// recursion Z_{i+1} = T_i Z_i T_i this is the image that makes pi^m the
// central element Z_1 ... Z_m; the executable identities in the test suite
// pin it down. Antidominant translations then match Laurent monomials,
// T_{t_mu} = Z^mu for weakly increasing mu.
class AffineHecke {
public:
    explicit AffineHecke(int m)
        : m_(m), eng_(1, m), triv_(ResidueTuple(1, std::vector<int>(m, 1))) {
        if (m < 1) throw std::invalid_argument("AffineHecke: rank must be positive");
        pi_ = gen_Z(1, 1);
        for (int i = 1; i < m_; ++i) pi_ = from_engine(eng_.mul_g(to_engine(pi_), i));
        pi_inv_ = one();
        for (int i = m_ - 1; i >= 1; --i)
            pi_inv_ = from_engine(eng_.mul_ginv(to_engine(pi_inv_), i));
        pi_inv_ = from_engine(eng_.mul_x(to_engine(pi_inv_), 1, -1));
        if (m_ >= 2) s0_ = mul(mul(pi_, gen_T(m_ - 1)), pi_inv_);
    }

    int rank() const { return m_; }

    BernsteinElem zero() const { return BernsteinElem(m_); }
    BernsteinElem one() const {
        BernsteinElem out(m_);
        out.add({std::vector<int>(m_, 0), Perm::identity(m_)}, LaurentZ(1));
        return out;
    }
    BernsteinElem monomial(std::vector<int> a, const Perm& w) const {
        BernsteinElem out(m_);
        out.add({std::move(a), w}, LaurentZ(1));
        return out;
    }
    BernsteinElem gen_T(int i) const { return monomial(std::vector<int>(m_, 0), Perm::s(m_, i)); }
    BernsteinElem gen_Tinv(int i) const {
        return gen_T(i) - one().scaled(laurent_gap());
    }
    BernsteinElem gen_Z(int j, int e) const {
        std::vector<int> a(m_, 0);
        a[j - 1] = e;
        return monomial(std::move(a), Perm::identity(m_));
    }

    BernsteinElem mul(const BernsteinElem& a, const BernsteinElem& b) const {
        return from_engine(eng_.mul(to_engine(a), to_engine(b)));
    }

    const BernsteinElem& pi_image() const { return pi_; }
    const BernsteinElem& pi_inv_image() const { return pi_inv_; }
    const BernsteinElem& s0_image() const {
        if (m_ < 2) throw std::invalid_argument("s0_image: rank too small");
        return s0_;
    }

    // --- conversion between the presentations ---

    // T_what expanded in the Bernstein basis along a reduced IM word
    BernsteinElem bernstein_of_T(const ExtAffineElem& what) const {
        check_rank(what);
        auto it = bern_cache_.find(what);
        if (it != bern_cache_.end()) return it->second;
        auto [k, word] = im_reduced_word(what);
        BernsteinElem out = one();
        const BernsteinElem& p = k >= 0 ? pi_ : pi_inv_;
        for (long long rep = 0; rep < std::llabs(k); ++rep) out = mul(out, p);
        for (int i : word) out = mul(out, i == 0 ? s0_image() : gen_T(i));
        return bern_cache_.emplace(what, std::move(out)).first->second;
    }

    BernsteinElem bernstein_of_im(const IMElem& a) const {
        BernsteinElem out = zero();
        for (const auto& [k, c] : a.terms) out = out + bernstein_of_T(k).scaled(c);
        return out;
    }

    // --- IM-side arithmetic ---

    IMElem im_one() const {
        IMElem out(m_);
        out.add(ExtAffineElem::identity(m_), LaurentZ(1));
        return out;
    }

    IMElem im_mul_T(const IMElem& a, int i, bool inverse = false) const {
        IMElem out(m_);
        LaurentZ gap = laurent_gap();
        for (const auto& [k, c] : a.terms) {
            ExtAffineElem ks = ext_mul(k, im_generator(m_, i));
            out.add(ks, c);
            if (ks.length() < k.length()) out.add(k, c * gap);
        }
        if (inverse) {
            // T^-1 = T - (q - q^-1)
            IMElem corr = a.scaled(laurent_gap());
            for (const auto& [k, c] : corr.terms) out.add(k, -c);
        }
        return out;
    }

    IMElem im_mul_pi(const IMElem& a, long long k) const {
        IMElem out(m_);
        ExtAffineElem p = pi_pow(m_, k);
        for (const auto& [key, c] : a.terms) out.add(ext_mul(key, p), c);
        return out;
    }

    // right multiplication by the basis element T_what
    IMElem im_mul_basis(const IMElem& a, const ExtAffineElem& what) const {
        auto [k, word] = im_reduced_word(what);
        IMElem out = im_mul_pi(a, k);
        for (int i : word) out = im_mul_T(out, i);
        return out;
    }

    IMElem im_mul(const IMElem& a, const IMElem& b) const {
        IMElem out(m_);
        for (const auto& [k, c] : b.terms) {
            IMElem part = im_mul_basis(a, k).scaled(c);
            for (const auto& [key, v] : part.terms) out.add(key, v);
        }
        return out;
    }

    // Z_j^{+-1} in the IM basis (the inverse bridge), then monomials linearly
    IMElem im_of_bernstein(const BernsteinElem& a) const {
        IMElem out(m_);
        for (const auto& [k, c] : a.terms) {
            IMElem acc = im_one();
            for (int j = 1; j <= m_; ++j)
                for (int rep = 0; rep < std::abs(k.a[j - 1]); ++rep)
                    acc = im_mul(acc, z_im(j, k.a[j - 1] > 0 ? 1 : -1));
            for (int i : reduced_word(k.w)) acc = im_mul_T(acc, i);
            out = out + acc.scaled(c);
        }
        return out;
    }

    // --- bar involution ---

    // bar(T_y) = T_{y^-1}^-1 in the IM basis
    const IMElem& bar_T(const ExtAffineElem& y) const {
        check_rank(y);
        auto it = bar_cache_.find(y);
        if (it != bar_cache_.end()) return it->second;
        auto [k, word] = im_reduced_word(y);
        IMElem out(m_);
        out.add(pi_pow(m_, k), LaurentZ(1));
        for (int i : word) out = im_mul_T(out, i, true);
        return bar_cache_.emplace(y, std::move(out)).first->second;
    }

    IMElem im_bar(const IMElem& a) const {
        IMElem out(m_);
        for (const auto& [k, c] : a.terms) out = out + bar_T(k).scaled(c.bar());
        return out;
    }

    // bar on the Bernstein side: q -> q^-1, T_i -> T_i^-1, pi -> pi
    BernsteinElem bar(const BernsteinElem& a) const {
        BernsteinElem out = zero();
        for (const auto& [k, c] : a.terms) {
            BernsteinElem acc = one();
            for (int j = 1; j <= m_; ++j)
                for (int rep = 0; rep < std::abs(k.a[j - 1]); ++rep)
                    acc = mul(acc, bar_z(j, k.a[j - 1] > 0 ? 1 : -1));
            for (int i : reduced_word(k.w))
                acc = from_engine(eng_.mul_ginv(to_engine(acc), i));
            out = out + acc.scaled(c.bar());
        }
        return out;
    }

    // --- Kazhdan-Lusztig basis ---

    // the unique bar-invariant element c_w = T_w + sum_{y != w} p_y T_y with
    // p_y in q^-1 Z[q^-1]; computed by back-substitution on the bar expansions
    KLBasisElem kl(const ExtAffineElem& what, int maxlen_guard = 10) const {
        check_rank(what);
        if (what.length() > maxlen_guard) throw guard_error("kl: length guard exceeded");

        // closure of {what} under supports of bar expansions
        std::set<ExtAffineElem> support{what};
        std::vector<ExtAffineElem> work{what};
        while (!work.empty()) {
            ExtAffineElem y = work.back();
            work.pop_back();
            for (const auto& [u, c] : bar_T(y).terms)
                if (support.insert(u).second) work.push_back(u);
            if (support.size() > 100000) throw guard_error("kl: support guard exceeded");
        }
        std::vector<ExtAffineElem> order(support.begin(), support.end());
        std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
            int la = a.length(), lb = b.length();
            return la != lb ? la > lb : a < b;
        });

        std::map<ExtAffineElem, LaurentZ> p;
        p[what] = LaurentZ(1);
        for (const auto& y : order) {
            if (y == what) continue;
            LaurentZ beta;
            for (const auto& [z, pz] : p) {
                if (z.length() <= y.length()) continue;
                LaurentZ rcoeff = bar_T(z).terms.count(y) ? bar_T(z).terms.at(y) : LaurentZ();
                if (!rcoeff.is_zero()) beta += pz.bar() * rcoeff;
            }
            if (beta.is_zero()) continue;
            // solve p_y - bar(p_y) = beta with p_y in q^-1 Z[q^-1]
            LaurentZ py = beta.negative_part();
            if (!(py - py.bar() == beta))
                throw std::logic_error("kl: bar system is not antisymmetric");
            if (!py.is_zero()) p[y] = py;
        }

        IMElem expansion(m_);
        for (const auto& [y, c] : p) expansion.add(y, c);
        // the two defining conditions, verified on the result
        IMElem barred(m_);
        for (const auto& [y, c] : p) barred = barred + bar_T(y).scaled(c.bar());
        if (!(barred == expansion)) throw std::logic_error("kl: result is not bar-invariant");
        for (const auto& [y, c] : p)
            if (!(y == what) && !(c == c.negative_part()))
                throw std::logic_error("kl: off-diagonal coefficient not in q^-1 Z[q^-1]");
        return {what, std::move(expansion)};
    }

    const HhatA& engine() const { return eng_; }
    HhatElem<LaurentZ> to_engine(const BernsteinElem& a) const {
        HhatElem<LaurentZ> out(1, m_);
        for (const auto& [k, c] : a.terms) out.add({k.a, triv_, k.w}, c);
        return out;
    }
    BernsteinElem from_engine(const HhatElem<LaurentZ>& e) const {
        BernsteinElem out(m_);
        for (const auto& [k, c] : e.terms) out.add({k.alpha, k.w}, c);
        return out;
    }

private:
    void check_rank(const ExtAffineElem& x) const {
        if (x.n() != m_) throw std::invalid_argument("AffineHecke: size mismatch");
    }

    const IMElem& z_im(int j, int e) const {
        auto key = std::make_pair(j, e);
        auto it = zim_cache_.find(key);
        if (it != zim_cache_.end()) return it->second;
        IMElem out(m_);
        if (j == 1 && e == 1) {
            // Z_1 = T_pi T_{s_{m-1}}^-1 ... T_{s_1}^-1
            out.add(pi_elem(m_), LaurentZ(1));
            for (int i = m_ - 1; i >= 1; --i) out = im_mul_T(out, i, true);
        } else if (j == 1 && e == -1) {
            // Z_1^-1 = T_{s_1} ... T_{s_{m-1}} T_pi^-1
            out = im_one();
            for (int i = 1; i < m_; ++i) out = im_mul_T(out, i);
            out = im_mul_pi(out, -1);
        } else {
            // Z_{j+1}^{+-1} = T_j^{-+1} Z_j^{+-1} T_j^{-+1}
            const IMElem& prev = z_im(j - 1, e);
            IMElem tj(m_);
            tj.add(ExtAffineElem::of_perm(Perm::s(m_, j - 1)), LaurentZ(1));
            IMElem tj_side = e == 1 ? tj : im_mul_T(im_one(), j - 1, true);
            out = im_mul(im_mul(tj_side, prev), tj_side);
        }
        return zim_cache_.emplace(key, std::move(out)).first->second;
    }

    const BernsteinElem& bar_z(int j, int e) const {
        auto key = std::make_pair(j, e);
        auto it = barz_cache_.find(key);
        if (it != barz_cache_.end()) return it->second;
        BernsteinElem out = zero();
        if (j == 1 && e == 1) {
            // bar(Z_1) = bar(pi T_{m-1}^-1 ... T_1^-1) = pi T_{m-1} ... T_1
            out = pi_;
            for (int i = m_ - 1; i >= 1; --i) out = from_engine(eng_.mul_g(to_engine(out), i));
        } else if (j == 1 && e == -1) {
            // bar(Z_1^-1) = T_1^-1 ... T_{m-1}^-1 pi^-1
            out = one();
            for (int i = 1; i < m_; ++i) out = from_engine(eng_.mul_ginv(to_engine(out), i));
            out = mul(out, pi_inv_);
        } else {
            const BernsteinElem& prev = bar_z(j - 1, e);
            BernsteinElem side = e == 1 ? gen_Tinv(j - 1) : gen_T(j - 1);
            out = mul(mul(side, prev), side);
        }
        return barz_cache_.emplace(key, std::move(out)).first->second;
    }

    int m_;
    HhatA eng_;
    ResidueTuple triv_;
    BernsteinElem pi_, pi_inv_, s0_;
    mutable std::map<ExtAffineElem, BernsteinElem> bern_cache_;
    mutable std::map<ExtAffineElem, IMElem> bar_cache_;
    mutable std::map<std::pair<int, int>, IMElem> zim_cache_;
    mutable std::map<std::pair<int, int>, BernsteinElem> barz_cache_;
};

} // namespace ayh
