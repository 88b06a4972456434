#pragma once

#include "ayh/young.hpp"

namespace ayh {

struct EKey {
    ResidueTuple l1, l2;

    friend bool operator==(const EKey& a, const EKey& b) = default;
    friend auto operator<=>(const EKey& a, const EKey& b) = default;
};

// Block-indexed family over Gamma = {(l1, l2) : same orbit}; block (l1, l2)
// lives in the corner 1_{l1^0} Hhat 1_{l2^0}. Absent blocks are zero.
struct EElement {
    int r = 1;
    int n = 1;
    std::map<EKey, HhatElem<LaurentZ>> blocks;

    EElement() = default;
    EElement(int r_, int n_) : r(r_), n(n_) {}

    bool is_zero() const { return blocks.empty(); }

    void add_block(const EKey& key, const HhatElem<LaurentZ>& v) {
        if (v.is_zero()) return;
        ResidueTuple rep1 = orbit_rep(key.l1).first;
        if (!(rep1 == orbit_rep(key.l2).first))
            throw std::invalid_argument("EElement: block key not in Gamma");
        for (const auto& [k, c] : v.terms)
            if (!(k.lam == rep1) || !stabilizes(k.w, rep1))
                throw std::invalid_argument("EElement: block value not in the corner subalgebra");
        auto it = blocks.find(key);
        if (it == blocks.end()) {
            blocks.emplace(key, v);
        } else {
            it->second += v;
            if (it->second.is_zero()) blocks.erase(it);
        }
    }

    friend EElement operator+(const EElement& a, const EElement& b) {
        check_compat(a, b);
        EElement out = a;
        for (const auto& [k, v] : b.blocks) out.add_block(k, v);
        return out;
    }
    friend EElement operator-(const EElement& a, const EElement& b) {
        check_compat(a, b);
        EElement out = a;
        for (const auto& [k, v] : b.blocks) out.add_block(k, -v);
        return out;
    }
    EElement scaled(const LaurentZ& c) const {
        EElement out(r, n);
        for (const auto& [k, v] : blocks) out.add_block(k, v.scaled(c));
        return out;
    }
    friend bool operator==(const EElement& a, const EElement& b) {
        return a.r == b.r && a.n == b.n && a.blocks == b.blocks;
    }

    static void check_compat(const EElement& a, const EElement& b) {
        if (a.r != b.r || a.n != b.n) throw std::invalid_argument("EElement: parameter mismatch");
    }

    // block-matrix rendering grouped by orbit
    std::string str() const {
        if (blocks.empty()) return "0";
        std::map<ResidueTuple, std::vector<const std::pair<const EKey, HhatElem<LaurentZ>>*>> by_orbit;
        for (const auto& kv : blocks) by_orbit[orbit_rep(kv.first.l1).first].push_back(&kv);
        std::string out;
        for (const auto& [rep, entries] : by_orbit) {
            out += "orbit " + rep.str() + ":\n";
            for (const auto* kv : entries)
                out += "  (" + kv->first.l1.str() + "," + kv->first.l2.str() +
                       "): " + kv->second.str() + "\n";
        }
        return out;
    }
};

// sorting word for a residue tuple together with the corresponding products
// tau = g_{s_1} ... g_{s_k} and tau' reversed; every step of the word changes
// the tuple, which is what makes the sandwich identities collapse
struct TauPair {
    ResidueTuple lam;
    std::vector<int> word;
    HhatElem<LaurentZ> tau;
    HhatElem<LaurentZ> tau_prime;
};

class MatrixModel {
public:
    MatrixModel(int r, int n) : r_(r), n_(n), A_(r, n) {
        for (const auto& rep : sorted_reps(r, n)) youngs_.emplace(rep, YoungHecke(rep));
    }

    int r() const { return r_; }
    int n() const { return n_; }
    const HhatA& algebra() const { return A_; }
    const YoungHecke& young(const ResidueTuple& rep) const {
        auto it = youngs_.find(rep);
        if (it == youngs_.end()) throw std::invalid_argument("young: not a sorted representative");
        return it->second;
    }

    EElement zero() const { return EElement(r_, n_); }

    EElement unit() const {
        EElement out(r_, n_);
        for (const auto& lam : A_.tuples()) {
            ResidueTuple rep = orbit_rep(lam).first;
            out.add_block({lam, lam}, A_.idem(rep));
        }
        return out;
    }

    EElement e_mul(const EElement& x, const EElement& y) const {
        check(x);
        check(y);
        EElement out(r_, n_);
        for (const auto& [kx, vx] : x.blocks)
            for (const auto& [ky, vy] : y.blocks) {
                if (!(kx.l2 == ky.l1)) continue;
                out.add_block({kx.l1, ky.l2}, A_.mul(vx, vy));
            }
        return out;
    }

    // --- tau words and the isomorphism pair ---

    // canonical word from a stable selection sort: repeatedly bubble the
    // leftmost entry that belongs at the first unsettled position
    TauPair make_tau(const ResidueTuple& lam) const {
        std::vector<int> cur = lam.entries();
        std::vector<int> target = cur;
        std::sort(target.begin(), target.end());
        std::vector<int> applied; // first applied first
        for (int pos = 0; pos < lam.n(); ++pos) {
            if (cur[pos] == target[pos]) continue;
            int j = pos + 1;
            while (cur[j] != target[pos]) ++j;
            for (int i = j - 1; i >= pos; --i) {
                std::swap(cur[i], cur[i + 1]);
                applied.push_back(i + 1);
            }
        }
        std::vector<int> word(applied.rbegin(), applied.rend());
        return make_tau_with_word(lam, word);
    }

    // accepts any valid sorting word (lam0 = s_1(s_2(...(s_k lam)))) with a
    // strict change at every step
    TauPair make_tau_with_word(const ResidueTuple& lam, const std::vector<int>& word) const {
        ResidueTuple cur = lam;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            ResidueTuple next = act_s(*it, cur);
            if (next == cur) throw std::invalid_argument("make_tau: word step fixes the tuple");
            cur = next;
        }
        if (!(cur == orbit_rep(lam).first))
            throw std::invalid_argument("make_tau: word does not sort the tuple");

        TauPair out{lam, word, A_.unit(), A_.unit()};
        for (int i : word) out.tau = A_.mul_g(out.tau, i);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            out.tau_prime = A_.mul_g(out.tau_prime, *it);

        // the sandwich identities, verified at construction
        ResidueTuple rep = orbit_rep(lam).first;
        HhatElem<LaurentZ> lhs1 =
            A_.mul(A_.mul(A_.idem(rep), out.tau), out.tau_prime);
        HhatElem<LaurentZ> lhs2 =
            A_.mul(A_.mul(A_.idem(lam), out.tau_prime), out.tau);
        if (!(lhs1 == A_.idem(rep)) || !(lhs2 == A_.idem(lam)))
            throw std::logic_error("make_tau: sandwich identities failed");
        return out;
    }

    const TauPair& tau(const ResidueTuple& lam) const {
        auto it = taus_.find(lam);
        if (it != taus_.end()) return it->second;
        return taus_.emplace(lam, make_tau(lam)).first->second;
    }

    using TauTable = std::map<ResidueTuple, TauPair>;

    // Psi(h)_{l1,l2} = tau_{l1} 1_{l1} h 1_{l2} tau'_{l2}
    EElement psi(const HhatElem<LaurentZ>& h, const TauTable* table = nullptr) const {
        if (h.r != r_ || h.n != n_) throw std::invalid_argument("psi: parameter mismatch");
        EElement out(r_, n_);
        for (const auto& l1 : A_.tuples()) {
            const TauPair& t1 = pick(table, l1);
            HhatElem<LaurentZ> left = A_.mul(A_.mul(t1.tau, A_.idem(l1)), h);
            if (left.is_zero()) continue;
            for (const auto& l2 : A_.tuples()) {
                if (!(orbit_rep(l1).first == orbit_rep(l2).first)) continue;
                const TauPair& t2 = pick(table, l2);
                HhatElem<LaurentZ> block =
                    A_.mul(A_.mul(left, A_.idem(l2)), t2.tau_prime);
                out.add_block({l1, l2}, block);
            }
        }
        return out;
    }

    // Phi(x) = sum tau'_{l1} 1_{l1^0} x_{l1,l2} 1_{l2^0} tau_{l2}
    HhatElem<LaurentZ> phi_map(const EElement& x, const TauTable* table = nullptr) const {
        check(x);
        HhatElem<LaurentZ> out(r_, n_);
        for (const auto& [k, v] : x.blocks) {
            const TauPair& t1 = pick(table, k.l1);
            const TauPair& t2 = pick(table, k.l2);
            out += A_.mul(A_.mul(t1.tau_prime, v), t2.tau);
        }
        return out;
    }

    // --- bases ---

    bool in_c(const ResidueTuple& l1, const ResidueTuple& l2, const ExtAffineElem& what) const {
        ResidueTuple rep = orbit_rep(l1).first;
        return rep == orbit_rep(l2).first && what.n() == n_ && stabilizes(what.w, rep);
    }

    EElement x_basis(const ResidueTuple& l1, const ResidueTuple& l2,
                     const ExtAffineElem& what) const {
        if (!in_c(l1, l2, what)) throw std::invalid_argument("x_basis: triple not in C");
        EElement out(r_, n_);
        out.add_block({l1, l2}, young(orbit_rep(l1).first).g_basis(what));
        return out;
    }

    EElement c_basis(const ResidueTuple& l1, const ResidueTuple& l2, const ExtAffineElem& what,
                     int len_guard = 10) const {
        if (!in_c(l1, l2, what)) throw std::invalid_argument("c_basis: triple not in C");
        EElement out(r_, n_);
        out.add_block({l1, l2}, young(orbit_rep(l1).first).c_basis_block(what, len_guard));
        return out;
    }

    // blockwise bar, transported through phi on each corner
    EElement bar(const EElement& x) const {
        check(x);
        EElement out(r_, n_);
        for (const auto& [k, v] : x.blocks)
            out.add_block(k, young(orbit_rep(k.l1).first).bar_block(v));
        return out;
    }

    // the A-linear involution with i(x^{l1,l2;w}) = x^{l2,l1;w^-1}
    EElement invol(const EElement& x) const {
        check(x);
        EElement out(r_, n_);
        for (const auto& [k, v] : x.blocks) {
            const YoungHecke& Y = young(orbit_rep(k.l1).first);
            for (const auto& [what, c] : Y.im_coords(v))
                out.add_block({k.l2, k.l1}, Y.g_basis(ext_inverse(what)).scaled(c));
        }
        return out;
    }

    // coordinates of a block in the x-basis, for the triangular solves
    std::map<ExtAffineElem, LaurentZ> x_coords(const EElement& x, const EKey& key) const {
        auto it = x.blocks.find(key);
        if (it == x.blocks.end()) return {};
        return young(orbit_rep(key.l1).first).im_coords(it->second);
    }

private:
    const TauPair& pick(const TauTable* table, const ResidueTuple& lam) const {
        if (table) {
            auto it = table->find(lam);
            if (it == table->end()) throw std::invalid_argument("psi/phi: tau table missing tuple");
            return it->second;
        }
        return tau(lam);
    }

    void check(const EElement& x) const {
        if (x.r != r_ || x.n != n_) throw std::invalid_argument("MatrixModel: parameter mismatch");
    }

    int r_;
    int n_;
    HhatA A_;
    std::map<ResidueTuple, YoungHecke> youngs_;
    mutable std::map<ResidueTuple, TauPair> taus_;
};

// one row per sorted representative: (lam0, orbit size, block sizes)
inline std::vector<std::tuple<ResidueTuple, long long, std::vector<int>>> block_decompose(int r,
                                                                                          int n) {
    std::vector<std::tuple<ResidueTuple, long long, std::vector<int>>> out;
    for (const auto& rep : sorted_reps(r, n)) {
        auto [rep2, size] = orbit_rep(rep);
        out.emplace_back(rep, size, value_counts(rep));
    }
    return out;
}

// sum over orbits of n_lam^2 * prod n_i! equals r^n n!
inline bool rank_identity_holds(int r, int n) {
    long long total = 0;
    for (const auto& [rep, n_lam, counts] : block_decompose(r, n)) {
        long long term = checked_mul(n_lam, n_lam);
        for (int c : counts) term = checked_mul(term, factorial(c));
        total = checked_add(total, term);
    }
    long long expected = factorial(n);
    for (int i = 0; i < n; ++i) expected = checked_mul(expected, r);
    return total == expected;
}

} // namespace ayh
