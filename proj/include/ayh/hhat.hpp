#pragma once

#include <tuple>

#include "ayh/cyclotomic.hpp"
#include "ayh/ext_affine.hpp"
#include "ayh/report.hpp"
#include "ayh/residue.hpp"

namespace ayh {

template <class C>
struct CoeffOps;

template <>
struct CoeffOps<LaurentZ> {
    static LaurentZ one(int) { return LaurentZ(1); }
    static LaurentZ from_laurent(int, const LaurentZ& a) { return a; }
};

template <>
struct CoeffOps<Cyclotomic> {
    static Cyclotomic one(int r) { return Cyclotomic::one(r); }
    static Cyclotomic from_laurent(int r, const LaurentZ& a) { return Cyclotomic::from_laurent(r, a); }
};

// PBW monomial X^alpha 1_lambda g_w
struct HKey {
    std::vector<int> alpha;
    ResidueTuple lam;
    Perm w;

    friend bool operator==(const HKey& a, const HKey& b) = default;
    friend auto operator<=>(const HKey& a, const HKey& b) = default;

    bool is_finite() const {
        for (int a : alpha)
            if (a != 0) return false;
        return true;
    }

    int x_degree() const {
        int d = 0;
        for (int a : alpha) d += a;
        return d;
    }

    std::string str() const {
        std::string out;
        bool zero_alpha = is_finite();
        if (!zero_alpha) {
            out += "X[";
            for (size_t i = 0; i < alpha.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(alpha[i]);
            }
            out += "] ";
        }
        out += "1" + lam.str();
        if (!w.is_identity()) out += " g" + w.str();
        return out;
    }
};

// Element of the idempotent presentation in normal form: a finitely supported
// map from PBW monomials to coefficients. Equality is map equality.
template <class C>
struct HhatElem {
    int r = 1;
    int n = 1;
    std::map<HKey, C> terms;

    HhatElem() = default;
    HhatElem(int r_, int n_) : r(r_), n(n_) {}

    bool is_zero() const { return terms.empty(); }

    void add(const HKey& key, const C& c) {
        if (c == C{}) return;
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == C{}) terms.erase(it);
        }
    }

    friend HhatElem operator+(const HhatElem& a, const HhatElem& b) {
        check_compat(a, b);
        HhatElem out = a;
        for (const auto& [k, c] : b.terms) out.add(k, c);
        return out;
    }
    friend HhatElem operator-(const HhatElem& a, const HhatElem& b) {
        check_compat(a, b);
        HhatElem out = a;
        for (const auto& [k, c] : b.terms) out.add(k, -c);
        return out;
    }
    HhatElem operator-() const {
        HhatElem out(r, n);
        for (const auto& [k, c] : terms) out.terms.emplace(k, -c);
        return out;
    }
    HhatElem& operator+=(const HhatElem& o) { return *this = *this + o; }
    HhatElem& operator-=(const HhatElem& o) { return *this = *this - o; }

    HhatElem scaled(const C& c) const {
        HhatElem out(r, n);
        if (c == C{}) return out;
        for (const auto& [k, v] : terms) out.add(k, v * c);
        return out;
    }

    friend bool operator==(const HhatElem& a, const HhatElem& b) {
        return a.r == b.r && a.n == b.n && a.terms == b.terms;
    }

    bool is_finite_part() const {
        for (const auto& [k, c] : terms)
            if (!k.is_finite()) return false;
        return true;
    }

    static void check_compat(const HhatElem& a, const HhatElem& b) {
        if (a.r != b.r || a.n != b.n) throw std::invalid_argument("HhatElem: parameter mismatch");
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

// generator word over {g_i, g_i^-1, 1_lambda, X_j, X_j^-1}
struct GenLetter {
    enum Kind { G, GInv, Idem, X } kind = G;
    int index = 1; // i for g-letters, j for X-letters
    int exp = 1;   // X-letters only, +1 or -1
    ResidueTuple lam;

    static GenLetter g(int i) { return {G, i, 1, {}}; }
    static GenLetter ginv(int i) { return {GInv, i, 1, {}}; }
    static GenLetter idem(ResidueTuple t) { return {Idem, 0, 1, std::move(t)}; }
    static GenLetter x(int j, int e = 1) { return {X, j, e, {}}; }
};

using GenWord = std::vector<GenLetter>;

// The algebra context: fixes (r, n), owns the rewriting caches. All element
// values are immutable; methods are const and yield new elements.
template <class C>
class HhatAlgebra {
public:
    using Elem = HhatElem<C>;

    HhatAlgebra(int r, int n) : r_(r), n_(n), tuples_(all_tuples(r, n)) {
        if (r < 1 || n < 1) throw std::invalid_argument("HhatAlgebra: r, n must be positive");
    }

    int r() const { return r_; }
    int n() const { return n_; }
    const std::vector<ResidueTuple>& tuples() const { return tuples_; }

    Elem zero() const { return Elem(r_, n_); }

    Elem unit() const {
        Elem out(r_, n_);
        for (const auto& lam : tuples_)
            out.add({zero_alpha(), lam, Perm::identity(n_)}, CoeffOps<C>::one(r_));
        return out;
    }

    Elem monomial(std::vector<int> alpha, const ResidueTuple& lam, const Perm& w) const {
        Elem out(r_, n_);
        out.add({std::move(alpha), lam, w}, CoeffOps<C>::one(r_));
        return out;
    }

    Elem idem(const ResidueTuple& lam) const {
        return monomial(zero_alpha(), lam, Perm::identity(n_));
    }

    // g_i as an element: sum_lambda 1_lambda g_i
    Elem gen_g(int i) const { return mul_g(unit(), i); }
    Elem gen_x(int j, int e = 1) const { return mul_x(unit(), j, e); }

    // hat{e}_i = sum over lambda with lambda_i = lambda_{i+1}
    Elem ehat(int i) const {
        Elem out(r_, n_);
        for (const auto& lam : tuples_)
            if (lam[i] == lam[i + 1])
                out.add({zero_alpha(), lam, Perm::identity(n_)}, CoeffOps<C>::one(r_));
        return out;
    }

    // --- right multiplication by generators of the presentation ---

    Elem mul_g(const Elem& a, int i) const {
        check(a);
        check_gen(i);
        Elem out(r_, n_);
        Perm si = Perm::s(n_, i);
        for (const auto& [k, c] : a.terms) {
            Perm ws = k.w * si;
            out.add({k.alpha, k.lam, ws}, c);
            if (ws.length() < k.w.length() && k.lam[k.w(i)] == k.lam[k.w(i + 1)])
                out.add(k, c * gap());
        }
        return out;
    }

    Elem mul_ginv(const Elem& a, int i) const {
        // g_i^-1 = g_i - (q - q^-1) hat{e}_i
        return mul_g(a, i) - mul_ehat(a, i).scaled(gap());
    }

    Elem mul_ehat(const Elem& a, int i) const {
        check(a);
        check_gen(i);
        Elem out(r_, n_);
        for (const auto& [k, c] : a.terms)
            if (k.lam[k.w(i)] == k.lam[k.w(i + 1)]) out.add(k, c);
        return out;
    }

    Elem mul_idem(const Elem& a, const ResidueTuple& mu) const {
        check(a);
        Elem out(r_, n_);
        for (const auto& [k, c] : a.terms)
            if (act(k.w, mu) == k.lam) out.add(k, c);
        return out;
    }

    Elem mul_x(const Elem& a, int j, int e) const {
        check(a);
        if (j < 1 || j > n_) throw std::invalid_argument("mul_x: index out of range");
        if (e != 1 && e != -1) throw std::invalid_argument("mul_x: exponent must be +-1");
        Elem out(r_, n_);
        for (const auto& [k, c] : a.terms) {
            if (k.w.is_identity()) {
                auto alpha = k.alpha;
                alpha[j - 1] += e;
                out.add({std::move(alpha), k.lam, k.w}, c);
                continue;
            }
            const Elem& pushed = push_x(k.w, j, e);
            for (const auto& [pk, pc] : pushed.terms) {
                if (!(pk.lam == k.lam)) continue;
                auto alpha = k.alpha;
                for (int t = 0; t < n_; ++t) alpha[t] += pk.alpha[t];
                out.add({std::move(alpha), k.lam, pk.w}, c * pc);
            }
        }
        return out;
    }

    // product in normal form, extending nf bilinearly over the PBW monomials
    Elem mul(const Elem& a, const Elem& b) const {
        check(a);
        check(b);
        Elem out(r_, n_);
        for (const auto& [k, c] : b.terms) {
            Elem t = a;
            for (int j = 1; j <= n_; ++j) {
                int e = k.alpha[j - 1] >= 0 ? 1 : -1;
                for (int rep = 0; rep < std::abs(k.alpha[j - 1]); ++rep) t = mul_x(t, j, e);
            }
            t = mul_idem(t, k.lam);
            for (int i : reduced_word(k.w)) t = mul_g(t, i);
            out += t.scaled(c);
        }
        return out;
    }

    Elem x_power(int j, int m) const {
        if (j < 1 || j > n_) throw std::invalid_argument("x_power: index out of range");
        Elem t = unit();
        for (int rep = 0; rep < std::abs(m); ++rep) t = mul_x(t, j, m >= 0 ? 1 : -1);
        return t;
    }

    // normal form of an arbitrary generator word
    Elem nf(const GenWord& word) const {
        Elem t = unit();
        for (const auto& letter : word) {
            switch (letter.kind) {
                case GenLetter::G: t = mul_g(t, letter.index); break;
                case GenLetter::GInv: t = mul_ginv(t, letter.index); break;
                case GenLetter::Idem:
                    if (letter.lam.r() != r_ || letter.lam.n() != n_)
                        throw std::invalid_argument("nf: idempotent tuple has wrong parameters");
                    t = mul_idem(t, letter.lam);
                    break;
                case GenLetter::X:
                    for (int rep = 0; rep < std::abs(letter.exp); ++rep)
                        t = mul_x(t, letter.index, letter.exp >= 0 ? 1 : -1);
                    break;
            }
        }
        return t;
    }

    C gap() const { return CoeffOps<C>::from_laurent(r_, laurent_gap()); }

    std::vector<int> zero_alpha() const { return std::vector<int>(n_, 0); }

private:
    void check(const Elem& a) const {
        if (a.r != r_ || a.n != n_) throw std::invalid_argument("HhatAlgebra: parameter mismatch");
    }
    void check_gen(int i) const {
        if (i < 1 || i >= n_) throw std::invalid_argument("generator index out of range");
    }

    // g_w X_j^e expanded in the PBW basis, summed over every idempotent.
    // Recursion peels the last letter of the canonical reduced word and uses
    // the commutations forced by X_{i+1} = g_i X_i g_i and g_i^-1.
    const Elem& push_x(const Perm& w, int j, int e) const {
        auto key = std::make_tuple(w, j, e);
        auto it = push_cache_.find(key);
        if (it != push_cache_.end()) return it->second;

        Elem result(r_, n_);
        if (w.is_identity()) {
            auto alpha = zero_alpha();
            alpha[j - 1] = e;
            for (const auto& lam : tuples_)
                result.add({alpha, lam, Perm::identity(n_)}, CoeffOps<C>::one(r_));
        } else {
            auto word = reduced_word(w);
            int m = word.back();
            Perm u = w * Perm::s(n_, m);
            if (j != m && j != m + 1) {
                result = mul_g(push_x(u, j, e), m);
            } else if (e == 1 && j == m) {
                // g_m X_m = X_{m+1} g_m - (q - q^-1) X_{m+1} e_m
                result = mul_g(push_x(u, m + 1, 1), m) -
                         mul_ehat(push_x(u, m + 1, 1), m).scaled(gap());
            } else if (e == 1 && j == m + 1) {
                // g_m X_{m+1} = X_m g_m + (q - q^-1) X_{m+1} e_m
                result = mul_g(push_x(u, m, 1), m) +
                         mul_ehat(push_x(u, m + 1, 1), m).scaled(gap());
            } else if (e == -1 && j == m) {
                // g_m X_m^-1 = X_{m+1}^-1 g_m + (q - q^-1) X_m^-1 e_m
                result = mul_g(push_x(u, m + 1, -1), m) +
                         mul_ehat(push_x(u, m, -1), m).scaled(gap());
            } else {
                // g_m X_{m+1}^-1 = X_m^-1 g_m - (q - q^-1) X_m^-1 e_m
                result = mul_g(push_x(u, m, -1), m) -
                         mul_ehat(push_x(u, m, -1), m).scaled(gap());
            }
        }
        return push_cache_.emplace(std::move(key), std::move(result)).first->second;
    }

    int r_;
    int n_;
    std::vector<ResidueTuple> tuples_;
    mutable std::map<std::tuple<Perm, int, int>, Elem> push_cache_;
};

// every defining relation of the idempotent presentation, evaluated as a
// normal-form identity; includes the derived commutations
template <class C>
std::vector<RelationCheck> hhat_relation_suite(const HhatAlgebra<C>& A) {
    if (factorial(A.n()) * static_cast<long long>(A.tuples().size()) > 20000)
        throw guard_error("hhat_relation_suite: size guard exceeded");
    std::vector<RelationCheck> out;
    auto add = [&](const std::string& name, const GenWord& lhs, const GenWord& rhs) {
        out.push_back({name, A.nf(lhs) == A.nf(rhs)});
    };
    auto eq = [&](const std::string& name, const HhatElem<C>& lhs, const HhatElem<C>& rhs) {
        out.push_back({name, lhs == rhs});
    };
    int n = A.n();
    using L = GenLetter;

    for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            add("g" + std::to_string(i) + " g" + std::to_string(j) + " commute",
                {L::g(i), L::g(j)}, {L::g(j), L::g(i)});
    for (int i = 1; i + 1 < n; ++i)
        add("braid g" + std::to_string(i), {L::g(i), L::g(i + 1), L::g(i)},
            {L::g(i + 1), L::g(i), L::g(i + 1)});
    for (int i = 1; i < n; ++i)
        for (const auto& lam : A.tuples())
            add("g" + std::to_string(i) + " 1" + lam.str(), {L::g(i), L::idem(lam)},
                {L::idem(act_s(i, lam)), L::g(i)});
    {
        HhatElem<C> sum = A.zero();
        for (const auto& lam : A.tuples()) sum += A.idem(lam);
        eq("sum of idempotents is 1", sum, A.unit());
    }
    for (const auto& lam : A.tuples())
        for (const auto& mu : A.tuples()) {
            auto prod = A.nf({L::idem(lam), L::idem(mu)});
            out.push_back({"1" + lam.str() + " 1" + mu.str(),
                           prod == (lam == mu ? A.idem(lam) : A.zero())});
        }
    for (int i = 1; i < n; ++i) {
        HhatElem<C> rhs = A.unit();
        for (const auto& lam : A.tuples())
            if (act_s(i, lam) == lam) rhs += A.nf({L::g(i), L::idem(lam)}).scaled(A.gap());
        eq("quadratic g" + std::to_string(i), A.nf({L::g(i), L::g(i)}), rhs);
    }
    add("X1 X1^-1", {L::x(1, 1), L::x(1, -1)}, {});
    add("X1^-1 X1", {L::x(1, -1), L::x(1, 1)}, {});
    if (n >= 2)
        add("g1 X1 g1 X1 = X1 g1 X1 g1", {L::g(1), L::x(1), L::g(1), L::x(1)},
            {L::x(1), L::g(1), L::x(1), L::g(1)});
    for (int i = 2; i < n; ++i)
        add("g" + std::to_string(i) + " X1 commute", {L::g(i), L::x(1)}, {L::x(1), L::g(i)});
    for (const auto& lam : A.tuples())
        add("X1 1" + lam.str(), {L::x(1), L::idem(lam)}, {L::idem(lam), L::x(1)});

    // consequences of the defining relations
    for (int j = 1; j <= n; ++j)
        for (const auto& lam : A.tuples())
            add("X" + std::to_string(j) + " 1" + lam.str() + " commute",
                {L::x(j), L::idem(lam)}, {L::idem(lam), L::x(j)});
    for (int i = 1; i < n; ++i)
        for (int j = 1; j <= n; ++j)
            if (j != i && j != i + 1)
                add("g" + std::to_string(i) + " X" + std::to_string(j) + " commute",
                    {L::g(i), L::x(j)}, {L::x(j), L::g(i)});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            add("X" + std::to_string(i) + " X" + std::to_string(j) + " commute",
                {L::x(i), L::x(j)}, {L::x(j), L::x(i)});
    return out;
}

using HhatA = HhatAlgebra<LaurentZ>;   // over A = Z[q, q^-1]
using HhatR = HhatAlgebra<Cyclotomic>; // extended coefficients

} // namespace ayh
