#pragma once

// Independent brute-force rewriter for the idempotent presentation, used only
// as a test oracle. It deliberately takes a different route than the library
// engine: words are consumed right to left by LEFT multiplication, the X-past-g
// commutation is the closed geometric-sum identity
//   g_i X^b 1_lam = X^{s_i b} g_i 1_lam
//                   + (q - q^-1) [lam_i = lam_{i+1}] ((X^b - X^{s_i b})/(1 - X_i X_{i+1}^-1)) 1_lam
// and the quadratic relation is applied on the left.

#include "ayh/hhat.hpp"

namespace oracle {

using ayh::GenLetter;
using ayh::GenWord;
using ayh::HhatAlgebra;
using ayh::HhatElem;
using ayh::HKey;

template <class C>
HhatElem<C> oracle_unit(const HhatAlgebra<C>& A) {
    HhatElem<C> out(A.r(), A.n());
    for (const auto& lam : A.tuples())
        out.add({A.zero_alpha(), lam, ayh::Perm::identity(A.n())}, ayh::CoeffOps<C>::one(A.r()));
    return out;
}

// (X^b - X^{s_i b}) / (1 - X_i X_{i+1}^-1) as a list of exponent vectors with
// signs; always a Laurent polynomial by the geometric sum
inline std::vector<std::pair<std::vector<int>, int>> geom_quotient(const std::vector<int>& beta,
                                                                   int i) {
    std::vector<std::pair<std::vector<int>, int>> out;
    int d = beta[i - 1] - beta[i];
    if (d > 0) {
        // -(Y^-1 + ... + Y^-d) * X^b with Y = X_i X_{i+1}^-1
        for (int t = 1; t <= d; ++t) {
            auto g = beta;
            g[i - 1] -= t;
            g[i] += t;
            out.push_back({std::move(g), -1});
        }
    } else if (d < 0) {
        // (1 + Y + ... + Y^{|d|-1}) * X^b
        for (int t = 0; t < -d; ++t) {
            auto g = beta;
            g[i - 1] += t;
            g[i] -= t;
            out.push_back({std::move(g), +1});
        }
    }
    return out;
}

template <class C>
HhatElem<C> left_mul_g(const HhatAlgebra<C>& A, int i, const HhatElem<C>& e) {
    HhatElem<C> out(A.r(), A.n());
    ayh::Perm si = ayh::Perm::s(A.n(), i);
    C gap = A.gap();
    for (const auto& [k, c] : e.terms) {
        std::vector<int> beta_s = k.alpha;
        std::swap(beta_s[i - 1], beta_s[i]);
        ayh::ResidueTuple lam_s = ayh::act_s(i, k.lam);
        bool stab = k.lam[i] == k.lam[i + 1];

        // X^{s_i b} 1_{s_i lam} (g_i g_v)
        ayh::Perm sv = si * k.w;
        if (sv.length() > k.w.length()) {
            out.add({beta_s, lam_s, sv}, c);
        } else {
            out.add({beta_s, lam_s, sv}, c);
            if (stab) out.add({beta_s, lam_s, k.w}, c * gap);
        }
        // geometric correction, only when s_i fixes lam
        if (stab)
            for (const auto& [gamma, sign] : geom_quotient(k.alpha, i)) {
                C coeff = c * gap;
                if (sign < 0) coeff = -coeff;
                out.add({gamma, k.lam, k.w}, coeff);
            }
    }
    return out;
}

template <class C>
HhatElem<C> left_mul_ehat(const HhatAlgebra<C>& A, int i, const HhatElem<C>& e) {
    HhatElem<C> out(A.r(), A.n());
    for (const auto& [k, c] : e.terms)
        if (k.lam[i] == k.lam[i + 1]) out.add(k, c);
    return out;
}

template <class C>
HhatElem<C> oracle_nf(const HhatAlgebra<C>& A, const GenWord& word) {
    HhatElem<C> e = oracle_unit(A);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const GenLetter& letter = *it;
        switch (letter.kind) {
            case GenLetter::G:
                e = left_mul_g(A, letter.index, e);
                break;
            case GenLetter::GInv:
                e = left_mul_g(A, letter.index, e) -
                    left_mul_ehat(A, letter.index, e).scaled(A.gap());
                break;
            case GenLetter::Idem: {
                HhatElem<C> out(A.r(), A.n());
                for (const auto& [k, c] : e.terms)
                    if (k.lam == letter.lam) out.add(k, c);
                e = std::move(out);
                break;
            }
            case GenLetter::X: {
                HhatElem<C> out(A.r(), A.n());
                for (const auto& [k, c] : e.terms) {
                    auto alpha = k.alpha;
                    alpha[letter.index - 1] += letter.exp;
                    out.add({std::move(alpha), k.lam, k.w}, c);
                }
                e = std::move(out);
                break;
            }
        }
    }
    return e;
}

} // namespace oracle
