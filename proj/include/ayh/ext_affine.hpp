#pragma once

#include <cstdlib>
#include <map>

#include "ayh/residue.hpp"

namespace ayh {

struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element t_mu * w of the extended affine Weyl group Z^n x| S_n.
// Multiplication: (mu, u)(nu, v) = (mu + u.nu, uv) with (u.nu)_i = nu_{u^-1(i)}.
struct ExtAffineElem {
    std::vector<long long> trans;
    Perm w;

    ExtAffineElem() = default;
    ExtAffineElem(std::vector<long long> t, Perm p) : trans(std::move(t)), w(std::move(p)) {
        if (static_cast<int>(trans.size()) != w.n())
            throw std::invalid_argument("ExtAffineElem: size mismatch");
    }

    static ExtAffineElem identity(int n) {
        return ExtAffineElem(std::vector<long long>(n, 0), Perm::identity(n));
    }
    static ExtAffineElem translation(std::vector<long long> mu) {
        int n = static_cast<int>(mu.size());
        return ExtAffineElem(std::move(mu), Perm::identity(n));
    }
    static ExtAffineElem of_perm(const Perm& w) {
        return ExtAffineElem(std::vector<long long>(w.n(), 0), w);
    }

    int n() const { return w.n(); }
    bool is_identity() const { return w.is_identity() && pi_exponent() == 0 && length() == 0; }

    // image of Z^n x| S_n -> Z distinguishing the pi-components
    long long pi_exponent() const {
        long long s = 0;
        for (long long v : trans) s = checked_add(s, v);
        return s;
    }

    friend bool operator==(const ExtAffineElem& a, const ExtAffineElem& b) = default;
    friend auto operator<=>(const ExtAffineElem& a, const ExtAffineElem& b) = default;

    // Iwahori-Matsumoto length, validated against the BFS oracle in the tests
    int length() const {
        long long total = 0;
        Perm inv = w.inverse();
        for (int i = 1; i <= n(); ++i)
            for (int j = i + 1; j <= n(); ++j) {
                long long chi = inv(i) > inv(j) ? 1 : 0;
                total += std::llabs(trans[i - 1] - trans[j - 1] - chi);
            }
        if (total > 1'000'000'000) throw std::overflow_error("ExtAffineElem::length");
        return static_cast<int>(total);
    }

    std::string str() const {
        bool trivial_t = true;
        for (long long v : trans) trivial_t &= (v == 0);
        std::string out;
        if (!trivial_t) {
            out += "t[";
            for (int i = 0; i < n(); ++i) {
                if (i) out += ",";
                out += std::to_string(trans[i]);
            }
            out += "]";
        }
        if (!w.is_identity()) {
            for (int i : reduced_word(w)) {
                if (!out.empty()) out += "*";
                out += "s" + std::to_string(i);
            }
        }
        return out.empty() ? "e" : out;
    }
};

inline ExtAffineElem ext_mul(const ExtAffineElem& a, const ExtAffineElem& b) {
    if (a.n() != b.n()) throw std::invalid_argument("ext_mul: size mismatch");
    std::vector<long long> t = a.trans;
    Perm inv = a.w.inverse();
    for (int i = 1; i <= a.n(); ++i) t[i - 1] = checked_add(t[i - 1], b.trans[inv(i) - 1]);
    return ExtAffineElem(std::move(t), a.w * b.w);
}

inline ExtAffineElem ext_inverse(const ExtAffineElem& a) {
    Perm winv = a.w.inverse();
    std::vector<long long> t(a.n());
    for (int i = 1; i <= a.n(); ++i) t[i - 1] = -a.trans[a.w(i) - 1];
    return ExtAffineElem(std::move(t), std::move(winv));
}

// the n-cycle 1 -> 2 -> ... -> n -> 1
inline Perm rotation_cycle(int n) {
    std::vector<int> img(n);
    for (int i = 1; i <= n; ++i) img[i - 1] = i % n + 1;
    return Perm(std::move(img));
}

// pi = t_{e_1} * cycle, the length-zero rotation with pi s_i pi^-1 = s_{i+1 mod n}
inline ExtAffineElem pi_elem(int n) {
    std::vector<long long> t(n, 0);
    t[0] = 1;
    return ExtAffineElem(std::move(t), rotation_cycle(n));
}

inline ExtAffineElem pi_pow(int n, long long k) {
    ExtAffineElem p = k >= 0 ? pi_elem(n) : ext_inverse(pi_elem(n));
    ExtAffineElem out = ExtAffineElem::identity(n);
    for (long long i = 0; i < std::llabs(k); ++i) out = ext_mul(out, p);
    return out;
}

// affine generators: index 0 is s_0 = t_{e_1 - e_n} (1 n), indices 1..n-1 the
// finite transpositions
inline ExtAffineElem im_generator(int n, int i) {
    if (i >= 1 && i < n) return ExtAffineElem::of_perm(Perm::s(n, i));
    if (i == 0 && n >= 2) {
        std::vector<long long> t(n, 0);
        t[0] = 1;
        t[n - 1] = -1;
        return ExtAffineElem(std::move(t), Perm::transposition(n, 1, n));
    }
    throw std::invalid_argument("im_generator: index out of range");
}

// BFS over the affine Weyl group (pi-exponent 0 part); depth equals length.
// Ground truth for the closed-form length.
inline std::map<ExtAffineElem, int> bfs_lengths(int n, int max_len, size_t guard = 2'000'000) {
    std::map<ExtAffineElem, int> dist;
    std::vector<ExtAffineElem> frontier{ExtAffineElem::identity(n)};
    dist[frontier[0]] = 0;
    for (int d = 1; d <= max_len && !frontier.empty(); ++d) {
        std::vector<ExtAffineElem> next;
        for (const auto& x : frontier)
            for (int i = 0; i < n; ++i) {
                if (n == 1) break;
                ExtAffineElem y = ext_mul(x, im_generator(n, i));
                if (dist.emplace(y, d).second) next.push_back(y);
                if (dist.size() > guard) throw guard_error("bfs_lengths: guard exceeded");
            }
        frontier = std::move(next);
    }
    return dist;
}

// all pi^k * x with x in the affine BFS ball of radius max_len and k in
// [pi_min, pi_max]
inline std::vector<ExtAffineElem> enumerate_ball(int n, int max_len, long long pi_min,
                                                 long long pi_max, size_t guard = 2'000'000) {
    auto aff = bfs_lengths(n, max_len, guard);
    std::vector<ExtAffineElem> out;
    for (long long k = pi_min; k <= pi_max; ++k) {
        ExtAffineElem p = pi_pow(n, k);
        for (const auto& [x, d] : aff) {
            out.push_back(ext_mul(p, x));
            if (out.size() > guard) throw guard_error("enumerate_ball: guard exceeded");
        }
    }
    return out;
}

// Greedy reduced word over the IM generators; the pi-power is split off first.
// Returns (k, word) with elem = pi^k s_{i_1} ... s_{i_m}.
inline std::pair<long long, std::vector<int>> im_reduced_word(const ExtAffineElem& elem) {
    long long k = elem.pi_exponent();
    ExtAffineElem cur = ext_mul(pi_pow(elem.n(), -k), elem);
    std::vector<int> word;
    int len = cur.length();
    while (len > 0) {
        bool found = false;
        for (int i = 0; i < elem.n(); ++i) {
            ExtAffineElem nxt = ext_mul(cur, im_generator(elem.n(), i));
            int l = nxt.length();
            if (l == len - 1) {
                word.push_back(i);
                cur = std::move(nxt);
                len = l;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("im_reduced_word: no descent found");
    }
    std::reverse(word.begin(), word.end());
    return {k, word};
}

// Bruhat order: comparable only within one pi-component, decided by the
// subword property on a fixed reduced word of b.
inline bool bruhat_leq(const ExtAffineElem& a, const ExtAffineElem& b, int max_len_guard = 20) {
    if (a.n() != b.n()) throw std::invalid_argument("bruhat_leq: size mismatch");
    if (a.pi_exponent() != b.pi_exponent()) return false;
    auto [k, word] = im_reduced_word(b);
    if (static_cast<int>(word.size()) > max_len_guard)
        throw guard_error("bruhat_leq: ball guard exceeded");
    if (a.length() > b.length()) return false;
    ExtAffineElem target = ext_mul(pi_pow(a.n(), -k), a);
    size_t m = word.size();
    for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
        ExtAffineElem prod = ExtAffineElem::identity(a.n());
        int kept = 0;
        for (size_t j = 0; j < m; ++j)
            if (mask >> j & 1) {
                prod = ext_mul(prod, im_generator(a.n(), word[j]));
                ++kept;
            }
        if (prod.length() == kept && prod == target) return true;
    }
    return false;
}

} // namespace ayh
