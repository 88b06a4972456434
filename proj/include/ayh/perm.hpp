#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ayh {

// Permutation of {1..n} in one-line notation. Products compose as functions:
// (u*v)(i) = u(v(i)).
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images) : img_(std::move(images)) {
        std::vector<char> seen(img_.size() + 1, 0);
        for (int v : img_) {
            if (v < 1 || v > static_cast<int>(img_.size()) || seen[v])
                throw std::invalid_argument("Perm: not a permutation");
            seen[v] = 1;
        }
    }

    static Perm identity(int n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        return Perm(std::move(img));
    }

    // adjacent transposition s_i = (i, i+1), 1 <= i <= n-1
    static Perm s(int n, int i) {
        if (i < 1 || i >= n) throw std::invalid_argument("Perm::s: index out of range");
        Perm p = identity(n);
        std::swap(p.img_[i - 1], p.img_[i]);
        return p;
    }

    // transposition (a, b)
    static Perm transposition(int n, int a, int b) {
        Perm p = identity(n);
        std::swap(p.img_[a - 1], p.img_[b - 1]);
        return p;
    }

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (int i = 1; i <= n(); ++i)
            if (img_[i - 1] != i) return false;
        return true;
    }

    friend Perm operator*(const Perm& u, const Perm& v) {
        if (u.n() != v.n()) throw std::invalid_argument("Perm: size mismatch");
        std::vector<int> img(u.n());
        for (int i = 1; i <= u.n(); ++i) img[i - 1] = u(v(i));
        Perm p;
        p.img_ = std::move(img);
        return p;
    }

    Perm inverse() const {
        std::vector<int> img(n());
        for (int i = 1; i <= n(); ++i) img[img_[i - 1] - 1] = i;
        Perm p;
        p.img_ = std::move(img);
        return p;
    }

    // Coxeter length = inversion count
    int length() const {
        int inv = 0;
        for (int i = 0; i < n(); ++i)
            for (int j = i + 1; j < n(); ++j)
                if (img_[i] > img_[j]) ++inv;
        return inv;
    }

    friend bool operator==(const Perm& a, const Perm& b) = default;
    friend auto operator<=>(const Perm& a, const Perm& b) = default;

    std::string str() const {
        std::string out = "[";
        for (int i = 0; i < n(); ++i) {
            if (i) out += ",";
            out += std::to_string(img_[i]);
        }
        return out + "]";
    }

private:
    std::vector<int> img_;
};

// Lexicographically smallest reduced word; letters multiply left to right.
// Picking the smallest left descent at every step realizes the lex minimum.
inline std::vector<int> reduced_word(const Perm& w) {
    std::vector<int> word;
    Perm cur = w;
    while (!cur.is_identity()) {
        Perm inv = cur.inverse();
        int pick = 0;
        for (int i = 1; i < cur.n(); ++i) {
            if (inv(i) > inv(i + 1)) { pick = i; break; } // left descent
        }
        word.push_back(pick);
        cur = Perm::s(cur.n(), pick) * cur;
    }
    return word;
}

inline Perm perm_of_word(int n, const std::vector<int>& word) {
    Perm p = Perm::identity(n);
    for (int i : word) p = p * Perm::s(n, i);
    return p;
}

inline std::vector<Perm> all_perms(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Perm> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

} // namespace ayh
