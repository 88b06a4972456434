#pragma once

#include <algorithm>
#include <set>

#include "ayh/perm.hpp"
#include "ayh/rational.hpp"

namespace ayh {

// n-tuple of r-th roots of unity, stored by index: entry k encodes z_k = z^(k-1).
class ResidueTuple {
public:
    ResidueTuple() = default;
    ResidueTuple(int r, std::vector<int> entries) : r_(r), e_(std::move(entries)) {
        for (int v : e_)
            if (v < 1 || v > r_) throw std::invalid_argument("ResidueTuple: entry out of range");
    }

    int r() const { return r_; }
    int n() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[i - 1]; }
    const std::vector<int>& entries() const { return e_; }

    friend bool operator==(const ResidueTuple& a, const ResidueTuple& b) = default;
    friend auto operator<=>(const ResidueTuple& a, const ResidueTuple& b) = default;

    std::string str() const {
        std::string out = "(";
        for (int i = 0; i < n(); ++i) {
            if (i) out += ",";
            out += std::to_string(e_[i]);
        }
        return out + ")";
    }

private:
    int r_ = 1;
    std::vector<int> e_;
};

// (w.lambda)_i = lambda_{w^{-1}(i)}
inline ResidueTuple act(const Perm& w, const ResidueTuple& lam) {
    if (w.n() != lam.n()) throw std::invalid_argument("act: size mismatch");
    Perm inv = w.inverse();
    std::vector<int> e(lam.n());
    for (int i = 1; i <= lam.n(); ++i) e[i - 1] = lam[inv(i)];
    return ResidueTuple(lam.r(), std::move(e));
}

inline ResidueTuple act_s(int i, const ResidueTuple& lam) {
    std::vector<int> e = lam.entries();
    std::swap(e[i - 1], e[i]);
    return ResidueTuple(lam.r(), std::move(e));
}

// generators {i : lambda_i = lambda_{i+1}} of the stabilizer; they generate
// the Young subgroup W_lambda when lambda is sorted
inline std::vector<int> young_stabilizer(const ResidueTuple& lam) {
    std::vector<int> gens;
    for (int i = 1; i < lam.n(); ++i)
        if (lam[i] == lam[i + 1]) gens.push_back(i);
    return gens;
}

inline bool stabilizes(const Perm& w, const ResidueTuple& lam) { return act(w, lam) == lam; }

// value counts (n_1, ..., n_r)
inline std::vector<int> value_counts(const ResidueTuple& lam) {
    std::vector<int> cnt(lam.r(), 0);
    for (int v : lam.entries()) ++cnt[v - 1];
    return cnt;
}

inline long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f = checked_mul(f, i);
    return f;
}

// sorted orbit representative and the orbit size n!/(n_1!...n_r!)
inline std::pair<ResidueTuple, long long> orbit_rep(const ResidueTuple& lam) {
    std::vector<int> e = lam.entries();
    std::sort(e.begin(), e.end());
    long long size = factorial(lam.n());
    for (int c : value_counts(lam)) size /= factorial(c);
    return {ResidueTuple(lam.r(), std::move(e)), size};
}

inline bool is_sorted_rep(const ResidueTuple& lam) {
    return std::is_sorted(lam.entries().begin(), lam.entries().end());
}

// all r^n tuples, lexicographic
inline std::vector<ResidueTuple> all_tuples(int r, int n) {
    std::vector<ResidueTuple> out;
    std::vector<int> e(n, 1);
    while (true) {
        out.emplace_back(r, e);
        int i = n - 1;
        while (i >= 0 && e[i] == r) e[i--] = 1;
        if (i < 0) break;
        ++e[i];
    }
    return out;
}

// orbit representatives = weakly increasing tuples
inline std::vector<ResidueTuple> sorted_reps(int r, int n) {
    std::vector<ResidueTuple> out;
    for (const auto& t : all_tuples(r, n))
        if (is_sorted_rep(t)) out.push_back(t);
    return out;
}

inline std::vector<ResidueTuple> orbit_of(const ResidueTuple& lam) {
    std::set<ResidueTuple> seen;
    for (const auto& w : all_perms(lam.n())) seen.insert(act(w, lam));
    return {seen.begin(), seen.end()};
}

} // namespace ayh
