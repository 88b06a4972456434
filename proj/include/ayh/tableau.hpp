#pragma once

#include "ayh/residue.hpp"

namespace ayh {

// r-tuple of tableaux filled with 1..n without repeats. Component k is stored
// as its rows, so comps()[k][row][col] is an entry.
class Multitableau {
public:
    Multitableau(int r, int n, std::vector<std::vector<std::vector<int>>> comps)
        : r_(r), n_(n), comps_(std::move(comps)) {
        if (static_cast<int>(comps_.size()) != r)
            throw std::invalid_argument("Multitableau: wrong number of components");
        std::vector<char> seen(n_ + 1, 0);
        int total = 0;
        for (const auto& comp : comps_)
            for (const auto& row : comp)
                for (int v : row) {
                    if (v < 1 || v > n_ || seen[v])
                        throw std::invalid_argument("Multitableau: entries must be 1..n without repeats");
                    seen[v] = 1;
                    ++total;
                }
        if (total != n_) throw std::invalid_argument("Multitableau: wrong number of entries");
        for (const auto& comp : comps_)
            for (size_t i = 0; i + 1 < comp.size(); ++i)
                if (comp[i].size() < comp[i + 1].size())
                    throw std::invalid_argument("Multitableau: shape is not a partition");
    }

    int r() const { return r_; }
    int n() const { return n_; }
    const std::vector<std::vector<std::vector<int>>>& comps() const { return comps_; }

    // partition shape of each component
    std::vector<std::vector<int>> shape() const {
        std::vector<std::vector<int>> sh(r_);
        for (int k = 0; k < r_; ++k)
            for (const auto& row : comps_[k]) sh[k].push_back(static_cast<int>(row.size()));
        return sh;
    }

    bool is_standard() const {
        for (const auto& comp : comps_) {
            for (const auto& row : comp)
                for (size_t j = 0; j + 1 < row.size(); ++j)
                    if (row[j] >= row[j + 1]) return false;
            for (size_t i = 0; i + 1 < comp.size(); ++i)
                for (size_t j = 0; j < comp[i + 1].size(); ++j)
                    if (comp[i][j] >= comp[i + 1][j]) return false;
        }
        return true;
    }

    bool is_one_column() const {
        for (const auto& comp : comps_)
            for (const auto& row : comp)
                if (row.size() != 1) return false;
        return true;
    }

    // component index holding entry j
    int p(int j) const {
        for (int k = 0; k < r_; ++k)
            for (const auto& row : comps_[k])
                for (int v : row)
                    if (v == j) return k + 1;
        throw std::invalid_argument("Multitableau::p: no such entry");
    }

    friend bool operator==(const Multitableau& a, const Multitableau& b) = default;

    std::string str() const {
        std::string out;
        for (int k = 0; k < r_; ++k) {
            if (k) out += " | ";
            out += std::to_string(k + 1) + ":";
            if (comps_[k].empty()) out += "()";
            for (const auto& row : comps_[k]) {
                out += "(";
                for (size_t j = 0; j < row.size(); ++j) {
                    if (j) out += ",";
                    out += std::to_string(row[j]);
                }
                out += ")";
            }
        }
        return out;
    }

private:
    int r_;
    int n_;
    std::vector<std::vector<std::vector<int>>> comps_;
};

// The greedy construction: place j at the bottom of the (single) column of
// component lambda_j. Yields the standard one-column multitableau paired with
// the tuple by the bijection.
inline Multitableau tableau_from_tuple(const ResidueTuple& lam) {
    std::vector<std::vector<std::vector<int>>> comps(lam.r());
    for (int j = 1; j <= lam.n(); ++j) comps[lam[j] - 1].push_back({j});
    return Multitableau(lam.r(), lam.n(), std::move(comps));
}

// inverse direction: entries (p_t(1), ..., p_t(n))
inline ResidueTuple tuple_from_tableau(const Multitableau& t) {
    if (!t.is_one_column()) throw std::invalid_argument("tuple_from_tableau: shape must be one-column");
    if (!t.is_standard()) throw std::invalid_argument("tuple_from_tableau: tableau must be standard");
    std::vector<int> e(t.n());
    for (int j = 1; j <= t.n(); ++j) e[j - 1] = t.p(j);
    return ResidueTuple(t.r(), std::move(e));
}

// all standard one-column multitableaux of size n with r components,
// enumerated independently of the bijection
inline std::vector<Multitableau> all_one_column_standard(int r, int n) {
    std::vector<Multitableau> out;
    std::vector<int> assign(n, 1); // component of each entry
    while (true) {
        std::vector<std::vector<std::vector<int>>> comps(r);
        for (int j = 1; j <= n; ++j) comps[assign[j - 1] - 1].push_back({j});
        out.emplace_back(r, n, std::move(comps));
        int i = n - 1;
        while (i >= 0 && assign[i] == r) assign[i--] = 1;
        if (i < 0) break;
        ++assign[i];
    }
    return out;
}

} // namespace ayh
