#pragma once

#include <vector>

#include "ayh/laurent.hpp"

namespace ayh {

// Coefficients of the r-th cyclotomic polynomial, ascending degree.
// Computed by exact division of x^r - 1 by the cyclotomic factors of the
// proper divisors of r.
inline const std::vector<long long>& cyclotomic_poly(int r) {
    static std::map<int, std::vector<long long>> cache;
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;
    if (r < 1) throw std::invalid_argument("cyclotomic_poly: r must be positive");

    // x^r - 1
    std::vector<long long> num(r + 1, 0);
    num[0] = -1;
    num[r] = 1;
    for (int d = 1; d < r; ++d) {
        if (r % d != 0) continue;
        const auto& phi_d = cyclotomic_poly(d);
        // exact division num /= phi_d (phi_d is monic)
        std::vector<long long> quot(num.size() - phi_d.size() + 1, 0);
        for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
            long long lead = num[i + phi_d.size() - 1];
            quot[i] = lead;
            for (size_t j = 0; j < phi_d.size(); ++j)
                num[i + j] = checked_sub(num[i + j], checked_mul(lead, phi_d[j]));
        }
        for (long long rem : num)
            if (rem != 0) throw std::logic_error("cyclotomic_poly: division not exact");
        num = std::move(quot);
    }
    return cache.emplace(r, std::move(num)).first->second;
}

// An element of Z[1/r][q, q^-1][z] with z a primitive r-th root of unity,
// i.e. arithmetic mod the r-th cyclotomic polynomial. Stored as coefficients
// of z^k for k < deg Phi_r, each a Laurent polynomial in q over Q whose
// denominators only ever involve the prime factors of r.
//
// r == 0 marks the universal zero, usable with any modulus.
class Cyclotomic {
public:
    Cyclotomic() = default;
    explicit Cyclotomic(int r) : r_(r), comp_(degree(r)) {
        if (r < 1) throw std::invalid_argument("Cyclotomic: r must be positive");
    }

    static int degree(int r) { return static_cast<int>(cyclotomic_poly(r).size()) - 1; }

    static Cyclotomic zero(int r) { return Cyclotomic(r); }
    static Cyclotomic one(int r) { return from_laurent(r, LaurentQ(Rational(1))); }

    static Cyclotomic from_laurent(int r, const LaurentQ& a) {
        Cyclotomic c(r);
        if (degree(r) > 0) c.comp_[0] = a;
        else if (!a.is_zero()) throw std::logic_error("Cyclotomic: zero-degree modulus");
        return c;
    }
    static Cyclotomic from_laurent(int r, const LaurentZ& a) { return from_laurent(r, laurentq_of(a)); }
    static Cyclotomic rational(int r, const Rational& x) { return from_laurent(r, LaurentQ(x)); }

    // z^k reduced mod Phi_r
    static Cyclotomic zeta_pow(int r, long long k) {
        std::vector<LaurentQ> raw(((k % r) + r) % r + 1);
        raw.back() = LaurentQ(Rational(1));
        return reduce_raw(r, std::move(raw));
    }

    int r() const { return r_; }
    const std::vector<LaurentQ>& comps() const { return comp_; }

    bool is_zero() const {
        for (const auto& c : comp_)
            if (!c.is_zero()) return false;
        return true;
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.r_ == 0) return b;
        if (b.r_ == 0) return a;
        check_same(a, b);
        Cyclotomic r = a;
        for (size_t k = 0; k < b.comp_.size(); ++k) r.comp_[k] += b.comp_[k];
        return r;
    }
    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& c : r.comp_) c = -c;
        return r;
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.r_ == 0 || b.r_ == 0) return Cyclotomic();
        check_same(a, b);
        std::vector<LaurentQ> raw(2 * a.comp_.size());
        for (size_t i = 0; i < a.comp_.size(); ++i) {
            if (a.comp_[i].is_zero()) continue;
            for (size_t j = 0; j < b.comp_.size(); ++j)
                raw[i + j] += a.comp_[i] * b.comp_[j];
        }
        return reduce_raw(a.r_, std::move(raw));
    }
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.r_ == 0) return b.is_zero();
        if (b.r_ == 0) return a.is_zero();
        check_same(a, b);
        return a.comp_ == b.comp_;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out = "(";
        bool first = true;
        for (size_t k = 0; k < comp_.size(); ++k) {
            if (comp_[k].is_zero()) continue;
            if (!first) out += " + ";
            first = false;
            std::string cs = comp_[k].str();
            if (k == 0) {
                out += cs;
            } else {
                if (cs == "1") cs.clear();
                else cs = "(" + cs + ")*";
                out += cs + "z";
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out + ")";
    }

private:
    static void check_same(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.r_ != b.r_) throw std::invalid_argument("Cyclotomic: mixed moduli");
    }

    static Cyclotomic reduce_raw(int r, std::vector<LaurentQ> raw) {
        const auto& phi = cyclotomic_poly(r);
        int deg = static_cast<int>(phi.size()) - 1;
        for (int i = static_cast<int>(raw.size()) - 1; i >= deg; --i) {
            if (raw[i].is_zero()) continue;
            LaurentQ lead = raw[i];
            raw[i] = LaurentQ();
            for (int j = 0; j < deg; ++j)
                raw[i - deg + j] -= lead * LaurentQ(Rational(phi[j]));
        }
        Cyclotomic out(r);
        for (int j = 0; j < deg && j < static_cast<int>(raw.size()); ++j) out.comp_[j] = raw[j];
        return out;
    }

    int r_ = 0;
    std::vector<LaurentQ> comp_;
};

} // namespace ayh
