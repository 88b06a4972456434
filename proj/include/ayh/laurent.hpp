#pragma once

#include <map>
#include <string>

#include "ayh/rational.hpp"

namespace ayh {

inline long long coeff_add(long long a, long long b) { return checked_add(a, b); }
inline long long coeff_mul(long long a, long long b) { return checked_mul(a, b); }
inline long long coeff_neg(long long a) { return checked_mul(a, -1); }
inline bool coeff_is_zero(long long a) { return a == 0; }
inline std::string coeff_str(long long a) { return std::to_string(a); }

inline Rational coeff_add(const Rational& a, const Rational& b) { return a + b; }
inline Rational coeff_mul(const Rational& a, const Rational& b) { return a * b; }
inline Rational coeff_neg(const Rational& a) { return -a; }
inline bool coeff_is_zero(const Rational& a) { return a.is_zero(); }
inline std::string coeff_str(const Rational& a) { return a.str(); }

// Sparse Laurent polynomial in q. Zero coefficients are never stored, so
// equality of the term maps is equality in the ring.
template <class C>
class BasicLaurent {
public:
    using coeff_type = C;

    BasicLaurent() = default;
    BasicLaurent(C constant) { add_term(0, constant); }

    static BasicLaurent monomial(C c, int exp) {
        BasicLaurent p;
        p.add_term(exp, c);
        return p;
    }

    const std::map<int, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 &&
               !coeff_is_zero(coeff_add(terms_.begin()->second, coeff_neg(C(1))));
    }

    void add_term(int exp, const C& c) {
        if (coeff_is_zero(c)) return;
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            terms_.emplace(exp, c);
        } else {
            it->second = coeff_add(it->second, c);
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    friend BasicLaurent operator+(const BasicLaurent& a, const BasicLaurent& b) {
        BasicLaurent r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend BasicLaurent operator-(const BasicLaurent& a, const BasicLaurent& b) {
        BasicLaurent r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, coeff_neg(c));
        return r;
    }
    BasicLaurent operator-() const {
        BasicLaurent r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, coeff_neg(c));
        return r;
    }
    friend BasicLaurent operator*(const BasicLaurent& a, const BasicLaurent& b) {
        BasicLaurent r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(checked_add(ea, eb), coeff_mul(ca, cb));
        return r;
    }
    BasicLaurent& operator+=(const BasicLaurent& o) { return *this = *this + o; }
    BasicLaurent& operator-=(const BasicLaurent& o) { return *this = *this - o; }
    BasicLaurent& operator*=(const BasicLaurent& o) { return *this = *this * o; }

    BasicLaurent pow(int k) const {
        if (k < 0) throw std::invalid_argument("negative power of a polynomial");
        BasicLaurent r{C(1)};
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    // q^m -> q^-m on every term
    BasicLaurent bar() const {
        BasicLaurent r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
        return r;
    }

    // the part with strictly negative exponents
    BasicLaurent negative_part() const {
        BasicLaurent r;
        for (const auto& [e, c] : terms_)
            if (e < 0) r.terms_.emplace(e, c);
        return r;
    }

    C coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? C(0) : it->second;
    }

    int min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    friend bool operator==(const BasicLaurent& a, const BasicLaurent& b) = default;
    friend auto operator<=>(const BasicLaurent& a, const BasicLaurent& b) = default;

    // canonical text: terms by descending exponent, e.g. "q^2 - 2 + q^-2"
    std::string str(const std::string& var = "q") const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            auto [e, c] = *it;
            std::string cs = coeff_str(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            bool unit_coeff = (cs == "1");
            if (e == 0) {
                out += cs;
            } else {
                if (!unit_coeff) {
                    out += cs;
                    if (cs.find('/') != std::string::npos) out += "*";
                }
                out += var;
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    std::map<int, C> terms_;
};

using LaurentZ = BasicLaurent<long long>; // the ring A = Z[q, q^-1]
using LaurentQ = BasicLaurent<Rational>;

inline LaurentZ laurent_gap() { // q - q^-1, the coefficient in every quadratic relation
    LaurentZ p;
    p.add_term(1, 1);
    p.add_term(-1, -1);
    return p;
}

inline LaurentQ laurentq_of(const LaurentZ& a) {
    LaurentQ r;
    for (const auto& [e, c] : a.terms()) r.add_term(e, Rational(c));
    return r;
}

} // namespace ayh
